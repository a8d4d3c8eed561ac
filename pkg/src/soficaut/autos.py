"""Marker automorphisms and invertibility certificates."""

from dataclasses import dataclass, field
from itertools import product

from . import rules
from .errors import MarkerViolation, NotAllowable, NotCertified
from .rules import BlockCode, MISSING, compose, identity_code
from .shift import is_synchronizing


@dataclass(frozen=True)
class MarkerSystem:
    """Markers ``left``/``right``, data words and their images under a permutation.

    ``images[i]`` is the image of ``data[i]``.
    """

    left: str
    right: str
    data: tuple
    images: tuple

    @classmethod
    def from_perm(cls, left, right, perm):
        data = tuple(perm)
        return cls(left, right, data, tuple(perm[d] for d in data))

    @classmethod
    def swap(cls, left, right, d1, d2):
        return cls(left, right, (d1, d2), (d2, d1))

    @property
    def perm(self):
        return dict(zip(self.data, self.images))

    @property
    def n(self):
        return len(self.data[0]) if self.data else 0

    def block(self, d):
        return self.left + d + self.right

    def inverse(self):
        return MarkerSystem(self.left, self.right, self.images, self.data)

    def order(self):
        perm = self.perm
        m = 1
        for d in self.data:
            # order of tau is the lcm of its cycle lengths
            k, e = 1, perm[d]
            while e != d:
                e, k = perm[e], k + 1
            m = m * k // _gcd(m, k)
        return m

    def to_json(self):
        return {"left": self.left, "right": self.right,
                "data": list(self.data), "images": list(self.images)}

    @classmethod
    def from_json(cls, data):
        return cls(data["left"], data["right"], tuple(data["data"]), tuple(data["images"]))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: dict = field(default_factory=dict)

    def __str__(self):
        parts = ", ".join(f"{k}={v!r}" for k, v in self.detail.items())
        return f"{self.kind}({parts})"


def overlaps(s, t):
    """Lengths ``0 < i < max(|s|, |t|)`` where a suffix of ``s`` is a prefix of ``t``."""
    top = min(len(s), len(t))
    return [i for i in range(1, top + 1) if s[-i:] == t[:i] and not (i == len(s) == len(t))]


def max_overlap(ms):
    blocks = [ms.block(d) for d in ms.data]
    return max((i for s, t in product(blocks, repeat=2) for i in overlaps(s, t)), default=0)


def validate_marker_system(c, ms):
    """Return ``None`` when the system is usable, else the first :class:`Violation`."""
    for name, m in (("left", ms.left), ("right", ms.right)):
        try:
            ok = is_synchronizing(c, m)
        except NotAllowable:
            return Violation("NotAllowable", {"word": m})
        if not ok:
            return Violation("NonSynchronizingMarker", {"marker": name, "word": m})
    for d in ms.data:
        if not c.step(c.states, ms.block(d)):
            return Violation("NotAllowable", {"word": ms.block(d)})
    if len({len(d) for d in ms.data}) > 1:
        return Violation("UnequalDataLength", {"lengths": sorted({len(d) for d in ms.data})})
    if not ms.data or sorted(ms.images) != sorted(ms.data) or len(set(ms.data)) != len(ms.data):
        return Violation("NotPermutation", {"data": list(ms.data), "images": list(ms.images)})
    limit = min(len(ms.left), len(ms.right))
    for d, e in product(ms.data, repeat=2):
        for i in overlaps(ms.block(d), ms.block(e)):
            if i > limit:
                return Violation("OverlapViolation", {"d": d, "d2": e, "length": i})
    return None


def marker_radius(ms):
    """Smallest symmetric radius that sees every block covering the center's data slot."""
    return max(len(ms.left), len(ms.right)) + ms.n - 1


def marker_rule(c, ms, scan="ltr"):
    """Decision diagram for the marker code; ``scan`` picks which occurrence wins a tie."""
    radius = marker_radius(ms)
    patterns = [(ms.block(d), img) for d, img in zip(ms.data, ms.images)]
    prefixes = {s[:i] for s, _ in patterns for i in range(len(s) + 1)}
    slot = len(ms.left)
    n = ms.n
    memo = {}

    def advance(ac, a):
        key = (ac, a)
        if key not in memo:
            s = ac + a
            while s not in prefixes:
                s = s[1:]
            ends = [(len(p), img) for p, img in patterns if s.endswith(p)]
            memo[key] = (s, ends)
        return memo[key]

    def step(t, state, a):
        ac, center, out = state
        ac, ends = advance(ac, a)
        for length, img in ends:
            off = radius - (t - length + 1) - slot
            if 0 <= off < n and (out is None or scan == "rtl"):
                out = img[off]
        if t == radius:
            center = a
        return ac, center, out

    def leaf(state):
        return state[2] if state[2] is not None else state[1]

    return rules.build(c, 2 * radius + 1, ("", None, None), step, leaf)


@dataclass(eq=False)
class Automorphism:
    """A block code with a certified inverse.

    ``certificate`` is ``"marker"`` (finite-order marker code), ``"inverse"``
    (both compositions with the inverse checked to be the identity),
    ``"order"`` (some power checked to be the identity), ``"shift"`` or
    ``"composition"`` of certified automorphisms.
    """

    code: BlockCode
    inverse: BlockCode
    certificate: str
    order: int = None
    name: str = None

    @property
    def radius(self):
        return self.code.radius

    def inv(self):
        order = self.order
        name = f"{self.name}^-1" if self.name else None
        return Automorphism(self.inverse, self.code, self.certificate, order, name)

    def __mul__(self, other):
        return compose_automorphisms(self, other)

    def __repr__(self):
        return f"Automorphism({self.name or '?'}, radius={self.radius}, {self.certificate})"


def compose_automorphisms(f, g):
    name = f"{f.name or '?'} {g.name or '?'}"
    return Automorphism(compose(f.code, g.code), compose(g.inverse, f.inverse),
                        "composition", None, name)


def marker_to_code(c, ms, name=None):
    """Compile a validated marker system into its automorphism."""
    v = validate_marker_system(c, ms)
    if v is not None:
        raise MarkerViolation(v)
    r = marker_radius(ms)
    code = BlockCode(c, r, marker_rule(c, ms), marker=ms, name=name or "g")
    inv = ms.inverse()
    inverse = BlockCode(c, r, marker_rule(c, inv), marker=inv, name=f"{name or 'g'}^-1")
    return Automorphism(code, inverse, "marker", ms.order(), name or "g")


def shift_automorphism(c, j=1):
    return Automorphism(rules.shift_power_code(j, c), rules.shift_power_code(-j, c),
                        "shift", None, f"sigma^{j}")


def identity_automorphism(c):
    ident = identity_code(c)
    return Automorphism(ident, ident, "shift", 1, "id")


def is_endomorphism(c, g):
    """Is the image of the shift under ``g`` contained in the shift?

    Builds the labeled graph of a cover path together with the sliding
    windows in flight, keeps its essential part, and checks its language
    against the cover by a subset walk.
    """
    rule = g.rule
    nodes = rule.nodes
    width = rule.width
    idx = c.index
    start = [(q, ()) for q in range(c.n)]
    seen = set(start)
    todo = list(start)
    edges = []
    while todo:
        q, active = todo.pop()
        for a, t in c.delta[q].items():
            i = idx[a]
            nxt = [nodes[n][i] for n in active] + [nodes[rule.root][i]]
            if MISSING in nxt:
                raise ValueError("rule is not total on allowable windows")
            label = None
            if len(nxt) == width:
                label = c.alphabet[-nxt.pop(0) - 2]
            state = (t, tuple(nxt))
            if label is not None:
                edges.append(((q, active), label, state))
            if state not in seen:
                seen.add(state)
                todo.append(state)
    live = {s for s, _, _ in edges} & {t for _, _, t in edges}
    while True:
        out_ok = {s for s, _, t in edges if s in live and t in live}
        in_ok = {t for s, _, t in edges if s in live and t in live}
        nxt = live & out_ok & in_ok
        if nxt == live:
            break
        live = nxt
    succ = {}
    for s, a, t in edges:
        if s in live and t in live:
            succ.setdefault((s, a), set()).add(t)
    alphabet = c.alphabet
    init = [(frozenset([s]), c.states) for s in live]
    seen = set(init)
    todo = list(init)
    while todo:
        group, states = todo.pop()
        for a in alphabet:
            ng = frozenset(t for s in group for t in succ.get((s, a), ()))
            if not ng:
                continue
            ns = c.step(states, a)
            if not ns:
                return False
            item = (ng, ns)
            if item not in seen:
                seen.add(item)
                todo.append(item)
    return True


def power(g, m):
    out = g
    for _ in range(m - 1):
        out = compose(g, out)
    return out


def certify_automorphism(c, g, inverse_hint=None, order_bound=2, check_image=True):
    """Certify invertibility with an inverse hint or a finite order.

    Raises
    ------
    NotCertified
        When neither route succeeds; this does not prove ``g`` is not
        invertible.
    """
    if check_image and not is_endomorphism(c, g):
        raise ValueError("code does not map the shift into itself")
    if inverse_hint is not None:
        if compose(g, inverse_hint).is_identity() and compose(inverse_hint, g).is_identity():
            return Automorphism(g, inverse_hint, "inverse", None, g.name)
        raise NotCertified(order_bound)
    p = g
    for m in range(1, order_bound + 1):
        if m > 1:
            p = compose(g, p)
        if p.is_identity():
            inverse = power(g, m - 1) if m > 1 else g
            return Automorphism(g, inverse, "order", m, g.name)
    raise NotCertified(order_bound)


def is_involution(c, g, method="auto"):
    """``g o g == id`` decided at the level of rules.

    ``method="exhaustive"`` composes the two diagrams and compares with the
    identity.  ``method="marker"`` applies to marker codes: once the overlap
    condition holds the occurrences of marker blocks in ``x`` and ``gx``
    sit at the same places, so ``g_t o g_s = g_(ts)`` and the question
    reduces to ``tau**2 == id``.  ``"auto"`` uses the marker route for
    marker codes and the exhaustive one otherwise.
    """
    code = getattr(g, "code", g)
    if method == "auto":
        method = "marker" if code.marker is not None else "exhaustive"
    if method == "marker":
        ms = code.marker
        if ms is None:
            raise ValueError("not a marker code")
        if validate_marker_system(c, ms) is not None:
            return False
        return ms.order() <= 2
    return compose(code, code).is_identity()


def group_words(auts, max_length, reduced=True):
    """Products of the given automorphisms and inverses, shortlex, length 1..max_length."""
    letters = []
    for g in auts:
        letters.append((g, 1))
        letters.append((g, -1))
    for n in range(1, max_length + 1):
        for combo in product(range(len(letters)), repeat=n):
            if reduced and any(letters[a][0] is letters[b][0] and letters[a][1] != letters[b][1]
                               for a, b in zip(combo, combo[1:])):
                continue
            word = [letters[i][0] if letters[i][1] == 1 else letters[i][0].inv() for i in combo]
            out = word[0]
            for w in word[1:]:
                out = compose_automorphisms(out, w)
            yield out
