"""Constructive versions of the marker, center and cylinder-mapping arguments.

Every existence statement becomes a bounded, deterministic search; ties are
broken shortest-lex and running out of room raises
:class:`~soficaut.errors.SearchExhausted`.
"""

from dataclasses import dataclass, field

from .autos import (
    Automorphism, MarkerSystem, compose_automorphisms, identity_automorphism,
    is_involution, marker_to_code, validate_marker_system,
)
from .errors import NeedWitness, NoConnector, NotProper, SearchExhausted
from .points import (
    EvPeriodicPoint, OrbitId, dot_action, enumerate_per_k, in_cylinder_m,
    is_primitive, is_proper_cylinder, is_synchronizing_point, orbit_id,
    project_pi, rotations, cylinder_extensions, sample_cylinder,
)
from .rules import rules_equal, shift_rule
from .shift import (
    connector, enumerate_words, extend_to_synchronizing, is_allowable,
    is_synchronizing, least_word, shift_period,
)


def self_overlaps(w):
    """Lengths ``0 < i < |w|`` with ``w[:i] == w[-i:]``."""
    return [i for i in range(1, len(w)) if w[:i] == w[-i:]]


def nonoverlap_sync_marker(c, n, bound=None):
    """A synchronizing word of length at least ``n`` with no self-overlap.

    A synchronizing ``w`` of length ``>= n`` and a connector ``u`` give
    the allowable ``wuw``.  Appending the shortest-lex ``v`` that makes
    ``P = wuwv`` primitive with ``P^inf`` in the shift, every rotation of
    ``P`` contains ``w``, so each is synchronizing, and the least rotation
    of a primitive word is unbordered.  The first rotation (in rotation
    order) passing both checks is returned.

    The period ``|P|`` is searched up to ``4 |wuw| + n_states`` unless a
    ``bound`` is given.
    """
    n = max(n, 1)
    w = extend_to_synchronizing(c, least_word(c, n))
    u = connector(c, w, w)
    base = w + u + w
    bound = 4 * len(base) + c.n if bound is None else bound
    for extra in range(bound - len(base) + 1):
        start = c.step(c.states, base)
        for v in enumerate_words(c, extra, start):
            p = base + v
            if not is_primitive(p) or not is_allowable(c, p + base):
                continue
            for rot in rotations(p):
                if not self_overlaps(rot) and is_synchronizing(c, rot):
                    return rot
    raise SearchExhausted("non-overlapping synchronizing marker", bound)


@dataclass(frozen=True)
class RyanSystem:
    marker: str
    n: int
    data: tuple
    R: int

    @property
    def orbits(self):
        return sorted({orbit_id(self.marker + d) for d in self.data})

    def covers(self, c):
        """Does every word of length ``2R+1`` sit inside some data word?"""
        m = 2 * self.R + 1
        seen = {d[i:i + m] for d in self.data for i in range(len(d) - m + 1)}
        return set(enumerate_words(c, m)) <= seen

    def to_json(self):
        return {"marker": self.marker, "n": self.n, "R": self.R, "data": list(self.data)}


def data_set(c, marker, n):
    """``{d in L_n : M d M allowable}`` in lexicographic order."""
    start = c.step(c.states, marker)
    return tuple(d for d in enumerate_words(c, n, start) if is_allowable(c, marker + d + marker))


def ryan_system(c, R, max_n=None):
    """Marker and data words whose data cover every ``(2R+1)``-block.

    ``n`` runs upward from ``2R+1`` and the marker is taken from
    :func:`nonoverlap_sync_marker` for the same ``n``; the first ``n``
    giving full coverage and at least two orbits wins.
    """
    lo = 2 * R + 1
    max_n = lo + 8 if max_n is None else max_n
    for n in range(lo, max_n + 1):
        marker = nonoverlap_sync_marker(c, n)
        data = data_set(c, marker, n)
        rs = RyanSystem(marker, n, data, R)
        if n > len(marker) or len(rs.orbits) < 2 or not rs.covers(c):
            continue
        ms = MarkerSystem(marker, marker, data, data)
        if validate_marker_system(c, ms) is None:
            return rs
    raise SearchExhausted(f"marker system for range {R}", max_n)


def identify_power_of_shift(c, g):
    """``j`` with ``|j| <= R`` when ``g`` equals ``sigma**j`` on windows, else ``None``."""
    code = getattr(g, "code", g)
    r = code.radius
    rule = code.rule
    for j in sorted(range(-r, r + 1), key=lambda j: (abs(j), j)):
        if rules_equal(rule, shift_rule(c, j, r)):
            return j
    return None


def orbit_permutation_auto(c, rs, perm, check=True, max_check_period=20):
    """Marker automorphism permuting the orbits ``(M d)^inf`` as ``perm`` does.

    With ``check`` the action is verified on every periodic orbit of period
    ``|M| + n`` (skipped above ``max_check_period``).
    """
    ms = MarkerSystem.from_perm(rs.marker, rs.marker, {d: perm.get(d, d) for d in rs.data})
    g = marker_to_code(c, ms, name="g_tau")
    if check:
        period = len(rs.marker) + rs.n
        want = {orbit_id(rs.marker + d, c): orbit_id(rs.marker + ms.perm[d], c) for d in rs.data}
        orbits = enumerate_per_k(c, period) if period <= max_check_period else list(want)
        for o in orbits:
            y = g.code.apply_point(EvPeriodicPoint.periodic(o.word))
            got = orbit_id(y.left, c)
            if got != want.get(o, o):
                raise AssertionError(f"orbit {o} sent to {got}, expected {want.get(o, o)}")
    return g


def sync_length(c, a):
    """Least ``l`` such that every ``l``-block of ``a^inf`` is synchronizing."""
    k = len(a)
    cap = max(c.n * k, 1)
    for ell in range(1, cap + 1):
        reps = a * (ell // k + 2)
        if all(is_synchronizing(c, reps[i:i + ell]) for i in range(k)):
            return ell
    raise SearchExhausted("synchronization length", cap)


def left_extension(a, u):
    """``u`` preceded by the part of its left tail needed to start with ``a``."""
    k = len(a)
    for s in range(k):
        if a[s:] + a[:s] == u[:k]:
            return a[:s] + u
    raise NotProper(f"{u!r} does not begin on the orbit of {a!r}")


@dataclass
class Prop31Certificate:
    automorphism: Automorphism
    case: str
    inputs: dict
    markers: list = field(default_factory=list)
    choices: dict = field(default_factory=dict)
    samples: list = field(default_factory=list)
    periodic: list = field(default_factory=list)
    involution: bool = None

    @property
    def verified(self):
        return (bool(self.samples) and all(s["ok"] for s in self.samples)
                and all(p["fixed"] for p in self.periodic)
                and self.involution is not False)

    def to_json(self):
        return {
            "case": self.case,
            "inputs": self.inputs,
            "markers": self.markers,
            "choices": self.choices,
            "involution": self.involution,
            "periodic": self.periodic,
            "samples": self.samples,
            "verified": self.verified,
        }


def _single_pair(c, k, a, w, ut, bound):
    """Swap ``a^(rp)`` and ``ut v`` between markers ``a^r`` and ``a^r w``."""
    p = shift_period(c)
    csync = sync_length(c, a)
    r0 = max(len(w), csync)
    for r in range(r0, r0 + bound + 1):
        need = r * p * k - len(ut)
        if need < 0:
            continue
        left, right = a * r, a * r + w
        try:
            v = connector(c, left + ut, right, length=need)
        except NoConnector:
            continue
        ms = MarkerSystem.swap(left, right, a * (r * p), ut + v)
        if validate_marker_system(c, ms) is None:
            return ms, {"r": r, "p": p, "c": csync, "v": v}
    raise SearchExhausted("cylinder marker length r", r0 + bound)


def prop31(c, k, m, w, u, h=None, bound=16, extra=3):
    """Automorphism moving ``[w]^m`` into ``[u]^m``, with a sampled transcript.

    Parameters
    ----------
    c : FischerCover
    k : int
        Least period of the orbit ``m``.
    m : OrbitId or str
    w, u : str
        Cylinder words; both cylinders must be nonempty and proper.
    h : Automorphism, optional
        Sends the orbit ``m`` to a synchronizing one; needed when ``m``
        itself is not synchronizing.
    bound : int
        How many values of ``r`` past the least admissible one are tried.
    extra : int
        Sampled points extend the cylinder word by at most this many
        symbols before their right period.

    Raises
    ------
    NotProper, NeedWitness, SearchExhausted
    """
    m = m if isinstance(m, OrbitId) else orbit_id(m, c)
    inputs = {"k": k, "m": m.word, "w": w, "u": u}
    for word in (w, u):
        if not is_proper_cylinder(c, k, m, word):
            raise NotProper(f"[{word}] is empty or everything in the fiber of {m}")
    if not is_synchronizing_point(c, m.word):
        if h is None:
            raise NeedWitness(f"orbit {m} is not synchronizing; supply an automorphism")
        return _case2(c, k, m, w, u, h, bound, extra, inputs)

    w1 = w if len(w) > k else cylinder_extensions(c, k, m, w, k + 1)[0]
    u1 = u if len(u) > k else cylinder_extensions(c, k, m, u, k + 1)[0]
    a = w1[:k]
    if self_overlaps(a):
        raise AssertionError(f"period word {a!r} overlaps itself")
    ut = left_extension(a, u1)
    choices = {"w": w1, "u_tilde": ut, "a": a}

    if w1.startswith(ut):
        g = identity_automorphism(c)
        cert = Prop31Certificate(g, "identity", inputs, choices=choices)
    elif ut.startswith(w1):
        factors = []
        markers = []
        for wb in cylinder_extensions(c, k, m, w1, len(ut)):
            if wb == ut:
                continue
            ms, ch = _single_pair(c, k, a, wb, ut, bound)
            factors.append(marker_to_code(c, ms, name=f"g_{wb[len(w1):]}"))
            markers.append(ms.to_json())
            choices.setdefault("parts", []).append({"w": wb, **ch})
        g = factors[0]
        for f in factors[1:]:
            g = compose_automorphisms(g, f)
        g.name = "g"
        cert = Prop31Certificate(g, "family", inputs, markers, choices)
    else:
        ms, ch = _single_pair(c, k, a, w1, ut, bound)
        g = marker_to_code(c, ms, name="g")
        choices.update(ch)
        cert = Prop31Certificate(g, "pair", inputs, [ms.to_json()], choices)
        cert.involution = is_involution(c, g)
    _transcript(c, k, m, w, u, cert, extra)
    return cert


def _case2(c, k, m, w, u, h, bound, extra, inputs):
    """Conjugate by ``h``: move both cylinders over, map there, move back.

    The image cylinders are read off the sampled images: ``w'`` is the
    longest common prefix of ``h [w]`` and ``u'`` is the image prefix of
    one point of ``[u]`` long enough to pin the ``h^-1`` image into ``[u]``.
    The final containment is then checked on the samples like Case 1.
    """
    mh = project_pi(dot_action(h, sample_cylinder(c, k, m, w, extra)[0]), c)
    imgs_w = [dot_action(h, y).point for y in sample_cylinder(c, k, m, w, extra)]
    span = max(len(w), len(u)) + 2 * (h.code.radius + h.inverse.radius) + k
    words = [y.word(0, span) for y in imgs_w]
    wp = words[0]
    for s in words[1:]:
        i = 0
        while i < min(len(wp), len(s)) and wp[i] == s[i]:
            i += 1
        wp = wp[:i]
    y0 = dot_action(h, sample_cylinder(c, k, m, u, extra)[0]).point
    up = y0.word(0, span)
    inner = prop31(c, k, mh, wp, up, None, bound, extra)
    hinv = h.inv()
    g = compose_automorphisms(hinv, compose_automorphisms(inner.automorphism, h))
    g.name = "h^-1 g h"
    cert = Prop31Certificate(g, "conjugate", inputs, inner.markers,
                             {"w_image": wp, "u_image": up, "inner": inner.choices})
    _transcript(c, k, m, w, u, cert, extra)
    return cert


def _transcript(c, k, m, w, u, cert, extra):
    g = cert.automorphism
    for j in range(1, k + 1):
        for o in enumerate_per_k(c, j):
            y = g.code.apply_point(EvPeriodicPoint.periodic(o.word))
            cert.periodic.append({"orbit": o.word, "fixed": orbit_id(y.left, c) == o})
    for y in sample_cylinder(c, k, m, w, extra):
        z = dot_action(g, y)
        cert.samples.append({"point": str(y), "image": str(z),
                             "ok": in_cylinder_m(z.point, u, m, k)})


@dataclass
class MinimalityWitness:
    automorphism: Automorphism
    certificate: Prop31Certificate
    checks: list

    @property
    def verified(self):
        return self.certificate.verified and bool(self.checks) and all(ok for _, ok in self.checks)


def minimality_witness(c, k, m, u, w, **kw):
    """An involution ``g`` with ``[w]^m`` inside ``g [u]^m``, checked on samples."""
    cert = prop31(c, k, m, w, u, **kw)
    g = cert.automorphism
    m = m if isinstance(m, OrbitId) else orbit_id(m, c)
    checks = []
    for y in sample_cylinder(c, k, m, w):
        z = dot_action(g.inv(), y)
        checks.append((str(y), in_cylinder_m(z.point, u, m, k)))
    return MinimalityWitness(g, cert, checks)


@dataclass
class PingPongReport:
    ok: bool
    length: int
    words_checked: int
    sample_size: int
    violation: str = None

    def __str__(self):
        if self.ok:
            return (f"ok: no reduced word of length <= {self.length} fixes all "
                    f"{self.sample_size} sampled points ({self.words_checked} words)")
        return f"violation: {self.violation} fixes every sampled point"


def pingpong(generators, sample, L, names=None):
    """First reduced word of length ``<= L`` that fixes every sample point.

    Letters are ordered ``g1, g1^-1, g2, g2^-1, ...`` and words are tried
    shortlex; a word acts right to left.  Points are compared after
    renormalizing into ``Q_k``.
    """
    names = names or [f"g{i + 1}" for i in range(len(generators))]
    letters = []
    for g, name in zip(generators, names):
        letters.append((g, name, 1))
        letters.append((g.inv(), f"{name}^-1", -1))
    sample = list(sample)
    level = {(): sample}
    checked = 0
    for n in range(1, L + 1):
        nxt = {}
        for word, pts in level.items():
            for i, (g, _, _) in enumerate(letters):
                if word and i // 2 == word[0] // 2 and i != word[0]:
                    continue
                imgs = [dot_action(g, y) for y in pts]
                nxt[(i,) + word] = imgs
        for word in sorted(nxt):
            checked += 1
            if nxt[word] == sample:
                text = " ".join(letters[i][1] for i in word)
                return PingPongReport(False, L, checked, len(sample), text)
        level = nxt
    return PingPongReport(True, L, checked, len(sample))


def hyperbolic(c, k, m, attract, repel, **kw):
    """``s' s`` where ``s`` moves ``[attract]`` into ``[repel]`` and ``s'`` moves it back.

    Each pass through the pair lengthens the prefix, so points of
    ``[attract]`` are pushed deeper into it and the product has infinite
    order.
    """
    s = prop31(c, k, m, attract, repel, **kw).automorphism
    t = prop31(c, k, m, repel, attract, **kw).automorphism
    g = compose_automorphisms(t, s)
    g.name = f"h[{attract}|{repel}]"
    return g


def pingpong_check(c, k, m, A, B, L, extra=2):
    """Evidence that two cylinder-built automorphisms generate a free group.

    A third cylinder ``C`` disjoint from both serves as the common
    repelling side: ``g1`` pushes points out of ``[C]`` into ``[A]`` and
    ``g2`` pushes them into ``[B]``.  Sharing ``C`` keeps the supports
    overlapping, so the two do not commute.  The reduced words in
    ``g1, g2`` are run through :func:`pingpong` on points sampled from the
    three cylinders.  Passing is evidence only.
    """
    m = m if isinstance(m, OrbitId) else orbit_id(m, c)
    if A.startswith(B) or B.startswith(A):
        raise NotProper(f"cylinders [{A}] and [{B}] are not disjoint")
    C = _disjoint_cylinder(c, k, m, [A, B])
    g1 = hyperbolic(c, k, m, A, C)
    g2 = hyperbolic(c, k, m, B, C)
    sample = []
    for word in (A, B, C):
        sample.extend(sample_cylinder(c, k, m, word, extra))
    return pingpong([g1, g2], sample, L)


def _disjoint_cylinder(c, k, m, taken):
    length = max(max(len(t) for t in taken), k) + 1
    for n in range(length, length + 4):
        for p in cylinder_extensions(c, k, m, "", n):
            if any(p.startswith(t) or t.startswith(p) for t in taken):
                continue
            if is_proper_cylinder(c, k, m, p):
                return p
    raise SearchExhausted("disjoint cylinder", length + 3)
