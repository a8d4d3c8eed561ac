"""Periodic and bi-eventually-periodic points.

An :class:`EvPeriodicPoint` is ``...LLL c RRR...`` with ``c`` starting at
index ``anchor``.  Its normal form pushes the left tail as far right as it
goes, then the right tail as far left as it goes, so two values are equal
exactly when they denote the same sequence.  A periodic point is stored
with an empty center, ``L == R`` and ``anchor == 0``.

Left-``k``-periodic points up to ``k`` (the set ``Q_k``) are the non-periodic
points whose left period has length ``k`` and whose center starts at ``k``.
"""

import enum
from dataclasses import dataclass

from .errors import NotLeftPeriodic
from .shift import enumerate_words, is_allowable


def primitive_root(w):
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def is_primitive(w):
    return bool(w) and primitive_root(w) == w


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))]


def least_rotation(w, key=None):
    return min(rotations(w), key=key)


@dataclass(frozen=True, order=True)
class OrbitId:
    """A shift orbit of periodic points, named by its least rotation."""

    word: str

    @property
    def k(self):
        return len(self.word)

    def __str__(self):
        return f"({self.word})"


def orbit_id(word, c=None):
    word = primitive_root(word)
    return OrbitId(least_rotation(word, key=c.key if c is not None else None))


@dataclass(frozen=True)
class EvPeriodicPoint:
    left: str
    center: str
    right: str
    anchor: int = 0

    def __post_init__(self):
        if not self.left or not self.right:
            raise ValueError("periodic tails must be nonempty")
        left = primitive_root(self.left)
        right = primitive_root(self.right)
        center, anchor = self.center, self.anchor
        while center and center[0] == left[0]:
            left, center, anchor = left[1:] + left[0], center[1:], anchor + 1
        if not center:
            while left != right and right[0] == left[0]:
                left, right, anchor = left[1:] + left[0], right[1:] + right[0], anchor + 1
        while center and center[-1] == right[-1]:
            right, center = right[-1] + right[:-1], center[:-1]
        if not center and left == right:
            s = -anchor % len(left)
            left = right = left[s:] + left[:s]
            anchor = 0
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "anchor", anchor)

    @classmethod
    def periodic(cls, word):
        return cls(word, "", word, 0)

    @property
    def is_periodic(self):
        return not self.center and self.left == self.right

    @property
    def end(self):
        """First index of the right tail."""
        return self.anchor + len(self.center)

    def at(self, i):
        if i < self.anchor:
            return self.left[(i - self.anchor) % len(self.left)]
        if i < self.end:
            return self.center[i - self.anchor]
        return self.right[(i - self.end) % len(self.right)]

    def word(self, i, j):
        """The block ``x[i:j]``."""
        return "".join(self.at(n) for n in range(i, j))

    def shift(self, j=1):
        """``sigma**j`` applied to the point."""
        return EvPeriodicPoint(self.left, self.center, self.right, self.anchor - j)

    def span(self, pad):
        """Finite word covering the center plus ``pad`` periods of each tail."""
        return self.left * pad + self.center + self.right * pad

    def __str__(self):
        return f"({self.left})^inf . {self.center} . ({self.right})^inf @ {self.anchor}"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: ``(a)^inf . c . (b)^inf @ anchor``."""
        body, _, anchor = text.partition("@")
        parts = [p.strip() for p in body.split(".")]
        if len(parts) != 3:
            raise ValueError(f"cannot parse point {text!r}")

        def tail(p):
            if not (p.startswith("(") and p.endswith(")^inf")):
                raise ValueError(f"bad periodic tail {p!r}")
            return p[1:-5]

        return cls(tail(parts[0]), parts[1], tail(parts[2]), int(anchor.strip() or 0))


def in_shift(c, x):
    """Membership of an eventually periodic point in the shift.

    Reading ``n + 1`` copies of each tail forces a repeated cover state, so
    a path for the finite span closes up into cycles on both sides.
    """
    return is_allowable(c, x.span(c.n + 1))


def periodic_in_shift(c, word):
    return is_allowable(c, word * (c.n + 1))


def enumerate_per_k(c, k):
    """Orbits of least period exactly ``k``, sorted by canonical word."""
    out = set()
    for w in enumerate_words(c, k):
        if is_primitive(w) and periodic_in_shift(c, w):
            out.add(orbit_id(w, c))
    return sorted(out, key=lambda o: c.key(o.word))


def is_synchronizing_point(c, word):
    """Does the periodic point ``word^inf`` contain a synchronizing word?

    Every block of the point sits inside some power of ``word``, so it is
    enough to iterate the follower sets of ``word, word^2, ...`` until they
    cycle.
    """
    states = c.states
    seen = set()
    while states not in seen:
        seen.add(states)
        states = c.step(states, word)
        if not states:
            raise ValueError(f"({word})^inf is not in the shift")
        if len(states) == 1:
            return True
    return False


class PointType(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    UNKNOWN = "unknown"


def _code(g):
    return getattr(g, "code", g)


def classify_type(c, word, auts=(), max_length=1):
    """Classify the orbit of ``word^inf``.

    Returns ``(PointType, witness)``.  The witness for type 2 is the first
    product of at most ``max_length`` given automorphisms (and their
    inverses) sending the point to a synchronizing one.  Type 3 is never
    certified; such points come back as ``UNKNOWN``.
    """
    if is_synchronizing_point(c, word):
        return PointType.TYPE1, None
    from .autos import group_words

    x = EvPeriodicPoint.periodic(word)
    for h in group_words(auts, max_length):
        y = h.code.apply_point(x)
        if is_synchronizing_point(c, y.left):
            return PointType.TYPE2, h
    return PointType.UNKNOWN, None


@dataclass(frozen=True)
class QkPoint:
    point: EvPeriodicPoint
    k: int

    def __post_init__(self):
        x = self.point
        if x.is_periodic or len(x.left) != self.k or x.anchor != self.k:
            raise NotLeftPeriodic(f"{x} is not left-{self.k}-periodic up to {self.k}")

    def __str__(self):
        return str(self.point)


def normalize_qk(x, k):
    """Shift a left-``k``-periodic point so its break index is ``k``."""
    if x.is_periodic or len(x.left) != k:
        raise NotLeftPeriodic(f"{x} does not have least left period {k}")
    return QkPoint(x.shift(x.anchor - k), k)


def cocycle_alpha(g, x):
    """The integer ``a`` with ``sigma**a (g x)`` back in ``Q_k``."""
    y = _code(g).apply_point(x.point)
    if y.is_periodic or len(y.left) != x.k:
        raise NotLeftPeriodic(f"image {y} is not left-{x.k}-periodic; not an automorphism?")
    return y.anchor - x.k


def dot_action(g, x):
    y = _code(g).apply_point(x.point)
    return normalize_qk(y, x.k)


def project_pi(x, c=None):
    return orbit_id(x.point.word(0, x.k), c)


def in_cylinder_m(x, w, m, k):
    """Is ``x`` in ``Q_k``, starting with ``w``, with left tail on orbit ``m``?"""
    if x.is_periodic or len(x.left) != k or x.anchor != k:
        return False
    if x.word(0, len(w)) != w:
        return False
    return x.word(0, k) in rotations(m.word)


def cylinder_prefixes(c, k, m, length):
    """Length-``length`` prefixes (``length > k``) of points in the fiber of ``m``.

    A word ``p`` qualifies when it begins with a rotation ``a`` of the orbit
    word, breaks the period at index ``k`` and ``a^(n+1) p`` is allowable.
    """
    assert length > k
    rots = set(rotations(m.word))
    out = []
    for a in sorted(rots, key=c.key):
        pad = a * (c.n + 1)
        for tail in enumerate_words(c, length - k, c.step(c.states, pad + a)):
            p = a + tail
            if p[k] != p[0] and is_allowable(c, pad + p):
                out.append(p)
    return sorted(out, key=c.key)


def cylinder_extensions(c, k, m, w, length=None):
    """Prefixes of the fiber of ``m`` that extend ``w``."""
    length = max(len(w), k + 1) if length is None else length
    return [p for p in cylinder_prefixes(c, k, m, length) if p.startswith(w)]


def is_proper_cylinder(c, k, m, w):
    length = max(len(w), k + 1)
    pref = cylinder_prefixes(c, k, m, length)
    inside = [p for p in pref if p.startswith(w)]
    return bool(inside) and len(inside) < len(pref)


def sample_cylinder(c, k, m, w, extra=3, max_right=None):
    """Eventually periodic members of the cylinder ``[w]`` in the fiber of ``m``.

    Centers extend ``w`` by at most ``extra`` symbols and right periods are
    primitive words of length at most ``k + 2``.  Points are deduplicated
    and returned in a fixed order.
    """
    max_right = k + 2 if max_right is None else max_right
    rights = [r for n in range(1, max_right + 1) for r in enumerate_words(c, n)
              if is_primitive(r)]
    out = {}
    for p in cylinder_extensions(c, k, m, w):
        a = p[:k]
        for e in range(extra + 1):
            for tail in enumerate_words(c, e, c.step(c.states, p)):
                for r in rights:
                    x = EvPeriodicPoint(a, p + tail, r, 0)
                    if x.is_periodic or x.anchor != k or len(x.left) != k:
                        continue
                    if x.word(0, len(w)) == w and in_shift(c, x):
                        out.setdefault(str(x), x)
    return [QkPoint(x, k) for _, x in sorted(out.items())]
