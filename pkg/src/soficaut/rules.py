"""Sliding block codes on a sofic shift.

A local rule of radius ``R`` is stored as a reduced layered decision
diagram over the allowable windows of length ``2R + 1``: reading a window
symbol by symbol walks from the root to a leaf that names the output.
Equal sub-functions share one node, so the diagrams of marker codes stay
small even when the number of windows is astronomical.  Equality of two
rules is decided on the diagrams, never by enumerating windows.

Leaves are encoded as negative integers ``-(symbol_index + 2)``; ``-1``
marks a missing edge.
"""

from .points import EvPeriodicPoint
from .errors import TooShort

MISSING = -1


class Rule:
    __slots__ = ("cover", "width", "nodes", "root")

    def __init__(self, cover, width, nodes, root):
        self.cover = cover
        self.width = width
        self.nodes = nodes
        self.root = root

    @property
    def radius(self):
        return self.width // 2

    def __len__(self):
        return len(self.nodes)

    def __call__(self, window):
        if len(window) != self.width:
            raise ValueError(f"window {window!r} has length {len(window)}, want {self.width}")
        idx = self.cover.index
        node = self.root
        for a in window:
            node = self.nodes[node][idx[a]]
            if node == MISSING:
                raise KeyError(window)
        return self.cover.alphabet[-node - 2]

    def windows(self):
        """All (window, output) pairs in lexicographic order."""
        alphabet = self.cover.alphabet
        out = []

        def go(node, prefix):
            if node < MISSING:
                out.append((prefix, alphabet[-node - 2]))
                return
            for i, child in enumerate(self.nodes[node]):
                if child != MISSING:
                    go(child, prefix + alphabet[i])

        go(self.root, "")
        return out


def build(cover, width, init, step, leaf):
    """Layered construction of a rule from a small state machine.

    ``step(t, state, symbol)`` reads the symbol at window position ``t`` and
    ``leaf(state)`` returns the output symbol.  Allowability is tracked here
    through cover follower sets, so user states need not encode it.
    """
    alphabet = cover.alphabet
    layers = [{(cover.states, init): 0}]
    edges = []
    for t in range(width):
        nxt = {}
        rows = []
        for subset, state in layers[-1]:
            row = []
            for a in alphabet:
                s = cover.step(subset, a)
                if not s:
                    row.append(MISSING)
                    continue
                key = (s, step(t, state, a))
                row.append(nxt.setdefault(key, len(nxt)))
            rows.append(row)
        edges.append(rows)
        layers.append(nxt)

    index = {a: i for i, a in enumerate(alphabet)}
    ids = [-(index[leaf(state)] + 2) for _, state in layers[-1]]
    nodes = []
    unique = {}
    for t in range(width - 1, -1, -1):
        layer_ids = []
        for row in edges[t]:
            kids = tuple(ids[j] if j != MISSING else MISSING for j in row)
            if all(k == MISSING for k in kids):
                layer_ids.append(MISSING)
                continue
            if kids not in unique:
                unique[kids] = len(nodes)
                nodes.append(kids)
            layer_ids.append(unique[kids])
        ids = layer_ids
    return Rule(cover, width, nodes, ids[0])


def rule_from_function(cover, radius, fn):
    """Tabulate ``fn(window)``; cost grows with the number of windows."""
    return build(cover, 2 * radius + 1, "", lambda t, s, a: s + a, fn)


def shift_rule(cover, j, radius=None):
    radius = abs(j) if radius is None else radius
    if radius < abs(j):
        raise ValueError("radius too small for this shift power")
    pick = radius + j
    return build(cover, 2 * radius + 1, None,
                 lambda t, s, a: a if t == pick else s, lambda s: s)


def widen(rule, radius):
    """Same map, read through a wider window."""
    d = radius - rule.radius
    if d < 0:
        raise ValueError("cannot narrow a rule")
    if d == 0:
        return rule
    nodes = rule.nodes
    idx = rule.cover.index

    def step(t, node, a):
        if d <= t < d + rule.width:
            return nodes[node][idx[a]]
        return node

    return build(rule.cover, 2 * radius + 1, rule.root, step, lambda n: rule.cover.alphabet[-n - 2])


def compose_rules(g, h):
    """Rule of ``g o h`` (apply ``h`` first), radius ``R_g + R_h``.

    The product state carries the nodes of the ``h``-windows still being
    read and the node reached so far in ``g``.
    """
    cover = g.cover
    idx = cover.index
    alphabet = cover.alphabet
    hw, gw = h.width, g.width
    hn, gn = h.nodes, g.nodes

    def step(t, state, a):
        active, gnode = state
        i = idx[a]
        active = [hn[n][i] for n in active]
        if t < gw:
            active.append(hn[h.root][i])
        if MISSING in active:
            raise ValueError("inner rule is not defined on an allowable window")
        if t >= hw - 1:
            out = active.pop(0)
            gnode = gn[gnode][-out - 2]
            if gnode == MISSING:
                raise ValueError("inner rule produced a word outside the shift")
        return tuple(active), gnode

    def leaf(state):
        return alphabet[-state[1] - 2]

    return build(cover, gw + hw - 1, ((), g.root), step, leaf)


def rules_equal(r1, r2):
    """Do two rules define the same map on the shift?"""
    if r1.width != r2.width:
        width = max(r1.width, r2.width)
        r1, r2 = widen(r1, width // 2), widen(r2, width // 2)
    seen = set()
    todo = [(r1.root, r2.root)]
    while todo:
        pair = todo.pop()
        if pair in seen:
            continue
        seen.add(pair)
        a, b = pair
        if a < MISSING or b < MISSING:
            if a != b:
                return False
            continue
        for x, y in zip(r1.nodes[a], r2.nodes[b]):
            if (x == MISSING) != (y == MISSING):
                return False
            if x != MISSING:
                todo.append((x, y))
    return True


class BlockCode:
    """A sliding block code ``(gx)_i = rule(x[i-R .. i+R])``.

    Compositions are kept as a list of factors and applied one after the
    other; their single combined rule is only built when asked for.
    ``marker`` records the marker system a code was compiled from.
    """

    def __init__(self, cover, radius, rule=None, factors=None, marker=None, name=None):
        self.cover = cover
        self.radius = radius
        self._rule = rule
        self.factors = tuple(factors) if factors else None
        self.marker = marker
        self.name = name

    def __repr__(self):
        return f"BlockCode({self.name or '?'}, radius={self.radius})"

    @property
    def rule(self):
        if self._rule is None:
            # folding from the left keeps the inner rule, whose windows are
            # the ones held in flight, a single small factor
            r = self.factors[0].rule
            for f in self.factors[1:]:
                r = compose_rules(r, f.rule)
            self._rule = r
        return self._rule

    def __call__(self, window):
        return self.rule(window)

    def apply_word(self, w):
        """Image of the interior of ``w``: a word of length ``|w| - 2R``."""
        if len(w) < 2 * self.radius + 1:
            raise TooShort(f"need at least {2 * self.radius + 1} symbols, got {len(w)}")
        if self.factors:
            for f in reversed(self.factors):
                w = f.apply_word(w)
            return w
        rule = self.rule
        width = rule.width
        return "".join(rule(w[i:i + width]) for i in range(len(w) - width + 1))

    def apply_point(self, x):
        if self.factors:
            for f in reversed(self.factors):
                x = f.apply_point(x)
            return x
        r = self.radius
        nl, nr = len(x.left), len(x.right)
        lo, hi = x.anchor - r - nl, x.end + r + nr
        y = self.apply_word(x.word(lo - r, hi + r))
        left = y[:nl]
        center = y[nl:len(y) - nr]
        right = y[len(y) - nr:]
        return EvPeriodicPoint(left, center, right, x.anchor - r)

    def table(self):
        return dict(self.rule.windows())

    def equals(self, other):
        return rules_equal(self.rule, other.rule)

    def is_identity(self):
        return rules_equal(self.rule, shift_rule(self.cover, 0, self.radius))

    def to_json(self):
        return {"radius": self.radius, "rule": [list(p) for p in self.rule.windows()]}


def code_from_json(cover, data):
    table = {w: s for w, s in data["rule"]}
    return BlockCode(cover, data["radius"], rule_from_function(cover, data["radius"], table.__getitem__))


def shift_power_code(j, c, radius=None):
    """``sigma**j`` as a block code: the output is the symbol at offset ``j``."""
    r = abs(j) if radius is None else radius
    return BlockCode(c, r, shift_rule(c, j, r), name=f"sigma^{j}")


def identity_code(c, radius=0):
    return shift_power_code(0, c, radius)


def code_from_function(c, radius, fn, name=None):
    return BlockCode(c, radius, rule_from_function(c, radius, fn), name=name)


def _flat(g):
    return g.factors if g.factors else (g,)


def compose(g, h):
    """``g o h``; radius ``R_g + R_h``."""
    if g.cover is not h.cover and g.cover != h.cover:
        raise ValueError("codes live on different shifts")
    name = f"{g.name or '?'}*{h.name or '?'}"
    return BlockCode(g.cover, g.radius + h.radius, factors=_flat(g) + _flat(h), name=name)


def apply_code_word(g, w):
    return g.apply_word(w)


def apply_code_point(g, x):
    return g.apply_point(x)
