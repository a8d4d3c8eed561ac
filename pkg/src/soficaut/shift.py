"""Shift presentations and language-level queries.

A shift is given either by forbidden words (an SFT) or by a labeled graph.
Both are compiled to a :class:`FischerCover`, a right-resolving presentation
whose states are follower classes of words.  Every other query in the
package goes through the cover.

Words are plain ``str`` values; each alphabet symbol is a single character.
Lexicographic order always means the order in which the alphabet lists its
symbols, not code point order.
"""

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .errors import EmptyShift, NoConnector, NotAllowable, NotTransitive


def _check_alphabet(alphabet):
    alphabet = tuple(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet has duplicate symbols")
    for a in alphabet:
        if not isinstance(a, str) or len(a) != 1:
            raise ValueError(f"symbol {a!r} must be a single character")
    return alphabet


@dataclass(frozen=True)
class SftSpec:
    alphabet: tuple
    forbidden: frozenset

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        forbidden = frozenset(self.forbidden)
        for f in forbidden:
            if not f:
                raise ValueError("forbidden words must be nonempty")
            if set(f) - set(self.alphabet):
                raise ValueError(f"forbidden word {f!r} leaves the alphabet")
        object.__setattr__(self, "forbidden", forbidden)

    @property
    def step(self):
        return max((len(f) for f in self.forbidden), default=1) - 1


@dataclass(frozen=True)
class LabeledGraph:
    alphabet: tuple
    states: tuple
    edges: tuple  # (source, label, target)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        edges = tuple(sorted({tuple(e) for e in self.edges}, key=repr))
        known = set(self.states)
        for s, a, t in edges:
            if s not in known or t not in known:
                raise ValueError(f"edge {(s, a, t)!r} uses an unknown state")
            if a not in self.alphabet:
                raise ValueError(f"edge label {a!r} is not in the alphabet")
        object.__setattr__(self, "edges", edges)


def _prune(states, edges):
    """Drop states that cannot lie on a bi-infinite path."""
    states = set(states)
    while True:
        has_out = {s for s, _, t in edges if s in states and t in states}
        has_in = {t for s, _, t in edges if s in states and t in states}
        keep = states & has_out & has_in
        if keep == states:
            return states, [e for e in edges if e[0] in states and e[2] in states]
        states = keep


def compile_sft(spec):
    """Compile forbidden words into the edge graph on allowed ``j``-blocks.

    States are the allowed words of length ``j = spec.step``; an edge
    ``s --a--> (s+a)[1:]`` exists when the ``(j+1)``-block ``s+a`` avoids
    every forbidden word.  Stranded states are pruned.

    Raises
    ------
    EmptyShift
        If pruning leaves nothing.
    """
    j = spec.step
    forbidden = spec.forbidden

    def clean(word):
        return not any(f in word for f in forbidden)

    blocks = ["".join(p) for p in product(spec.alphabet, repeat=j)]
    blocks = [b for b in blocks if clean(b)]
    edges = []
    for b in blocks:
        for a in spec.alphabet:
            ext = b + a
            if clean(ext):
                edges.append((b, a, ext[1:]))
    states, edges = _prune(blocks, edges)
    if not states:
        raise EmptyShift("every state was pruned")
    order = {b: i for i, b in enumerate(blocks)}
    return LabeledGraph(spec.alphabet, sorted(states, key=order.get), edges)


@dataclass(frozen=True, eq=False)
class FischerCover:
    """Right-resolving, follower-separated presentation of a sofic shift.

    States are ``0 .. n-1``, numbered by the shortlex order of the shortest
    word leading to them.  ``delta[q]`` maps symbols to successor states.
    When the shift is transitive the cover is irreducible and is the
    Fischer cover; otherwise it is the essential part of the minimal
    follower-set automaton and ``transitive`` is false.
    """

    alphabet: tuple
    delta: tuple
    transitive: bool
    index: dict = field(repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "index", {a: i for i, a in enumerate(self.alphabet)})

    @property
    def n(self):
        return len(self.delta)

    @property
    def states(self):
        return frozenset(range(self.n))

    def key(self, word):
        """Sort key giving alphabet-order lexicographic comparison."""
        return tuple(self.index[a] for a in word)

    def shortlex(self, word):
        return (len(word), self.key(word))

    def step(self, states, word):
        for a in word:
            states = frozenset(self.delta[q][a] for q in states if a in self.delta[q])
            if not states:
                break
        return states

    def edges(self):
        return [(q, a, t) for q in range(self.n) for a, t in sorted(
            self.delta[q].items(), key=lambda e: self.index[e[0]])]

    def __eq__(self, other):
        if not isinstance(other, FischerCover):
            return NotImplemented
        return (self.alphabet, self.delta, self.transitive) == (
            other.alphabet, other.delta, other.transitive)

    def __hash__(self):
        return hash((self.alphabet, len(self.delta)))

    def __repr__(self):
        return f"FischerCover(alphabet={''.join(self.alphabet)!r}, n={self.n}, edges={self.edges()})"


def _reach(succ, start):
    seen = {start}
    todo = [start]
    while todo:
        q = todo.pop()
        for t in succ[q]:
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def _sccs(nodes, succ):
    fwd = {q: _reach(succ, q) for q in nodes}
    comps, done = [], set()
    for q in sorted(nodes):
        if q in done:
            continue
        comp = {t for t in fwd[q] if q in fwd[t]}
        done |= comp
        comps.append(comp)
    return comps, fwd


def fischer_cover(g):
    """Determinize and minimize a labeled graph.

    The subset construction is run from the set of all (essential) states,
    then states are merged by follower equivalence (Moore refinement).  If
    the minimized automaton has a unique terminal strongly connected
    component presenting the whole language, that component is returned and
    the shift is transitive.
    """
    alphabet = g.alphabet
    states, edges = _prune(g.states, list(g.edges))
    if not states:
        raise EmptyShift("graph has no bi-infinite path")
    out = {s: {} for s in states}
    for s, a, t in edges:
        out[s].setdefault(a, set()).add(t)

    # subset construction
    start = frozenset(states)
    subsets = [start]
    pos = {start: 0}
    trans = []
    i = 0
    while i < len(subsets):
        cur = subsets[i]
        row = {}
        for a in alphabet:
            nxt = frozenset(t for s in cur for t in out[s].get(a, ()))
            if nxt:
                if nxt not in pos:
                    pos[nxt] = len(subsets)
                    subsets.append(nxt)
                row[a] = pos[nxt]
        trans.append(row)
        i += 1

    # Moore refinement; missing transitions lead to an implicit dead state
    block = [0] * len(subsets)
    while True:
        sigs = {}
        new = []
        for q, row in enumerate(trans):
            sig = (block[q],) + tuple(block[row[a]] if a in row else -1 for a in alphabet)
            new.append(sigs.setdefault(sig, len(sigs)))
        if len(sigs) == len(set(block)):
            break
        block = new
    nb = len(set(block))
    qtrans = [None] * nb
    for q, row in enumerate(trans):
        qtrans[block[q]] = {a: block[t] for a, t in row.items()}
    init = block[0]

    # shortlex access words from the initial class give canonical names
    access = {init: ""}
    queue = [init]
    for q in queue:
        for a in alphabet:
            t = qtrans[q].get(a)
            if t is not None and t not in access:
                access[t] = access[q] + a
                queue.append(t)

    ess, ess_edges = _prune(range(nb), [(q, a, t) for q in range(nb) for a, t in qtrans[q].items()])
    succ = {q: {t for s, _, t in ess_edges if s == q} for q in ess}
    comps, _ = _sccs(ess, succ)
    terminal = [c for c in comps if all(t in c for q in c for t in succ[q])]

    keep, transitive = ess, False
    if len(terminal) == 1 and _same_language(alphabet, qtrans, init, terminal[0]):
        keep, transitive = terminal[0], True

    idx = {a: i for i, a in enumerate(alphabet)}
    order = sorted(keep, key=lambda q: (len(access[q]), [idx[a] for a in access[q]]))
    rename = {q: i for i, q in enumerate(order)}
    delta = tuple(
        {a: rename[t] for a, t in qtrans[q].items() if t in rename} for q in order)
    return FischerCover(alphabet, delta, transitive)


def _same_language(alphabet, trans, init, comp):
    """Does the subgraph on ``comp`` present every word readable from ``init``?"""
    start = (init, frozenset(comp))
    seen = {start}
    todo = [start]
    while todo:
        d, sub = todo.pop()
        for a in alphabet:
            nd = trans[d].get(a)
            nsub = frozenset(trans[q][a] for q in sub if a in trans[q] and trans[q][a] in comp)
            if nd is None and not nsub:
                continue
            if nd is None or not nsub:
                return False
            nxt = (nd, nsub)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return True


def cover_from_sft(spec):
    return fischer_cover(compile_sft(spec))


def follower_states(c, w):
    """Terminal states of paths labeled ``w``; raises if there are none."""
    got = c.step(c.states, w)
    if not got:
        raise NotAllowable(w)
    return got


def is_allowable(c, w):
    return bool(c.step(c.states, w))


def _require_transitive(c):
    if not c.transitive:
        raise NotTransitive("synchronization is only defined for transitive shifts")


def is_synchronizing(c, w):
    """True iff ``w`` is allowable with a single follower state.

    The empty word is never synchronizing.
    """
    _require_transitive(c)
    states = follower_states(c, w)
    return bool(w) and len(states) == 1


def extend_to_synchronizing(c, w):
    """Shortest-lex right extension ``w + u`` that is synchronizing."""
    _require_transitive(c)
    start = follower_states(c, w)
    if w and len(start) == 1:
        return w
    frontier = [(start, "")]
    seen = {start}
    while frontier:
        nxt = []
        for states, u in frontier:
            for a in c.alphabet:
                s = c.step(states, a)
                if not s or s in seen:
                    continue
                if len(s) == 1:
                    return w + u + a
                seen.add(s)
                nxt.append((s, u + a))
        frontier = nxt
    raise NotTransitive(f"no synchronizing extension of {w!r}")


def _successors(c):
    return {q: set(c.delta[q].values()) for q in range(c.n)}


def is_transitive(c):
    succ = _successors(c)
    return all(len(_reach(succ, q)) == c.n for q in range(c.n))


def shift_period(c):
    """gcd of the cycle lengths of the cover."""
    succ = _successors(c)
    comps, _ = _sccs(range(c.n), succ)
    p = 0
    for comp in comps:
        root = min(comp)
        level = {root: 0}
        queue = [root]
        for q in queue:
            for t in succ[q]:
                if t in comp and t not in level:
                    level[t] = level[q] + 1
                    queue.append(t)
        for q in comp:
            for t in succ[q]:
                if t in comp:
                    p = gcd(p, level[q] + 1 - level[t])
    return p


def is_mixing(c):
    return is_transitive(c) and shift_period(c) == 1


def connector(c, u, w, *, min_length=0, residue=None, modulus=None, length=None, bound=None):
    """Shortest-lex word ``v`` with ``u + v + w`` allowable.

    ``length`` asks for an exact length.  Otherwise ``|v| >= min_length`` and,
    when ``residue`` is given, ``|v| % modulus == residue`` (``modulus``
    defaults to the shift period).

    Raises
    ------
    NoConnector
        If nothing is found with ``|v|`` up to the search bound
        ``n * (p + max(|u|, |w|)) + min_length``.
    """
    _require_transitive(c)
    start = follower_states(c, u)
    follower_states(c, w)
    p = shift_period(c)
    if modulus is None:
        modulus = p
    if length is not None:
        min_length = length
    if bound is None:
        bound = c.n * (p + max(len(u), len(w))) + min_length

    def wanted(n):
        if length is not None:
            return n == length
        if n < min_length:
            return False
        return residue is None or n % modulus == residue % modulus

    level = {start: ""}
    for n in range(bound + 1):
        if wanted(n):
            for states, v in level.items():
                if c.step(states, w):
                    return v
        if length is not None and n >= length:
            break
        nxt = {}
        for states, v in level.items():
            for a in c.alphabet:
                s = c.step(states, a)
                if s and s not in nxt:
                    nxt[s] = v + a
        level = nxt
    raise NoConnector(bound)


def enumerate_words(c, n, start=None):
    """All allowable words of length ``n`` in lexicographic order.

    ``start`` restricts to words readable from the given set of states.
    """
    out = []
    start = c.states if start is None else frozenset(start)

    def go(states, prefix):
        if len(prefix) == n:
            out.append(prefix)
            return
        for a in c.alphabet:
            s = c.step(states, a)
            if s:
                go(s, prefix + a)

    if start:
        go(start, "")
    return out


def least_word(c, n):
    """Lexicographically least allowable word of length ``n``."""
    states, w = c.states, ""
    for _ in range(n):
        for a in c.alphabet:
            s = c.step(states, a)
            if s:
                states, w = s, w + a
                break
    return w


def brute_force_language(alphabet, n, allowed):
    """Filter all words of length ``n`` by a predicate; used as an oracle."""
    return ["".join(p) for p in product(alphabet, repeat=n) if allowed("".join(p))]

