"""Brute-force references that share no code with the library."""

from itertools import product


def words(alphabet, n):
    return ["".join(p) for p in product(alphabet, repeat=n)]


def sft_language(alphabet, forbidden, n, pad=None):
    """Words of length n that extend to long legal words on both sides.

    Extending by ``pad`` symbols each way is enough for the small SFTs used
    here (they are transitive, so every locally legal word that survives
    padding is globally allowable).
    """
    pad = max((len(f) for f in forbidden), default=1) * 3 if pad is None else pad

    def legal(w):
        return not any(f in w for f in forbidden)

    def extends(w, side, depth):
        if depth == 0:
            return True
        for a in alphabet:
            v = w + a if side > 0 else a + w
            if legal(v) and extends(v, side, depth - 1):
                return True
        return False

    return [w for w in words(alphabet, n) if legal(w) and extends(w, 1, pad) and extends(w, -1, pad)]


def graph_language(edges, n):
    """Labels of length-n paths that sit inside bi-infinite paths."""
    states = sorted({e[0] for e in edges} | {e[2] for e in edges})
    live = set(states)
    while True:
        out = {s for s, _, t in edges if t in live}
        inn = {t for s, _, t in edges if s in live}
        nxt = live & out & inn
        if nxt == live:
            break
        live = nxt
    es = [e for e in edges if e[0] in live and e[2] in live]
    found = set()

    def go(q, w):
        if len(w) == n:
            found.add(w)
            return
        for s, a, t in es:
            if s == q:
                go(t, w + a)

    for q in live:
        go(q, "")
    return sorted(found)


def sync_by_definition(lang, w, depth):
    """uw, wv allowable => uwv allowable, for all |u|, |v| <= depth."""
    allowed = {n: set(lang(n)) for n in range(depth * 2 + len(w) + 1)}

    def ok(x):
        return x in allowed[len(x)]

    if not ok(w):
        return None
    alphabet = sorted({a for x in allowed[1] for a in x})
    for i in range(depth + 1):
        for u in words(alphabet, i):
            if not ok(u + w):
                continue
            for j in range(depth + 1):
                for v in words(alphabet, j):
                    if ok(w + v) and not ok(u + w + v):
                        return False
    return True


def marker_image(x, left, right, perm):
    """Rewrite every data slot of every occurrence of left+d+right in x."""
    y = list(x)
    for d, img in perm.items():
        block = left + d + right
        for i in range(len(x) - len(block) + 1):
            if x[i:i + len(block)] == block:
                y[i + len(left):i + len(left) + len(d)] = img
    return "".join(y)


def unbordered(w):
    return all(w[:i] != w[-i:] for i in range(1, len(w)))


def graph_has_periodic(edges, w):
    """Is there a closed path labeled by a power of w?"""
    states = sorted({e[0] for e in edges} | {e[2] for e in edges})
    rel = {(q, q) for q in states}
    for a in w:
        rel = {(p, t) for p, q in rel for s, b, t in edges if s == q and b == a}
    power = set(rel)
    for _ in range(len(states)):
        if any(p == q for p, q in power):
            return True
        power = {(p, r) for p, q in power for q2, r in rel if q == q2}
    return False


def orbit_words(words_k, periodic_ok, k):
    """Least rotations of primitive words whose periodic points are allowed."""
    def primitive(w):
        return all(w != w[:d] * (k // d) for d in range(1, k) if k % d == 0)

    return sorted({min(w[i:] + w[:i] for i in range(k))
                   for w in words_k if primitive(w) and periodic_ok(w)})


def golden_member(x):
    return "11" not in x


def even_member(x):
    """Runs of 1s between two 0s have even length."""
    inner = x.strip("1")
    return all(len(r) % 2 == 0 for r in inner.split("0")[1:-1]) if "0" in x else True


def full_member(x):
    return True


def sync_by_membership(member, alphabet, w, depth=4):
    """Definition of a synchronizing word, with u and v of length <= depth."""
    if not member(w):
        return None
    ext = [""] + [a for n in range(1, depth + 1) for a in words(alphabet, n)]
    for u in ext:
        if not member(u + w):
            continue
        for v in ext:
            if member(w + v) and not member(u + w + v):
                return False
    return True
