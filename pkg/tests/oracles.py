"""Brute-force reference implementations, written straight from the definitions."""

from itertools import product

from kappalg.groups import FiniteGroup


def conjugates(w):
    return {w[i:] + w[:i] for i in range(len(w))}


def is_primitive(w):
    return not any(len(w) % d == 0 and w[:d] * (len(w) // d) == w for d in range(1, len(w)))


def is_lyndon(w, order="ab"):
    key = lambda s: [order.index(c) for c in s]
    return is_primitive(w) and all(key(w) <= key(c) for c in conjugates(w))


def boundary(words, letters, max_len):
    L = set(words)
    out = set()
    for n in range(2, max_len + 2):
        for t in product(letters, repeat=n):
            v = "".join(t)
            if v not in L and v[:-1] in L and v[1:] in L:
                out.add(v)
    return out


def coordinates(words, bnd, w):
    """Maximal factors between consecutive forbidden occurrences, interleaved with them."""
    L = set(words)
    if w in L:
        return (w,)
    occ = sorted((i, i + len(b)) for b in bnd for i in range(len(w)) if w.startswith(b, i))
    seq = [w[: occ[0][1] - 1]]
    for k, (p, q) in enumerate(occ):
        seq.append(w[p:q])
        nxt = occ[k + 1][1] - 1 if k + 1 < len(occ) else len(w)
        seq.append(w[p + 1: nxt])
    return tuple(seq)


def f_hat(words, bnd, f, G: FiniteGroup, w):
    return G.prod(f(c) for c in coordinates(words, bnd, w))


def power_by_enumeration(mul, s, q):
    """s^(omega+q): list powers until one repeats, then index into the cycle."""
    powers = [s]
    while True:
        nxt = mul(powers[-1], s)
        if nxt in powers:
            start = powers.index(nxt)
            break
        powers.append(nxt)
    period = len(powers) - start
    # the idempotent is the unique power in the cycle equal to its own square
    idx = next(i for i in range(start, len(powers)) if mul(powers[i], powers[i]) == powers[i])
    return powers[start + (idx - start + q) % period]
