"""Finite groups, free-group words and homomorphisms from free groups."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import product
from typing import Any, Hashable, Iterable, Optional, Sequence

# A free-group word: sequence of (variable, +1 | -1).
FreeWord = tuple


class FiniteGroup:
    identity: Any

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def elements(self) -> list:
        raise NotImplementedError

    def to_json(self, g):
        raise NotImplementedError

    def from_json(self, x):
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def order(self) -> int:
        return len(self.elements())

    def prod(self, items: Iterable) -> Any:
        acc = self.identity
        for g in items:
            acc = self.mul(acc, g)
        return acc

    def power(self, g, n: int):
        if n < 0:
            g, n = self.inv(g), -n
        acc, base = self.identity, g
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def element_order(self, g) -> int:
        return element_order(self, g)

    def name(self, g) -> str:
        x = self.to_json(g)
        return x if isinstance(x, str) else str(x).replace(" ", "")


class TableGroup(FiniteGroup):
    """A group given by its multiplication table; elements are row indices."""

    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], identity: int = 0, check: bool = True):
        self.names = list(names)
        self.table = [list(row) for row in table]
        self.identity = identity
        n = len(self.names)
        self._index = {name: i for i, name in enumerate(self.names)}
        if len(self._index) != n:
            raise ValueError("duplicate element names")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("table must be square and match the element list")
        self._inv = [None] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == identity:
                    self._inv[g] = h
        if check:
            self._check()

    def _check(self):
        n = len(self.names)
        t = self.table
        for g in range(n):
            if t[self.identity][g] != g or t[g][self.identity] != g:
                raise ValueError("identity is not neutral")
            if self._inv[g] is None or t[self._inv[g]][g] != self.identity:
                raise ValueError(f"element {self.names[g]} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError("table is not associative")

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self._inv[g]

    def elements(self) -> list:
        return list(range(len(self.names)))

    def to_json(self, g):
        return self.names[g]

    def from_json(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"unknown group element {x!r}") from None

    def describe(self) -> dict:
        return {
            "elements": list(self.names),
            "identity": self.names[self.identity],
            "table": [[self.names[c] for c in row] for row in self.table],
        }

    def __repr__(self) -> str:
        return f"TableGroup(order={len(self.names)})"


def cyclic(n: int, gen: str = "g") -> TableGroup:
    """``C_n`` with elements ``e, g, g^2, ...``; the generator is element 1."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    names = ["e"] + [gen if i == 1 else f"{gen}^{i}" for i in range(1, n)]
    return TableGroup(names, [[(i + j) % n for j in range(n)] for i in range(n)], check=False)


def trivial_group() -> TableGroup:
    return cyclic(1)


class PermGroup(FiniteGroup):
    """Permutations of ``{0..degree-1}`` in one-line notation, composed left to right.

    ``mul(p, q)`` applies ``p`` first, then ``q``.  Elements are never listed
    unless ``elements()`` is asked for.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.generators = []
        for p in generators:
            p = tuple(p)
            if sorted(p) != list(range(degree)):
                raise ValueError(f"{p} is not a permutation of degree {degree}")
            self.generators.append(p)
        self._elements = None

    def mul(self, p, q):
        return tuple(q[i] for i in p)

    def inv(self, p):
        out = [0] * len(p)
        for i, j in enumerate(p):
            out[j] = i
        return tuple(out)

    def elements(self) -> list:
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for p in frontier:
                    for s in self.generators:
                        q = self.mul(p, s)
                        if q not in seen:
                            seen.add(q)
                            nxt.append(q)
                frontier = nxt
            self._elements = sorted(seen)
        return list(self._elements)

    def to_json(self, g):
        return list(g)

    def from_json(self, x):
        p = tuple(x)
        if sorted(p) != list(range(self.degree)):
            raise ValueError(f"{x} is not a permutation of degree {self.degree}")
        return p

    def describe(self) -> dict:
        return {"kind": "perm", "degree": self.degree, "generators": [list(g) for g in self.generators]}

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
        gens.append(tuple(range(1, n)) + (0,))
    return PermGroup(n, gens)


class ProductGroup(FiniteGroup):
    def __init__(self, left: FiniteGroup, right: FiniteGroup):
        self.left = left
        self.right = right
        self.identity = (left.identity, right.identity)

    def mul(self, g, h):
        return (self.left.mul(g[0], h[0]), self.right.mul(g[1], h[1]))

    def inv(self, g):
        return (self.left.inv(g[0]), self.right.inv(g[1]))

    def elements(self) -> list:
        return [(a, b) for a in self.left.elements() for b in self.right.elements()]

    def order(self) -> int:
        return self.left.order() * self.right.order()

    def to_json(self, g):
        return [self.left.to_json(g[0]), self.right.to_json(g[1])]

    def from_json(self, x):
        return (self.left.from_json(x[0]), self.right.from_json(x[1]))

    def describe(self) -> dict:
        return {"kind": "product", "factors": [self.left.describe(), self.right.describe()]}

    def __repr__(self) -> str:
        return f"ProductGroup({self.left!r}, {self.right!r})"


def group_from_json(data: dict) -> FiniteGroup:
    try:
        return _group_from_json(data)
    except KeyError as exc:
        raise ValueError(f"group description lacks the field {exc.args[0]!r}") from None


def _group_from_json(data: dict) -> FiniteGroup:
    kind = data.get("kind", data.get("type", "table"))
    if kind == "table":
        names = list(data["elements"])
        index = {x: i for i, x in enumerate(names)}
        try:
            table = [[index[c] for c in row] for row in data["table"]]
            ident = index[data.get("identity", names[0])]
        except KeyError as exc:
            raise ValueError(f"unknown element {exc.args[0]!r} in group table") from None
        return TableGroup(names, table, ident)
    if kind == "cyclic":
        return cyclic(int(data["n"]), data.get("generator", "g"))
    if kind == "symmetric":
        return symmetric_group(int(data["n"]))
    if kind == "perm":
        return PermGroup(int(data["degree"]), data.get("generators", []))
    if kind == "product":
        left, right = data["factors"]
        return ProductGroup(group_from_json(left), group_from_json(right))
    raise ValueError(f"unknown group kind {kind!r}")


def element_order(G: FiniteGroup, g) -> int:
    n, x = 1, g
    while x != G.identity:
        x = G.mul(x, g)
        n += 1
    return n


# ---------------------------------------------------------------- free groups


def fw(*letters) -> FreeWord:
    """Build a free word from variables (exponent +1) or ``(variable, ±1)`` pairs."""
    out = []
    for x in letters:
        if isinstance(x, tuple) and len(x) == 2 and x[1] in (1, -1):
            out.append(x)
        else:
            out.append((x, 1))
    return tuple(out)


def positive(variables: Iterable[Hashable]) -> FreeWord:
    return tuple((v, 1) for v in variables)


def fw_inverse(w: FreeWord) -> FreeWord:
    return tuple((v, -e) for v, e in reversed(w))


def fw_power(w: FreeWord, n: int) -> FreeWord:
    if n < 0:
        return fw_inverse(w) * (-n)
    return tuple(w) * n


def reduce(w: FreeWord) -> FreeWord:
    """Free reduction: cancel adjacent ``v^e v^-e`` pairs until none remain."""
    stack = []
    for v, e in w:
        if stack and stack[-1][0] == v and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((v, e))
    return tuple(stack)


def reduce_random(w: FreeWord, rng: random.Random) -> FreeWord:
    """Free reduction cancelling a randomly chosen pair at each step."""
    w = list(w)
    while True:
        spots = [i for i in range(len(w) - 1) if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]]
        if not spots:
            return tuple(w)
        i = rng.choice(spots)
        del w[i: i + 2]


def is_reduced(w: FreeWord) -> bool:
    return reduce(w) == tuple(w)


def fw_str(w: FreeWord) -> str:
    if not w:
        return "1"
    parts = []
    for v, e in w:
        name = v if isinstance(v, str) else "_".join(str(p) for p in v)
        parts.append(name if e == 1 else f"{name}^-1")
    return " ".join(parts)


@dataclass
class GroupAssignment:
    """Images of free-group variables; extends to a homomorphism on free words."""

    group: FiniteGroup
    images: dict

    def __call__(self, w: FreeWord):
        G = self.group
        acc = G.identity
        for v, e in w:
            try:
                g = self.images[v]
            except KeyError:
                raise KeyError(f"variable {v!r} is not assigned") from None
            acc = G.mul(acc, g if e == 1 else G.inv(g))
        return acc

    def variables(self) -> list:
        return list(self.images)


def separating_hom(u: FreeWord, variables: Optional[Iterable[Hashable]] = None) -> GroupAssignment:
    """A permutation representation of the free group that does not kill ``u``.

    Reading ``u = s_1 ... s_n``, the generator of ``s_j`` must send ``j-1`` to
    ``j`` (positive letter) or ``j`` to ``j-1`` (inverse letter).  Reducedness
    keeps these partial maps injective; each one is completed to a permutation
    of ``{0..n}`` by pairing leftover points in ascending order.  The image of
    ``u`` then sends 0 to n.
    """
    u = tuple(u)
    if not u:
        raise ValueError("cannot separate the empty word from the identity")
    if not is_reduced(u):
        raise ValueError("word must be freely reduced")
    n = len(u)
    partial: dict = {}
    for j, (v, e) in enumerate(u, start=1):
        src, dst = (j - 1, j) if e == 1 else (j, j - 1)
        m = partial.setdefault(v, {})
        if m.get(src, dst) != dst or (dst in m.values() and m.get(src) != dst):
            raise AssertionError("inconsistent constraints from a reduced word")
        m[src] = dst
    names = list(dict.fromkeys(list(variables or []) + [v for v, _ in u]))
    images = {}
    for v in names:
        m = partial.get(v, {})
        free_src = [i for i in range(n + 1) if i not in m]
        free_dst = sorted(set(range(n + 1)) - set(m.values()))
        full = dict(m)
        full.update(zip(free_src, free_dst))
        images[v] = tuple(full[i] for i in range(n + 1))
    group = PermGroup(n + 1, [images[v] for v in names])
    return GroupAssignment(group, images)


def order_boost(asg: GroupAssignment, n: int) -> GroupAssignment:
    """Pair every image with a generator of ``C_n`` so each has order at least ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    C = cyclic(n, "s")
    G = ProductGroup(asg.group, C)
    return GroupAssignment(G, {v: (g, 1 % n) for v, g in asg.images.items()})


def lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
