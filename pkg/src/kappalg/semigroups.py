"""Uniform finite-semigroup view and the structural checks built on enumeration.

Anything with ``mul(x, y)`` and ``elements()`` is a semigroup here.  A view
may also provide ``omega_power(s, q)`` when it knows its own structure; the
generic fallback walks the powers of ``s`` until they cycle.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Any, Optional, Sequence

from .groups import FiniteGroup


class InternalConsistencyError(AssertionError):
    """Two independent computations of the same fact disagreed."""


class Semigroup:
    name = "semigroup"

    def mul(self, x, y):
        raise NotImplementedError

    def elements(self) -> list:
        raise NotImplementedError

    def size(self) -> int:
        return len(self.elements())

    def to_json(self, x):
        return x

    def from_json(self, x):
        return x


class TableSemigroup(Semigroup):
    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], name: str = "table"):
        self.names = list(names)
        self.table = [list(r) for r in table]
        self.name = name
        self._index = {x: i for i, x in enumerate(self.names)}
        n = len(self.names)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("table must be square")

    def mul(self, x, y):
        return self.table[x][y]

    def elements(self) -> list:
        return list(range(len(self.names)))

    def to_json(self, x):
        return self.names[x]

    def from_json(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"unknown element {x!r}") from None

    def describe(self) -> dict:
        return {"type": "table", "elements": self.names,
                "table": [[self.names[c] for c in row] for row in self.table]}

    @classmethod
    def from_semigroup(cls, S: "Semigroup") -> "TableSemigroup":
        """Indexed copy of ``S``; ``decode`` maps indices back to elements of ``S``."""
        C = Cayley(S)
        T = cls([str(i) for i in range(C.n)], C.table, getattr(S, "name", "table"))
        T.decode = C.elems
        return T

    def omega_power(self, s, q: int):
        cache = self.__dict__.setdefault("_omega", {})
        key = (s, q)
        if key not in cache:
            cache[key] = omega_power_generic(self, s, q)
        return cache[key]

    @classmethod
    def from_json_spec(cls, data: dict) -> "TableSemigroup":
        names = list(data["elements"])
        index = {x: i for i, x in enumerate(names)}
        try:
            rows = [[index[c] for c in row] for row in data["table"]]
        except KeyError as exc:
            raise ValueError(f"table mentions unknown element {exc.args[0]!r}") from None
        S = cls(names, rows, data.get("name", "table"))
        if not is_associative(S, exhaustive_limit=40):
            raise ValueError("table is not associative")
        return S


class GroupSemigroup(Semigroup):
    """A finite group viewed as a semigroup."""

    def __init__(self, group: FiniteGroup, name: str = "group"):
        self.group = group
        self.name = name

    def mul(self, x, y):
        return self.group.mul(x, y)

    def elements(self) -> list:
        return self.group.elements()

    def omega_power(self, s, q: int):
        return self.group.power(s, q)

    def to_json(self, x):
        return self.group.to_json(x)

    def from_json(self, x):
        return self.group.from_json(x)


class TransformationMonoid(Semigroup):
    """All maps ``{0..n-1} -> {0..n-1}``, composed left to right."""

    def __init__(self, n: int):
        self.n = n
        self.name = f"T{n}"

    def mul(self, x, y):
        return tuple(y[i] for i in x)

    def elements(self) -> list:
        return list(product(range(self.n), repeat=self.n))

    def to_json(self, x):
        return list(x)

    def from_json(self, x):
        return tuple(x)


def semilattice2() -> TableSemigroup:
    return TableSemigroup(["1", "0"], [[0, 1], [1, 1]], "semilattice2")


def null_semigroup(n: int) -> TableSemigroup:
    """``{0, a1, ..., a_{n-1}}`` with every product equal to 0."""
    names = ["0"] + [f"a{i}" for i in range(1, n)]
    return TableSemigroup(names, [[0] * n for _ in range(n)], f"null{n}")


def left_zero(n: int) -> TableSemigroup:
    return TableSemigroup([f"l{i}" for i in range(n)], [[i] * n for i in range(n)], f"leftzero{n}")


class Cayley:
    """Materialized multiplication table over integer indices."""

    def __init__(self, S: Semigroup):
        self.S = S
        self.elems = list(S.elements())
        self.index = {x: i for i, x in enumerate(self.elems)}
        n = len(self.elems)
        self.table = [[self.index[S.mul(x, y)] for y in self.elems] for x in self.elems]
        self.n = n

    def idempotents(self) -> list[int]:
        return [i for i in range(self.n) if self.table[i][i] == i]


def is_associative(S: Semigroup, exhaustive_limit: int = 60, samples: int = 10_000,
                   rng: Optional[random.Random] = None) -> bool:
    elems = list(S.elements())
    mul = S.mul
    if len(elems) <= exhaustive_limit:
        triples = product(elems, repeat=3)
    else:
        rng = rng or random.Random(0)
        triples = ((rng.choice(elems), rng.choice(elems), rng.choice(elems)) for _ in range(samples))
    return all(mul(mul(a, b), c) == mul(a, mul(b, c)) for a, b, c in triples)


def idempotents(S: Semigroup) -> list:
    return [x for x in S.elements() if S.mul(x, x) == x]


def minimal_ideal_indices(C: Cayley) -> set[int]:
    t = C.table
    z = 0
    for s in range(C.n):
        z = t[t[z][s]][z]
    right = {t[z][s] for s in range(C.n)} | {z}
    return {t[s][r] for s in range(C.n) for r in right} | right


def minimal_ideal(S: Semigroup) -> list:
    C = Cayley(S)
    return [C.elems[i] for i in sorted(minimal_ideal_indices(C))]


def _reach(start: int, adj) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_simple_subset(C: Cayley, K: set[int]) -> bool:
    """Whether ``K`` (closed under products) is a simple semigroup."""
    t = C.table
    ks = sorted(K)
    fwd = {x: {t[x][k] for k in ks} | {t[k][x] for k in ks} for x in ks}
    rev: dict = {x: set() for x in ks}
    for x, ys in fwd.items():
        for y in ys:
            rev[y].add(x)
    y0 = ks[0]
    return _reach(y0, fwd) == K and _reach(y0, rev) == K


def is_completely_simple_subset(C: Cayley, K: set[int]) -> bool:
    if not is_simple_subset(C, K):
        return False
    t = C.table
    E = [e for e in K if t[e][e] == e]
    if not E:
        return False
    for e in E:
        for f in E:
            if e != f and t[e][f] == e and t[f][e] == e:
                return False
    return True


def _local_by_corners(C: Cayley) -> bool:
    t = C.table
    for e in C.idempotents():
        corner = {t[t[e][s]][e] for s in range(C.n)}
        for x in corner:
            if not any(t[x][y] == e and t[y][x] == e for y in corner):
                return False
    return True


def _local_by_minimal_ideal(C: Cayley) -> bool:
    E = C.idempotents()
    if not E:
        return True
    K = minimal_ideal_indices(C)
    return set(E) <= K and is_completely_simple_subset(C, K)


def is_local_group(S: Semigroup, cayley: Optional[Cayley] = None) -> bool:
    """Local-group test by both characterizations; they must agree."""
    C = cayley or Cayley(S)
    a = _local_by_corners(C)
    b = _local_by_minimal_ideal(C)
    if a != b:
        raise InternalConsistencyError(
            f"local-group characterizations disagree on {getattr(S, 'name', S)!r}: corners={a}, ideal={b}")
    return a


def power_cycle(S: Semigroup, s) -> tuple[list, int, int]:
    """Powers ``[s, s^2, ...]`` up to the first repeat, the index and the period."""
    powers = [s]
    seen = {s: 1}
    x = s
    while True:
        x = S.mul(x, s)
        if x in seen:
            i = seen[x]
            return powers, i, len(powers) + 1 - i
        powers.append(x)
        seen[x] = len(powers)


def omega_power_generic(S: Semigroup, s, q: int):
    """``s^(omega+q)`` by enumerating powers of ``s``."""
    powers, i, p = power_cycle(S, s)
    e = ((i + p - 1) // p) * p
    t = i + (e + q - i) % p
    return powers[t - 1]


def omega_power(S: Semigroup, s, q: int):
    fn = getattr(S, "omega_power", None)
    if fn is not None:
        return fn(s, q)
    return omega_power_generic(S, s, q)
