"""Finite factorial languages, their boundary words and coordinate sequences."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .words import Alphabet, factors


class MalformedCoordinates(ValueError):
    pass


@dataclass(frozen=True)
class CoordinateSequence:
    first: str
    steps: tuple[tuple[str, str], ...] = ()

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def last(self) -> str:
        return self.steps[-1][1] if self.steps else self.first

    def as_tuple(self) -> tuple[str, ...]:
        out = [self.first]
        for b, w in self.steps:
            out += [b, w]
        return tuple(out)

    @classmethod
    def from_tuple(cls, seq: Iterable[str]) -> "CoordinateSequence":
        seq = list(seq)
        if len(seq) % 2 != 1:
            raise MalformedCoordinates("a coordinate sequence has odd length")
        return cls(seq[0], tuple((seq[i], seq[i + 1]) for i in range(1, len(seq), 2)))

    def maximal_factors(self) -> list[str]:
        return [self.first] + [w for _, w in self.steps]

    def boundary_factors(self) -> list[str]:
        return [b for b, _ in self.steps]


class FactorialLanguage:
    """A finite factorial language with content equal to its alphabet.

    Subclasses may represent the word set implicitly; everything else in the
    package only relies on membership, boundary membership and ``step``.
    """

    def __init__(self, alphabet: Alphabet, words: Iterable[str]):
        self.alphabet = alphabet
        ws = frozenset(words)
        for w in ws:
            if not w:
                raise ValueError("factorial languages hold non-empty words only")
            alphabet.check(w)
        for a in alphabet:
            if a not in ws:
                raise ValueError(f"language must contain every letter; {a!r} is missing")
        for w in ws:
            if len(w) > 1 and (w[1:] not in ws or w[:-1] not in ws):
                raise ValueError(f"language is not factorial: {w!r} has a missing factor")
        self.words = ws
        self.maxlen = max(map(len, ws))
        self._boundary = frozenset(
            v + a for v in ws for a in alphabet
            if v + a not in ws and (v + a)[1:] in ws
        )
        self._steps: dict = {}

    def __contains__(self, w) -> bool:
        return w in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), self.alphabet.key(w))))

    def __repr__(self) -> str:
        return f"FactorialLanguage(|L|={len(self.words)}, maxlen={self.maxlen})"

    @property
    def boundary(self) -> frozenset:
        return self._boundary

    def is_boundary(self, w: str) -> bool:
        return w in self._boundary

    def step(self, state: str, a: str) -> str:
        """Longest suffix of ``state + a`` lying in the language."""
        key = (state, a)
        try:
            return self._steps[key]
        except KeyError:
            pass
        s = state + a
        while s not in self.words:
            s = s[1:]
        self._steps[key] = s
        return s

    def one_words(self) -> list[str]:
        """The elements of ``L ∪ {1}`` with the empty word first."""
        return [""] + list(self)

    def longest_prefix(self, w: str) -> str:
        for n in range(min(len(w), self.maxlen), 0, -1):
            if w[:n] in self:
                return w[:n]
        return ""

    def longest_suffix(self, w: str) -> str:
        for n in range(min(len(w), self.maxlen), 0, -1):
            if w[len(w) - n:] in self:
                return w[len(w) - n:]
        return ""


class BoundedLanguage(FactorialLanguage):
    """``A^{<=k}``: every non-empty word of length at most ``k``, kept implicit."""

    def __init__(self, alphabet: Alphabet, k: int):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.alphabet = alphabet
        self.k = k
        self.maxlen = k

    def __contains__(self, w) -> bool:
        return 0 < len(w) <= self.k and all(a in self.alphabet for a in w)

    def __len__(self) -> int:
        n = len(self.alphabet)
        return sum(n ** i for i in range(1, self.k + 1))

    def __iter__(self):
        from itertools import product

        for n in range(1, self.k + 1):
            for t in product(self.alphabet.letters, repeat=n):
                yield "".join(t)

    def __repr__(self) -> str:
        return f"BoundedLanguage(k={self.k}, alphabet={''.join(self.alphabet.letters)})"

    @property
    def words(self) -> frozenset:
        return frozenset(self)

    @property
    def boundary(self) -> frozenset:
        from itertools import product

        return frozenset("".join(t) for t in product(self.alphabet.letters, repeat=self.k + 1))

    def is_boundary(self, w: str) -> bool:
        return len(w) == self.k + 1 and all(a in self.alphabet for a in w)

    def step(self, state: str, a: str) -> str:
        s = state + a
        return s[len(s) - self.k:] if len(s) > self.k else s


def make_factorial(alphabet: Alphabet, words: Iterable[str]) -> FactorialLanguage:
    closure = set(alphabet.letters)
    for w in words:
        closure |= factors(alphabet.check(w))
    return FactorialLanguage(alphabet, closure)


def boundary(L: FactorialLanguage) -> frozenset:
    return L.boundary


def boundary_occurrences(L: FactorialLanguage, w: str) -> list[tuple[int, int]]:
    """0-based inclusive spans ``(p, q)`` of the boundary-word occurrences in ``w``, left to right."""
    occ = []
    state = ""
    for q, a in enumerate(w):
        new = L.step(state, a)
        if len(new) <= len(state):
            occ.append((q - len(new), q))
        state = new
    return occ


def coordinates(L: FactorialLanguage, w: str) -> CoordinateSequence:
    if not w:
        raise ValueError("coordinates are defined for non-empty words")
    occ = boundary_occurrences(L, w)
    if not occ:
        return CoordinateSequence(w)
    first = w[: occ[0][1]]
    steps = []
    for i, (p, q) in enumerate(occ):
        end = occ[i + 1][1] if i + 1 < len(occ) else len(w)
        steps.append((w[p: q + 1], w[p + 1: end]))
    return CoordinateSequence(first, tuple(steps))


def coordinates_recursive(L: FactorialLanguage, w: str, rng: Optional[random.Random] = None) -> CoordinateSequence:
    """Coordinates via the split-at-an-occurrence recursion.

    The occurrence used at each split is the leftmost one, or a random one
    when ``rng`` is given; the result must not depend on that choice.
    """
    if w in L:
        return CoordinateSequence(w)
    spans = [
        (p, p + n - 1)
        for n in range(2, L.maxlen + 2)
        for p in range(len(w) - n + 1)
        if L.is_boundary(w[p: p + n])
    ]
    spans.sort()
    p, q = rng.choice(spans) if rng is not None else spans[0]
    left = coordinates_recursive(L, w[:q], rng).as_tuple()
    right = coordinates_recursive(L, w[p + 1:], rng).as_tuple()
    return CoordinateSequence.from_tuple(left + (w[p: q + 1],) + right)


def reconstruct(L: FactorialLanguage, sc: CoordinateSequence) -> str:
    seq = sc.maximal_factors()
    bnd = sc.boundary_factors()
    for x in seq:
        if x not in L:
            raise MalformedCoordinates(f"{x!r} is not in the language")
    for b in bnd:
        if not L.is_boundary(b):
            raise MalformedCoordinates(f"{b!r} is not a boundary word")
    word = seq[-1]
    for i in range(len(bnd) - 1, -1, -1):
        b = bnd[i]
        if not word.startswith(b[1:]):
            raise MalformedCoordinates(f"{b!r} does not overlap the following factor")
        prev = seq[i]
        if not prev.endswith(b[:-1]):
            raise MalformedCoordinates(f"{b[:-1]!r} is not a suffix of {prev!r}")
        word = prev[: len(prev) - (len(b) - 1)] + b + word[len(b) - 1:]
    if coordinates(L, word) != sc:
        raise MalformedCoordinates("sequence is not the coordinate sequence of any word")
    return word
