"""Finite words over an ordered alphabet.

Words are plain ``str`` values, one character per letter.  The empty string
stands for the empty word and is only accepted where a monoid context
(``L ∪ {1}``) makes sense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must be non-empty")
        for a in self.letters:
            if len(a) != 1:
                raise ValueError(f"letters are single symbols, got {a!r}")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letters in alphabet")
        object.__setattr__(self, "_rank", {a: i for i, a in enumerate(self.letters)})

    @classmethod
    def of(cls, letters: Iterable[str]) -> "Alphabet":
        """Alphabet over ``letters`` in their natural symbol order."""
        return cls(tuple(sorted(set(letters))))

    def __contains__(self, a) -> bool:
        return a in self._rank

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def key(self, w: str) -> tuple[int, ...]:
        return tuple(self._rank[a] for a in w)

    def check(self, w: str) -> str:
        for a in w:
            if a not in self._rank:
                raise ValueError(f"letter {a!r} not in alphabet {''.join(self.letters)}")
        return w


def _key(alphabet: Optional[Alphabet]):
    return alphabet.key if alphabet is not None else (lambda w: w)


def truncate(w: str, k: int, side: str = "head") -> str:
    """Longest prefix (``head``) or suffix (``tail``) of ``w`` of length at most ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if side == "head":
        return w[:k]
    if side == "tail":
        return w[len(w) - k:] if k < len(w) else w
    raise ValueError(f"side must be 'head' or 'tail', not {side!r}")


def head(w: str, k: int) -> str:
    return truncate(w, k, "head")


def tail(w: str, k: int) -> str:
    return truncate(w, k, "tail")


def factors(w: str) -> set[str]:
    """All non-empty factors of ``w``."""
    n = len(w)
    return {w[i:j] for i in range(n) for j in range(i + 1, n + 1)}


def occurrences(u: str, w: str) -> list[int]:
    """1-based start positions of (possibly overlapping) occurrences of ``u`` in ``w``."""
    if not u:
        raise ValueError("cannot search for the empty word")
    out = []
    i = w.find(u)
    while i != -1:
        out.append(i + 1)
        i = w.find(u, i + 1)
    return out


def conjugates(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))] if w else [""]


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(p, n)`` with ``w == p * n``, ``p`` primitive and ``n`` maximal."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable")


def is_primitive(w: str) -> bool:
    return primitive_root(w)[1] == 1


def is_lyndon(w: str, alphabet: Optional[Alphabet] = None) -> bool:
    if not w:
        raise ValueError("the empty word is not a Lyndon candidate")
    if not is_primitive(w):
        return False
    key = _key(alphabet)
    kw = key(w)
    return all(kw <= key(c) for c in conjugates(w))


def lyndon_conjugate(w: str, alphabet: Optional[Alphabet] = None) -> str:
    """The unique Lyndon conjugate of a primitive word."""
    u, v = lyndon_split(w, alphabet)
    return v + u


def lyndon_split(x: str, alphabet: Optional[Alphabet] = None) -> tuple[str, str]:
    """Factor a primitive ``x`` as ``u + v`` with ``v + u`` Lyndon and ``u`` shortest."""
    if not x:
        raise ValueError("the empty word cannot be rotated")
    if not is_primitive(x):
        raise ValueError(f"{x!r} is not primitive; take its primitive root first")
    for i in range(len(x)):
        if is_lyndon(x[i:] + x[:i], alphabet):
            return x[:i], x[i:]
    raise AssertionError("a primitive word always has a Lyndon conjugate")


def max_power_suffix(base: str, w: str) -> int:
    """Largest ``t >= 0`` such that ``base * t`` is a suffix of ``w``."""
    if not base:
        raise ValueError("empty base")
    t = 0
    end = len(w)
    while end >= len(base) and w[end - len(base):end] == base:
        t += 1
        end -= len(base)
    return t


def max_power_prefix(base: str, w: str) -> int:
    if not base:
        raise ValueError("empty base")
    t = 0
    start = 0
    while w.startswith(base, start):
        t += 1
        start += len(base)
    return t
