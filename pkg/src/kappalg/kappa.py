"""kappa-terms: syntax trees, concrete syntax, rank and evaluation.

Concrete grammar::

    term     := factor+
    factor   := atom ('^' exponent)?
    atom     := LETTER | '(' term ')'
    exponent := NAT | 'w' | '(' 'w' (('+' | '-') NAT)? ')'

``x^n`` with a natural ``n`` is expanded into ``n`` copies at parse time;
``x^(w+q)`` is the power ``x^omega x^q`` (for negative ``q``, a power of the
group inverse of ``x^(omega+1)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .semigroups import Semigroup, omega_power
from .words import Alphabet


@dataclass(frozen=True)
class Letter:
    a: str


@dataclass(frozen=True)
class Concat:
    items: tuple


@dataclass(frozen=True)
class OmegaPower:
    """``base^(omega+q)``; a rank-0 base is stored as a plain word."""
    base: Union[str, "Letter", "Concat", "OmegaPower"]
    q: int


Term = Union[Letter, Concat, OmegaPower]


class KappaSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


class RankError(ValueError):
    pass


def word(w: str) -> Term:
    if not w:
        raise ValueError("the empty word is not a kappa-term")
    if len(w) == 1:
        return Letter(w)
    return Concat(tuple(Letter(a) for a in w))


def concat(*items) -> Term:
    flat: list = []
    for t in items:
        if isinstance(t, str):
            if t:
                flat.extend(Letter(a) for a in t)
        elif isinstance(t, Concat):
            flat.extend(t.items)
        else:
            flat.append(t)
    if not flat:
        raise ValueError("the empty word is not a kappa-term")
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def as_word(t) -> Optional[str]:
    """The word spelled by a rank-0 term, or ``None``."""
    if isinstance(t, str):
        return t
    if isinstance(t, Letter):
        return t.a
    if isinstance(t, Concat) and all(isinstance(x, Letter) for x in t.items):
        return "".join(x.a for x in t.items)
    return None


def power(base, q: int) -> OmegaPower:
    w = as_word(base)
    return OmegaPower(w if w is not None else base, int(q))


def rank(t) -> int:
    if isinstance(t, (str, Letter)):
        return 0
    if isinstance(t, Concat):
        return max(rank(x) for x in t.items)
    return 1 + rank(t.base)


def letters(t) -> set[str]:
    if isinstance(t, str):
        return set(t)
    if isinstance(t, Letter):
        return {t.a}
    if isinstance(t, Concat):
        return set().union(*(letters(x) for x in t.items))
    return letters(t.base)


# ------------------------------------------------------------------ parsing

_SPECIAL = set("()^+-") | set("0123456789")


class _Parser:
    def __init__(self, text: str, alphabet: Optional[Alphabet]):
        self.text = text
        self.i = 0
        self.alphabet = alphabet

    def err(self, msg: str):
        raise KappaSyntaxError(msg, self.i, self.text)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, c: str):
        if self.peek() != c:
            self.err(f"expected {c!r}")
        self.i += 1

    def nat(self) -> int:
        self.skip()
        j = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.err("expected a natural number")
        return int(self.text[j: self.i])

    def term(self) -> Term:
        items = []
        while True:
            c = self.peek()
            if c == "" or c == ")":
                break
            items.append(self.factor())
        if not items:
            self.err("expected a letter or '('")
        return concat(*items)

    def atom(self) -> Term:
        c = self.peek()
        if c == "(":
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        if not c or c in _SPECIAL:
            self.err("expected a letter or '('")
        if self.alphabet is not None and c not in self.alphabet:
            self.err(f"letter {c!r} is not in the alphabet")
        self.i += 1
        return Letter(c)

    def factor(self) -> Term:
        a = self.atom()
        if self.peek() != "^":
            return a
        self.i += 1
        c = self.peek()
        if c.isdigit():
            n = self.nat()
            if n == 0:
                self.err("exponent 0 would give the empty word")
            return concat(*([a] * n))
        if c == "w":
            self.i += 1
            return power(a, 0)
        if c == "(":
            self.i += 1
            if self.peek() != "w":
                self.err("expected 'w' in exponent")
            self.i += 1
            q = 0
            sign = self.peek()
            if sign in "+-" and sign:
                self.i += 1
                q = self.nat() * (1 if sign == "+" else -1)
            self.expect(")")
            return power(a, q)
        self.err("expected an exponent")


def parse(text: str, alphabet: Optional[Alphabet] = None) -> Term:
    p = _Parser(text, alphabet)
    t = p.term()
    if p.peek() != "":
        p.err("unexpected character")
    return t


# ----------------------------------------------------------------- printing


def _exp(q: int) -> str:
    if q == 0:
        return "^w"
    return f"^(w{'+' if q > 0 else '-'}{abs(q)})"


def _word_str(w: str) -> list[str]:
    """Chunks of a word with runs of three or more equal letters folded to ``a^n``."""
    out: list[str] = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        if j - i >= 3:
            out.append(f"{w[i]}^{j - i}")
        else:
            if out and "^" not in out[-1]:
                out[-1] += w[i:j]
            else:
                out.append(w[i:j])
        i = j
    return out


def to_str(t) -> str:
    chunks: list[str] = []
    _chunks(t, chunks)
    out = ""
    for c in chunks:
        if out and "^" in prev:
            out += " "
        out += c
        prev = c
    return out


def _chunks(t, out: list):
    if isinstance(t, (str, Letter, Concat)) and as_word(t) is not None:
        for c in _word_str(as_word(t)):
            if out and "^" not in out[-1] and "^" not in c:
                out[-1] += c
            else:
                out.append(c)
        return
    if isinstance(t, Concat):
        for x in t.items:
            _chunks(x, out)
        return
    b = t.base
    if isinstance(b, str):
        inner = b if len(b) == 1 else f"({b})"
    else:
        inner = f"({to_str(b)})"
    out.append(inner + _exp(t.q))


# --------------------------------------------------------------- evaluation


def evaluate(t, S: Semigroup, assignment: dict, _cache: Optional[dict] = None):
    """Value of ``t`` in ``S`` under ``assignment`` (letter -> element).

    A dict passed as ``_cache`` memoizes power values and may be shared between
    calls that use the same semigroup and assignment.
    """
    cache = {} if _cache is None else _cache
    if isinstance(t, (str, Letter)):
        w = t if isinstance(t, str) else t.a
        acc = None
        for a in w:
            try:
                x = assignment[a]
            except KeyError:
                raise ValueError(f"letter {a!r} is not assigned") from None
            acc = x if acc is None else S.mul(acc, x)
        return acc
    if isinstance(t, Concat):
        acc = None
        for item in t.items:
            x = evaluate(item, S, assignment, cache)
            acc = x if acc is None else S.mul(acc, x)
        return acc
    if t in cache:
        return cache[t]
    s = evaluate(t.base, S, assignment, cache)
    val = cache[t] = omega_power(S, s, t.q)
    return val
