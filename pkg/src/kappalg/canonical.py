"""Rank-1 canonical forms of kappa-terms and the rewriting that reaches them.

A rank-1 term is handled as a flat sequence of non-empty words and powers
``OmegaPower(x, q)`` with a word base ``x``.  Every rewrite instantiates one of
the identities below exactly once, at one position:

    1. (x^n)^(w+j) = x^(w+nj)
    2. x^(w+i) x^(w+j) = x^(w+i+j)
    3. x^(w+i) x = x^(w+i+1)   (3R)    x x^(w+i) = x^(w+i+1)   (3L)
    4. (xy)^(w+i) x = x (yx)^(w+i)     (shift)

read left to right (contraction) or right to left (expansion).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .kappa import Concat, Letter, OmegaPower, RankError, Term, as_word, concat, rank, word
from .semigroups import InternalConsistencyError
from .words import Alphabet, is_lyndon, lyndon_split, primitive_root

KINDS = ("Contraction1", "Contraction2", "Contraction3L", "Contraction3R",
         "Expansion1", "Expansion2", "Expansion3L", "Expansion3R", "Shift")


@dataclass(frozen=True)
class RewriteStep:
    kind: str
    before: Term
    after: Term


@dataclass
class RewriteTrace:
    steps: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def kinds(self) -> list[str]:
        return [s.kind for s in self.steps]


@dataclass(frozen=True)
class Rank1Form:
    u0: str
    blocks: tuple  # of (x, q, u)

    @property
    def m(self) -> int:
        return len(self.blocks)

    def to_term(self) -> Term:
        return from_seq([self.u0] + [p for x, q, u in self.blocks for p in (OmegaPower(x, q), u)])


def flatten(t) -> list:
    """Flat sequence of words and word-based powers for a term of rank at most 1."""
    out: list = []

    def walk(s):
        if isinstance(s, Letter):
            out.append(s.a)
        elif isinstance(s, Concat):
            for x in s.items:
                walk(x)
        else:
            b = as_word(s.base)
            if b is None:
                raise RankError("canonical forms are defined for terms of rank at most 1")
            out.append(OmegaPower(b, s.q))

    walk(t)
    return normalize(out)


def normalize(seq: list) -> list:
    out: list = []
    for x in seq:
        if isinstance(x, str):
            if not x:
                continue
            if out and isinstance(out[-1], str):
                out[-1] += x
                continue
        out.append(x)
    return out


def from_seq(seq: list) -> Term:
    return concat(*[x for x in seq if x != ""])


def rank1_form(t) -> Rank1Form:
    seq = flatten(t)
    if not any(isinstance(x, OmegaPower) for x in seq):
        raise RankError("a rank-1 form needs at least one power")
    u0 = ""
    i = 0
    if isinstance(seq[0], str):
        u0, i = seq[0], 1
    blocks = []
    while i < len(seq):
        p = seq[i]
        u = ""
        if i + 1 < len(seq) and isinstance(seq[i + 1], str):
            u = seq[i + 1]
            i += 1
        blocks.append((p.base, p.q, u))
        i += 1
    return Rank1Form(u0, tuple(blocks))


def is_canonical_rank1(t, alphabet: Optional[Alphabet] = None) -> bool:
    r = rank(t)
    if r >= 2:
        raise RankError("canonical forms are defined for terms of rank at most 1")
    if r == 0:
        return True
    form = rank1_form(t)
    prev_u = form.u0
    bl = form.blocks
    for i, (x, q, u) in enumerate(bl):
        if not is_lyndon(x, alphabet):
            return False
        if prev_u.endswith(x):
            return False
        nxt = bl[i + 1][0] * len(x) if i + 1 < len(bl) else ""
        if (u + nxt).startswith(x):
            return False
        prev_u = u
    return True


class _Rewriter:
    def __init__(self, seq: list, alphabet: Optional[Alphabet]):
        self.seq = normalize(seq)
        self.alphabet = alphabet
        self.trace = RewriteTrace()

    def commit(self, kind: str, new: list):
        new = normalize(new)
        self.trace.steps.append(RewriteStep(kind, from_seq(self.seq), from_seq(new)))
        self.seq = new

    def powers(self) -> list[int]:
        return [i for i, x in enumerate(self.seq) if isinstance(x, OmegaPower)]

    def step1(self):
        for i in self.powers():
            p = self.seq[i]
            root, n = primitive_root(p.base)
            if n > 1:
                new = list(self.seq)
                new[i] = OmegaPower(root, n * p.q)
                self.commit("Contraction1", new)

    def step2(self):
        i = 0
        while i < len(self.seq):
            p = self.seq[i]
            if isinstance(p, OmegaPower):
                u, v = lyndon_split(p.base, self.alphabet)
                if u:
                    x = p.base
                    # x^(w+q) -> x^(w+q-1) x
                    new = self.seq[:i] + [OmegaPower(x, p.q - 1), x] + self.seq[i + 1:]
                    self.commit("Expansion3R", new)
                    # (uv)^(w+q-1) u -> u (vu)^(w+q-1); the word after the power starts with x
                    nxt = self.seq[i + 1]
                    new = self.seq[:i] + [u, OmegaPower(v + u, p.q - 1), nxt[len(u):]] + self.seq[i + 2:]
                    merged = i > 0 and isinstance(self.seq[i - 1], str)
                    self.commit("Shift", new)
                    i = i if merged else i + 1
            i += 1

    def absorb(self, i: int) -> int:
        """Type-3 contractions on both sides of the power at ``i``; returns its new index."""
        while True:
            p = self.seq[i]
            x = p.base
            if i + 1 < len(self.seq) and isinstance(self.seq[i + 1], str) and self.seq[i + 1].startswith(x):
                new = self.seq[:i] + [OmegaPower(x, p.q + 1), self.seq[i + 1][len(x):]] + self.seq[i + 2:]
                self.commit("Contraction3R", new)
                continue
            if i > 0 and isinstance(self.seq[i - 1], str) and self.seq[i - 1].endswith(x):
                w = self.seq[i - 1]
                new = self.seq[: i - 1] + [w[: len(w) - len(x)], OmegaPower(x, p.q + 1)] + self.seq[i + 1:]
                self.commit("Contraction3L", new)
                i = i if len(w) > len(x) else i - 1
                continue
            return i

    def step3(self):
        i = 0
        while i < len(self.seq):
            if isinstance(self.seq[i], OmegaPower):
                i = self.absorb(i)
            i += 1

    def step4(self):
        i = 0
        while i + 1 < len(self.seq):
            a, b = self.seq[i], self.seq[i + 1]
            if isinstance(a, OmegaPower) and isinstance(b, OmegaPower) and a.base == b.base:
                self.commit("Contraction2", self.seq[:i] + [OmegaPower(a.base, a.q + b.q)] + self.seq[i + 2:])
                continue
            i += 1

    def step5(self):
        i = 0
        while True:
            pw = self.powers()
            pw = [j for j in pw if j >= i]
            if len(pw) < 2:
                return
            i, j = pw[0], pw[1]
            x = self.seq[i].base
            u = self.seq[i + 1] if j == i + 2 else ""
            y = self.seq[j].base
            ell = 0
            while len(u) + ell * len(y) < len(x):
                ell += 1
            if ell and (u + y * ell).startswith(x):
                for _ in range(ell):
                    p = self.seq[j]
                    new = self.seq[:j] + [p.base, OmegaPower(p.base, p.q - 1)] + self.seq[j + 1:]
                    merged = isinstance(self.seq[j - 1], str)
                    self.commit("Expansion3L", new)
                    j = j if merged else j + 1
                self.absorb(i)
            i += 1


def canonicalize_rank1(t, alphabet: Optional[Alphabet] = None) -> tuple[Term, RewriteTrace]:
    r = rank(t)
    if r >= 2:
        raise RankError("canonical forms are defined for terms of rank at most 1")
    if r == 0:
        return t, RewriteTrace()
    rw = _Rewriter(flatten(t), alphabet)
    rw.step1()
    rw.step2()
    rw.step3()
    rw.step4()
    rw.step5()
    out = from_seq(rw.seq)
    if not is_canonical_rank1(out, alphabet):
        raise InternalConsistencyError(f"standardization did not reach a canonical form: {out!r}")
    return out, rw.trace


def canonical_form(t, alphabet: Optional[Alphabet] = None) -> Term:
    return canonicalize_rank1(t, alphabet)[0]
