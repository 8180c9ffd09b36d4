"""Seeded random instances shared by the test-suite and ``selftest``."""

from __future__ import annotations

import random
from typing import Optional

from .canonical import canonical_form, rank1_form
from .groups import FiniteGroup, ProductGroup, cyclic, symmetric_group, trivial_group
from .kappa import OmegaPower, concat, to_str
from .langdecomp import FactorialLanguage, make_factorial
from .localgroups import LocalGroup, build_local_group
from .words import Alphabet


def small_groups() -> list[FiniteGroup]:
    return [trivial_group(), cyclic(2), cyclic(3), cyclic(4), ProductGroup(cyclic(2), cyclic(2)),
            cyclic(5), cyclic(6), symmetric_group(3)]


def random_word(rng: random.Random, letters: str, lo: int, hi: int) -> str:
    return "".join(rng.choice(letters) for _ in range(rng.randint(lo, hi)))


def random_language(rng: random.Random, letters: str = "ab", max_size: int = 12) -> FactorialLanguage:
    """A factorial closure of a few random words, aiming at a random size up to ``max_size``."""
    A = Alphabet(tuple(letters))
    target = rng.randint(len(letters), max_size)
    best = None
    for _ in range(30):
        seeds = [random_word(rng, letters, 1, 5) for _ in range(rng.randint(1, 4))]
        L = make_factorial(A, seeds)
        if len(L) <= max_size and (best is None or abs(len(L) - target) < abs(len(best) - target)):
            best = L
    return best or make_factorial(A, list(letters))


def random_local_group(rng: random.Random, letters: Optional[str] = None, max_lang: int = 6,
                       groups: Optional[list] = None) -> LocalGroup:
    letters = letters or rng.choice(["a", "ab", "ab"])
    L = random_language(rng, letters, max_lang)
    G = rng.choice(groups or small_groups())
    elems = G.elements()
    support = list(L) + sorted(L.boundary)
    values = {w: rng.choice(elems) for w in support if rng.random() < 0.6}
    return build_local_group(L, G, values, name=f"S(|G|={G.order()},|L|={len(L)})")


def random_rank1_term(rng: random.Random, letters: str = "ab", blocks: int = 3, max_q: int = 3):
    parts: list = []
    if rng.random() < 0.5:
        parts.append(random_word(rng, letters, 1, 3))
    for _ in range(rng.randint(1, blocks)):
        parts.append(OmegaPower(random_word(rng, letters, 1, 4), rng.randint(-max_q, max_q)))
        if rng.random() < 0.6:
            parts.append(random_word(rng, letters, 1, 4))
    return concat(*parts)


def canonical_corpus(n: int = 24, seed: int = 0, letters: str = "ab", max_blocks: int = 2, max_q: int = 2) -> list:
    """Distinct canonical rank-1 terms with at most ``max_blocks`` powers and ``|q| <= max_q``."""
    rng = random.Random(seed)
    A = Alphabet(tuple(letters))
    seen: dict = {}
    while len(seen) < n:
        t = canonical_form(random_rank1_term(rng, letters, max_blocks, max_q), A)
        form = rank1_form(t)
        if form.m <= max_blocks and all(abs(q) <= max_q for _, q, _ in form.blocks) and len(to_str(t)) <= 24:
            seen.setdefault(to_str(t), t)
    return list(seen.values())


def canonical_pairs(n: int = 24, seed: int = 0) -> list[tuple]:
    terms = canonical_corpus(n, seed)
    return [(terms[i], terms[(i + 1) % len(terms)]) for i in range(len(terms))]


def equivalent_variant(t, rng: random.Random):
    """Rewrite a canonical term by identities valid in every finite semigroup."""
    f = rank1_form(t)
    parts = [f.u0]
    for x, q, u in f.blocks:
        k = rng.randint(0, 2)
        choice = rng.random()
        if choice < 0.3:
            parts += [OmegaPower(x * 2, 0) if q == 0 and k == 0 else OmegaPower(x, q - k), x * k, u]
        elif choice < 0.6:
            parts += [x * k, OmegaPower(x, q - k), u]
        elif len(x) > 1:
            # x^(w+q) = s (t s)^(w+q-1) t for x = s t
            cut = rng.randint(1, len(x) - 1)
            s, r = x[:cut], x[cut:]
            parts += [s, OmegaPower(r + s, q - 1), r, u]
        else:
            parts += [OmegaPower(x, q - 1), x, u]
    return concat(*[p for p in parts if p != ""])
