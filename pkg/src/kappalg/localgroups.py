"""The local groups S(G, L, f) and the semigroups built around them.

Elements of ``S(G, L, f)`` are either words of ``L`` (:class:`NonRegular`)
or triples ``(u, g, v)`` with ``u, v`` in ``L ∪ {1}`` (:class:`Triple`).  The
product of two elements is the reduction of their concatenation, where the
reduction map handles words that mix letters with group elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, NamedTuple, Optional

from .groups import FiniteGroup
from .langdecomp import (BoundedLanguage, FactorialLanguage, boundary_occurrences,
                         coordinates)
from .semigroups import (Cayley, InternalConsistencyError, Semigroup, is_associative,
                         is_completely_simple_subset, is_local_group, minimal_ideal_indices)
from .words import Alphabet, head, tail


class Grp(NamedTuple):
    """A group letter inside a mixed word."""
    g: Any


class NonRegular(NamedTuple):
    word: str


class Triple(NamedTuple):
    u: str
    g: Any
    v: str


class GFunction:
    """A map ``L ∪ boundary(L) -> G``; words not listed go to the identity."""

    def __init__(self, language: FactorialLanguage, group: FiniteGroup, values: Optional[dict] = None,
                 default_identity: bool = True):
        self.language = language
        self.group = group
        self.values = dict(values or {})
        for w in self.values:
            if w not in language and not language.is_boundary(w):
                raise ValueError(f"f is defined on L and its boundary only; {w!r} is neither")
        if not default_identity:
            missing = [w for w in list(language) + sorted(language.boundary) if w not in self.values]
            if missing:
                raise ValueError(f"f is not total; missing {missing[:5]}")

    def __call__(self, w: str):
        return self.values.get(w, self.group.identity)


def mixed(*parts) -> tuple:
    """Tokens of a mixed word from strings (split into letters) and :class:`Grp` values."""
    out = []
    for p in parts:
        if isinstance(p, Grp):
            out.append(p)
        else:
            out.extend(p)
    return tuple(out)


class LocalGroup(Semigroup):
    """``S(G, L, f)`` with symbolic elements and lazily enumerated universe."""

    def __init__(self, gf: GFunction, name: str = "S(G,L,f)"):
        self.f = gf
        self.language = gf.language
        self.group = gf.group
        self.name = name
        self._scan_cache: dict = {}

    # -- the f-function family -------------------------------------------

    def _scan(self, w: str):
        """``(w0, inner, wm, m)`` with ``inner = f(b1) f(w1) ... f(bm)``."""
        try:
            return self._scan_cache[w]
        except KeyError:
            pass
        L, G, f = self.language, self.group, self.f
        occ = boundary_occurrences(L, w)
        if not occ:
            res = (w, G.identity, w, 0)
        else:
            acc = G.identity
            for i, (p, q) in enumerate(occ):
                acc = G.mul(acc, f(w[p: q + 1]))
                if i + 1 < len(occ):
                    acc = G.mul(acc, f(w[p + 1: occ[i + 1][1]]))
            res = (w[: occ[0][1]], acc, w[occ[-1][0] + 1:], len(occ))
        if len(self._scan_cache) < 200_000:
            self._scan_cache[w] = res
        return res

    def f_hat(self, w: str):
        if not w:
            return self.group.identity
        w0, inner, wm, m = self._scan(w)
        if m == 0:
            return self.f(w)
        G = self.group
        return G.mul(G.mul(self.f(w0), inner), self.f(wm))

    def f_grave(self, w: str) -> tuple[str, Any]:
        """Left part of a reduced mixed word: ``(prefix word, group value)``."""
        if not w:
            return "", self.group.identity
        w0, inner, wm, m = self._scan(w)
        if m == 0:
            return w, self.group.identity
        return w0, self.group.mul(inner, self.f(wm))

    def f_acute(self, w: str) -> tuple[Any, str]:
        if not w:
            return self.group.identity, ""
        w0, inner, wm, m = self._scan(w)
        if m == 0:
            return self.group.identity, w
        return self.group.mul(self.f(w0), inner), wm

    def f_check_word(self, w: str):
        if not w:
            raise ValueError("the reduction map is defined on non-empty words")
        w0, inner, wm, m = self._scan(w)
        if m == 0:
            return NonRegular(w)
        return Triple(w0, inner, wm)

    def _blocks(self, tokens: Iterable) -> list:
        blocks: list = []
        G = self.group
        for t in tokens:
            if isinstance(t, Grp):
                if blocks and blocks[-1][0] == "g":
                    blocks[-1][1] = G.mul(blocks[-1][1], t.g)
                else:
                    blocks.append(["g", t.g])
            elif t:
                if blocks and blocks[-1][0] == "w":
                    blocks[-1][1] += t
                else:
                    blocks.append(["w", t])
        return blocks

    def _reduce_blocks(self, blocks: list):
        if not blocks:
            raise ValueError("empty mixed word")
        if len(blocks) == 1 and blocks[0][0] == "w":
            return self.f_check_word(blocks[0][1])
        G = self.group
        i, j = 0, len(blocks)
        left, acc = "", G.identity
        if blocks[0][0] == "w":
            left, acc = self.f_grave(blocks[0][1])
            i = 1
        right, tail_g = "", G.identity
        if blocks[-1][0] == "w":
            tail_g, right = self.f_acute(blocks[-1][1])
            j -= 1
        for kind, val in blocks[i:j]:
            acc = G.mul(acc, val if kind == "g" else self.f_hat(val))
        return Triple(left, G.mul(acc, tail_g), right)

    def f_check(self, tokens: Iterable):
        """Reduce a mixed word (letters, words and :class:`Grp` tokens) to an element."""
        return self._reduce_blocks(self._blocks(tokens))

    # -- semigroup structure ---------------------------------------------

    @staticmethod
    def tokens(z) -> tuple:
        if isinstance(z, NonRegular):
            return (z.word,)
        return (z.u, Grp(z.g), z.v)

    def mul(self, x, y):
        G = self.group
        if isinstance(x, Triple) and isinstance(y, Triple):
            return Triple(x.u, G.mul(G.mul(x.g, self.f_hat(x.v + y.u)), y.g), y.v)
        return self.f_check(self.tokens(x) + self.tokens(y))

    def is_element(self, z) -> bool:
        L = self.language
        if isinstance(z, NonRegular):
            return z.word in L
        if isinstance(z, Triple):
            return (not z.u or z.u in L) and (not z.v or z.v in L)
        return False

    def letter(self, a: str) -> NonRegular:
        if a not in self.language:
            raise ValueError(f"{a!r} is not a letter of the language")
        return NonRegular(a)

    def elements(self) -> list:
        ones = self.language.one_words()
        G = self.group.elements()
        return [NonRegular(w) for w in self.language] + [Triple(u, g, v) for u in ones for g in G for v in ones]

    def size(self) -> int:
        n1 = len(self.language) + 1
        return len(self.language) + n1 * n1 * self.group.order()

    def sandwich(self, v: str, u: str):
        """Structure-matrix entry ``f_hat(vu)`` for row ``v`` and column ``u``."""
        return self.f_hat(v + u)

    def omega_power(self, s, q: int):
        """``s^(omega+q)`` computed inside the group H-class of ``s^omega``."""
        G = self.group
        z = s
        if isinstance(s, NonRegular):
            # w^n lies in L for n below a threshold only, since L is factorial
            w, lo, hi = s.word, 1, self.language.maxlen // len(s.word) + 1
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if w * mid in self.language:
                    lo = mid
                else:
                    hi = mid
            z = self.f_check_word(w * hi)
        h = self.sandwich(z.v, z.u)
        hinv = G.inv(h)
        e = Triple(z.u, hinv, z.v)
        y = self.mul(e, s)
        if y.u != z.u or y.v != z.v:
            raise InternalConsistencyError("s^(omega+1) left the H-class of s^omega")
        return Triple(z.u, G.mul(G.power(G.mul(y.g, h), q), hinv), z.v)

    # -- serialization ---------------------------------------------------

    def to_json(self, z):
        if isinstance(z, NonRegular):
            return z.word
        return [z.u or "1", self.group.to_json(z.g), z.v or "1"]

    def from_json(self, x):
        if isinstance(x, str):
            if x not in self.language:
                raise ValueError(f"{x!r} is not in the language")
            return NonRegular(x)
        u, g, v = x
        u = "" if u == "1" else u
        v = "" if v == "1" else v
        for w in (u, v):
            if w and w not in self.language:
                raise ValueError(f"{w!r} is not in the language")
        return Triple(u, self.group.from_json(g), v)

    def element_str(self, z) -> str:
        if isinstance(z, NonRegular):
            return z.word
        return f"({z.u or '1'}, {self.group.name(z.g)}, {z.v or '1'})"


def build_local_group(L: FactorialLanguage, G: FiniteGroup, values: Optional[dict] = None,
                      default_identity: bool = True, name: str = "S(G,L,f)") -> LocalGroup:
    return LocalGroup(GFunction(L, G, values, default_identity), name)


def f_hat(S: LocalGroup, w: str):
    return S.f_hat(w)


def f_check(S: LocalGroup, tokens):
    return S.f_check(tokens)


def multiply(S: LocalGroup, x, y):
    if not S.is_element(x) or not S.is_element(y):
        raise ValueError("element does not belong to this local group")
    return S.mul(x, y)


# -------------------------------------------------------------- Rees matrices


class ReesMatrix(Semigroup):
    """``M[G; I, Λ; P]`` with ``(i,g,λ)(j,h,μ) = (i, g P(λ,j) h, μ)``."""

    def __init__(self, group: FiniteGroup, rows: list, cols: list, sandwich: Callable, name: str = "Rees"):
        self.group = group
        self.I = list(rows)
        self.Lam = list(cols)
        self.P = {(lam, j): sandwich(lam, j) for lam in self.Lam for j in self.I}
        self.name = name

    def mul(self, x, y):
        G = self.group
        i, g, lam = x
        j, h, mu = y
        return (i, G.mul(G.mul(g, self.P[(lam, j)]), h), mu)

    def elements(self) -> list:
        return [(i, g, lam) for i in self.I for g in self.group.elements() for lam in self.Lam]


def rees_of(S: LocalGroup) -> ReesMatrix:
    ones = S.language.one_words()
    return ReesMatrix(S.group, ones, ones, S.sandwich, name=f"Rees({S.name})")


@dataclass
class StructureReport:
    size: int
    associative: bool
    ideal_is_triples: bool
    ideal_completely_simple: bool
    idempotents_in_ideal: bool
    rees_isomorphism: bool
    quotient_nilpotent: bool
    local_group: bool

    def ok(self) -> bool:
        return all([self.associative, self.ideal_is_triples, self.ideal_completely_simple,
                    self.idempotents_in_ideal, self.rees_isomorphism, self.quotient_nilpotent,
                    self.local_group])


def structure_report(S: LocalGroup, samples: int = 10_000, seed: int = 0) -> StructureReport:
    import random

    C = Cayley(S)
    K = minimal_ideal_indices(C)
    triples = {i for i, z in enumerate(C.elems) if isinstance(z, Triple)}
    E = set(C.idempotents())
    R = rees_of(S)
    iso = all(
        R.mul((x.u, x.g, x.v), (y.u, y.g, y.v)) == tuple(S.mul(x, y))
        for x in (C.elems[i] for i in triples) for y in (C.elems[j] for j in triples)
    )
    nonreg = [z for z in C.elems if isinstance(z, NonRegular)]
    nilpotent = all(S.mul(w, w) != w for w in nonreg)
    bound = len(nonreg) + 1
    for w in nonreg:
        x = w
        for _ in range(bound):
            x = S.mul(x, w)
        nilpotent = nilpotent and isinstance(x, Triple)
    return StructureReport(
        size=C.n,
        associative=is_associative(S, samples=samples, rng=random.Random(seed)),
        ideal_is_triples=K == triples,
        ideal_completely_simple=is_completely_simple_subset(C, K),
        idempotents_in_ideal=E <= K,
        rees_isomorphism=iso,
        quotient_nilpotent=nilpotent,
        local_group=is_local_group(S, C),
    )


# --------------------------------------------------------------- presentations


@dataclass
class Presentation:
    alphabet: Alphabet
    group: FiniteGroup
    relations: list = field(default_factory=list)

    def generators(self) -> list[str]:
        return list(self.alphabet.letters) + [self.gen_name(g) for g in self.group.elements()]

    def gen_name(self, g) -> str:
        return f"<{self.group.name(g)}>"

    def render(self, tokens) -> str:
        return "".join(self.gen_name(t.g) if isinstance(t, Grp) else t for t in tokens)

    def to_json(self) -> dict:
        return {
            "generators": self.generators(),
            "identity_generator": self.gen_name(self.group.identity),
            "relations": [[self.render(l), self.render(r)] for l, r in self.relations],
        }

    def parse(self, text: str) -> tuple:
        """Tokens of a rendered relation side; group generators are written ``<name>``."""
        names = {self.gen_name(g): g for g in self.group.elements()}
        out = []
        i = 0
        while i < len(text):
            if text[i] == "<":
                j = text.index(">", i)
                name = text[i: j + 1]
                if name not in names:
                    raise ValueError(f"unknown generator {name}")
                out.append(Grp(names[name]))
                i = j + 1
            else:
                if text[i] not in self.alphabet:
                    raise ValueError(f"unknown generator {text[i]!r}")
                out.append(text[i])
                i += 1
        return tuple(out)


def emit_presentation(S: LocalGroup) -> Presentation:
    G = S.group
    L = S.language
    e = Grp(G.identity)
    rels = []
    for g in G.elements():
        for h in G.elements():
            rels.append(((Grp(g), Grp(h)), (Grp(G.mul(g, h)),)))
    for u in L:
        rels.append(((e,) + tuple(u) + (e,), (Grp(S.f(u)),)))
    for v in sorted(L.boundary, key=lambda w: (len(w), L.alphabet.key(w))):
        rels.append((tuple(v), tuple(v[:-1]) + (Grp(S.f(v)),) + tuple(v[1:])))
    return Presentation(L.alphabet, G, rels)


def verify_relations(S: LocalGroup, P: Presentation) -> bool:
    for lhs, rhs in P.relations:
        for side in (lhs, rhs):
            for t in side:
                if not isinstance(t, Grp) and t not in S.language.alphabet:
                    raise ValueError(f"unknown generator {t!r}")
        if S.f_check(lhs) != S.f_check(rhs):
            return False
    return True


# ------------------------------------------------------- M_k and S'_k


class SuperpositionHom:
    """A k-superposition homomorphism into ``G`` fixed by its values on ``A^(k+1)``."""

    def __init__(self, alphabet: Alphabet, k: int, group: FiniteGroup, values: dict):
        self.alphabet, self.k, self.group = alphabet, k, group
        self.values = dict(values)
        for w in self.values:
            if len(w) != k + 1:
                raise ValueError(f"values are given on words of length {k + 1}")

    def __call__(self, w: str):
        G, k = self.group, self.k
        acc = G.identity
        for i in range(len(w) - k):
            acc = G.mul(acc, self.values.get(w[i: i + k + 1], G.identity))
        return acc


class MkSemigroup(Semigroup):
    """``M_k(G, ħ)``: non-regular ``(v,1,v)`` for ``|v| < k`` over ``A^k × G × A^k``."""

    def __init__(self, hom: SuperpositionHom):
        self.hom = hom
        self.group = hom.group
        self.k = hom.k
        self.alphabet = hom.alphabet
        self.name = f"M_{self.k}"

    def mul(self, x, y):
        G, k = self.group, self.k
        u, g, v = x
        u2, g2, v2 = y
        return (head(u + u2, k), G.mul(G.mul(g, self.hom(v + u2)), g2), tail(v + v2, k))

    def elements(self) -> list:
        A = self.alphabet.letters
        low = ["".join(t) for n in range(1, self.k) for t in product(A, repeat=n)]
        top = ["".join(t) for t in product(A, repeat=self.k)]
        G = self.group
        return [(v, G.identity, v) for v in low] + [(u, g, v) for u in top for g in G.elements() for v in top]


def build_Mk(alphabet: Alphabet, k: int, group: FiniteGroup, values: dict) -> MkSemigroup:
    return MkSemigroup(SuperpositionHom(alphabet, k, group, values))


def sk_from_hom(hom: SuperpositionHom) -> LocalGroup:
    """``S_k(G, f)`` with ``f`` the restriction of ``hom`` to ``A^{<=k+1}``."""
    L = FactorialLanguage(hom.alphabet, [
        "".join(t) for n in range(1, hom.k + 1) for t in product(hom.alphabet.letters, repeat=n)])
    return build_local_group(L, hom.group, dict(hom.values), name=f"S_{hom.k}")


class SkPrime(Semigroup):
    """Quotient of ``S_k(G, f)`` merging each word ``u`` of length ``k`` with ``(u, 1, u)``."""

    def __init__(self, S: LocalGroup, k: int):
        self.S = S
        self.k = k
        self.group = S.group
        self.name = f"S'_{k}"

    def canon(self, z):
        if isinstance(z, NonRegular) and len(z.word) == self.k:
            return Triple(z.word, self.group.identity, z.word)
        return z

    def mul(self, x, y):
        return self.canon(self.S.mul(x, y))

    def elements(self) -> list:
        return [z for z in self.S.elements() if self.canon(z) == z]


@dataclass
class SkPrimeReport:
    size: int
    congruence: bool
    phi_homomorphism: bool
    phi_injective: bool

    def ok(self) -> bool:
        return self.congruence and self.phi_homomorphism and self.phi_injective


def build_Sk_prime(S: LocalGroup, k: int, Mk: Optional[MkSemigroup] = None) -> tuple[SkPrime, SkPrimeReport]:
    L = S.language
    if L.maxlen != k or len(L) != sum(len(L.alphabet) ** i for i in range(1, k + 1)):
        raise ValueError("S'_k needs the language of all words of length at most k")
    G = S.group
    for w in L:
        if S.f(w) != G.identity:
            raise ValueError("S'_k needs f to be trivial on L_k")
    Q = SkPrime(S, k)
    elems = S.elements()
    pairs = [(NonRegular(w), Triple(w, G.identity, w)) for w in L if len(w) == k]
    congruence = all(
        Q.canon(S.mul(x, a)) == Q.canon(S.mul(x, b)) and Q.canon(S.mul(a, x)) == Q.canon(S.mul(b, x))
        for a, b in pairs for x in elems
    )
    if not congruence:
        raise InternalConsistencyError("merging u with (u,1,u) is not a congruence")
    hom_ok = inj_ok = True
    if Mk is not None:
        def phi(x):
            u, g, v = x
            if len(u) < k:
                return NonRegular(u)
            return Triple(u, g, v)

        M_el = Mk.elements()
        images = [phi(x) for x in M_el]
        inj_ok = len(set(images)) == len(images) and all(Q.canon(z) == z for z in images)
        hom_ok = all(phi(Mk.mul(x, y)) == Q.mul(phi(x), phi(y)) for x in M_el for y in M_el)
    return Q, SkPrimeReport(len(Q.elements()), congruence, hom_ok, inj_ok)


def example_S1(group_gen: str = "g") -> tuple[LocalGroup, MkSemigroup]:
    """The one-letter example: ``A = {a}``, ``k = 1``, ``G = C_2`` and ``ħ(aa) = g``."""
    from .groups import cyclic

    A = Alphabet(("a",))
    C2 = cyclic(2, group_gen)
    hom = SuperpositionHom(A, 1, C2, {"aa": 1})
    return sk_from_hom(hom), MkSemigroup(hom)
