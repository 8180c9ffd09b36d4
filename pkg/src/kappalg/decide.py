"""Deciding kappa-identities of rank at most 1 over LG and S, with test semigroups.

Two separating constructions are provided.  The first builds a local group
``S(G, L, f)`` from a group identity ``w_pi = w_rho`` over one variable per
base and one per crucial portion.  The second uses ``S_k(G, f)`` with ``L``
the words of length at most ``k`` and a group identity read off the
length-``k+1`` windows of long finite approximations of the terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canonical import Rank1Form, RewriteTrace, canonicalize_rank1, rank1_form
from .groups import (FiniteGroup, GroupAssignment, cyclic, fw_inverse, fw_power, fw_str,
                     group_from_json, lcm, order_boost, reduce, separating_hom, trivial_group)
from .kappa import OmegaPower, RankError, as_word, evaluate, letters, parse, rank, to_str
from .langdecomp import BoundedLanguage, FactorialLanguage, coordinates
from .localgroups import GFunction, LocalGroup, NonRegular, Triple
from .semigroups import InternalConsistencyError
from .words import Alphabet, conjugates, factors, head, max_power_suffix, tail

SEARCH_CAP = 10_000

RANK2_MESSAGE = ("only terms of rank at most 1 are supported; from rank 2 on the answers for LG and S "
                 "differ, e.g. LG satisfies (x^w y x^w)^w = x^w while S does not")


def _term(t, alphabet: Optional[Alphabet] = None):
    return parse(t, alphabet) if isinstance(t, str) else t


@dataclass
class IdentityProblem:
    pi: object
    rho: object
    pi_canon: object
    rho_canon: object
    pi_form: Rank1Form
    rho_form: Rank1Form
    alphabet: Alphabet
    pi_trace: RewriteTrace = field(default_factory=RewriteTrace)
    rho_trace: RewriteTrace = field(default_factory=RewriteTrace)

    @property
    def m(self) -> int:
        return self.pi_form.m

    @property
    def n(self) -> int:
        return self.pi_form.m + self.rho_form.m

    @property
    def blocks(self) -> tuple:
        return self.pi_form.blocks + self.rho_form.blocks

    # 1-based accessors matching the block numbering of both terms together
    def x(self, i: int) -> str:
        return self.blocks[i - 1][0]

    def q(self, i: int) -> int:
        return self.blocks[i - 1][1]

    def u(self, i: int) -> str:
        return self.blocks[i - 1][2]

    def u_prime(self, j: int) -> str:
        """``u'_0`` for ``j = 0`` and ``u'_m`` for ``j = m``."""
        return self.pi_form.u0 if j == 0 else self.rho_form.u0

    def crucial(self) -> list[int]:
        return [i for i in range(1, self.n) if i != self.m]

    def triple(self, i: int) -> tuple[str, str, str]:
        return self.x(i), self.u(i), self.x(i + 1)


def make_problem(pi, rho, alphabet: Optional[Alphabet] = None) -> IdentityProblem:
    pi, rho = _term(pi, alphabet), _term(rho, alphabet)
    for t in (pi, rho):
        if rank(t) >= 2:
            raise RankError(RANK2_MESSAGE)
        if rank(t) == 0:
            raise ValueError("test semigroups are built for two terms of rank 1")
    used = letters(pi) | letters(rho)
    if alphabet is None:
        alphabet = Alphabet.of(used)
    else:
        alphabet = Alphabet(tuple(a for a in alphabet.letters if a in used))
    cp, tp = canonicalize_rank1(pi, alphabet)
    cr, tr = canonicalize_rank1(rho, alphabet)
    return IdentityProblem(pi, rho, cp, cr, rank1_form(cp), rank1_form(cr), alphabet, tp, tr)


def vx(x: str) -> str:
    return f"v[{x}]"


def vc(x: str, u: str, y: str) -> str:
    return f"v[{x},{u or '1'},{y}]"


# ----------------------------------------------------------- first construction


@dataclass
class Witness5:
    variables: list
    w_pi: tuple
    w_rho: tuple
    qq: int
    qqs: list  # qq_i for i = 1..n

    @property
    def trivial(self) -> bool:
        return self.w_pi == self.w_rho


def build_witness5(prob: IdentityProblem) -> Witness5:
    n, m = prob.n, prob.m
    qq = 1 + max(abs(prob.q(i)) for i in range(1, n + 1))
    qqs = [qq + prob.q(i) for i in range(1, n + 1)]
    variables = list(dict.fromkeys([vx(prob.x(i)) for i in range(1, n + 1)]
                                   + [vc(*prob.triple(i)) for i in prob.crucial()]))

    def word(first: int, last: int, u_left: str) -> tuple:
        out: list = []
        if u_left:
            out.append((vx(prob.x(first)), 1))
        for i in range(first, last + 1):
            out += [(vx(prob.x(i)), 1)] * qqs[i - 1]
            if i < last:
                out.append((vc(*prob.triple(i)), 1))
        if prob.u(last):
            out.append((vx(prob.x(last)), 1))
        return tuple(out)

    return Witness5(variables, word(1, m, prob.u_prime(0)), word(m + 1, n, prob.u_prime(m)), qq, qqs)


def build_eta5(wit: Witness5) -> GroupAssignment:
    """Separating assignment for ``w_pi = w_rho`` with every image of order at least ``2 qq``."""
    d = reduce(wit.w_pi + fw_inverse(wit.w_rho))
    if not d:
        C = cyclic(2 * wit.qq, "s")
        return GroupAssignment(C, {v: 1 for v in wit.variables})
    return order_boost(separating_hom(d, wit.variables), 2 * wit.qq)


def periodic_factors(x: str, length: int) -> set[str]:
    """Every factor of length at most ``length`` of the infinite periodic word ``xxx...``."""
    big = x * (length // len(x) + 2)
    out = set()
    for s in range(len(x)):
        for n in range(1, length + 1):
            out.add(big[s: s + n])
    return out


def language_from_generators(alphabet: Alphabet, words, periodic) -> FactorialLanguage:
    """``F(words ∪ {c^k : c conjugate of x})`` plus the letters, for ``(x, k)`` in ``periodic``."""
    ws = set(alphabet.letters)
    for w in words:
        if w:
            ws |= factors(w)
    for x, k in periodic:
        ws |= periodic_factors(x, k * len(x))
    return FactorialLanguage(alphabet, ws)


def synchronized(w: str, tri: tuple, other: tuple, N: int, jj: int) -> bool:
    """Whether ``w = x^jj u y^jj`` (from ``tri``) occurs at most once, and aligned, around ``other``.

    The finite window ``x'^N u' y'^N`` stands in for the bi-infinite word; an
    occurrence inside one of its periodic parts would repeat forever, so a
    second occurrence or a misaligned one both count as failures.
    """
    x, u, y = other
    window = x * N + u + y * N
    first = window.find(w)
    if first == -1:
        return True
    if window.find(w, first + 1) != -1:
        return False
    return tri == other and first == (N - jj) * len(x)


@dataclass
class Params5:
    i: int
    j: int
    k: int
    kprime: int
    W_i: list
    W_j: list
    t: dict
    language: FactorialLanguage
    gfunction: GFunction
    eta: GroupAssignment

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k, "kprime": self.kprime}


def _len_term(prob: IdentityProblem, first: int, last: int, u_left: str) -> int:
    return len(u_left) + sum(len(prob.x(i)) + len(prob.u(i)) for i in range(first, last + 1))


def choose_parameters(prob: IdentityProblem, wit: Witness5, eta: Optional[GroupAssignment] = None) -> Params5:
    eta = eta or build_eta5(wit)
    G = eta.group
    n, m = prob.n, prob.m
    xs = [prob.x(i) for i in range(1, n + 1)]
    maxl = max(map(len, xs))
    ii = _len_term(prob, 1, m, prob.u_prime(0)) + _len_term(prob, m + 1, n, prob.u_prime(m)) + 1
    W_i = list(dict.fromkeys([prob.u_prime(0) + prob.x(1) * ii, prob.u_prime(m) + prob.x(m + 1) * ii,
                              prob.x(m) * ii + prob.u(m), prob.x(n) * ii + prob.u(n)]))
    crucial = prob.crucial()
    triples = list(dict.fromkeys(prob.triple(i) for i in crucial))

    def wj(jj):
        return [x * jj + u + y * jj for x, u, y in triples]

    jj = ii + 1
    if triples:
        for _ in range(SEARCH_CAP):
            members = wj(jj)
            N = jj + maxl + max(map(len, members))
            if all(synchronized(w, tri, other, N, jj) for w, tri in zip(members, triples) for other in triples):
                break
            jj += 1
        else:
            raise InternalConsistencyError("no synchronizing exponent found below the search cap")
    W_j = wj(jj)

    orders = {x: G.element_order(eta.images[vx(x)]) for x in dict.fromkeys(xs)}
    M = lcm(orders.values())
    kk = jj + 1
    kk += (-1 - wit.qq - kk) % M
    conj = {c for x in xs for c in conjugates(x)}
    for _ in range(SEARCH_CAP):
        if not any(c * kk in w for c in conj for w in W_j):
            break
        kk += M
    else:
        raise InternalConsistencyError("no admissible k found below the search cap")

    L = language_from_generators(prob.alphabet, W_i + W_j, [(x, kk) for x in dict.fromkeys(xs)])
    for x in xs:
        if x * (kk + 1) in L:
            raise InternalConsistencyError(f"{x}^(k+1) unexpectedly lies in the language")

    values: dict = {}
    t = {}
    for x in xs:
        values[x * kk] = eta.images[vx(x)]
    for (x, u, y), w in zip(triples, W_j):
        ti = max_power_suffix(y, x * jj + u)
        t[(x, u, y)] = ti
        gx, gc, gy = (eta.images[vx(x)], eta.images[vc(x, u, y)], eta.images[vx(y)])
        values[w] = G.mul(G.mul(G.inv(gx), gc), G.power(gy, -ti - 1))
    f = GFunction(L, G, values)
    return Params5(ii, jj, kk, kk + 1 + wit.qq, W_i, W_j, t, L, f, eta)


@dataclass
class Report5:
    phi_pi: object
    phi_rho: object
    expected_pi: object
    expected_rho: object
    kernel_sizes: dict
    orders: dict
    power_formula: bool
    omega_matches_kprime: bool
    crucial_values: bool

    @property
    def separated(self) -> bool:
        return self.phi_pi != self.phi_rho

    @property
    def formula_ok(self) -> bool:
        return self.phi_pi == self.expected_pi and self.phi_rho == self.expected_rho

    @property
    def checks_ok(self) -> bool:
        return (self.kernel_sizes == self.orders and self.power_formula and self.omega_matches_kprime
                and self.crucial_values)


def _phi_expected5(prob, wit, params, S: LocalGroup, first: int, last: int, u_left: str, w) -> Triple:
    kk = params.k
    z0 = coordinates(params.language, u_left + prob.x(first) * kk).first
    zl = coordinates(params.language, prob.x(last) * kk + prob.u(last)).last
    return Triple(z0, params.eta(w), zl)


def build_test_semigroup5(prob: IdentityProblem, wit: Optional[Witness5] = None,
                          params: Optional[Params5] = None, power_checks: int = 2) -> tuple[LocalGroup, Report5, Params5]:
    wit = wit or build_witness5(prob)
    params = params or choose_parameters(prob, wit)
    S = LocalGroup(params.gfunction, name="S_pi_rho")
    G = S.group
    asg = {a: NonRegular(a) for a in prob.alphabet}
    phi_pi = evaluate(prob.pi_canon, S, asg)
    phi_rho = evaluate(prob.rho_canon, S, asg)
    exp_pi = _phi_expected5(prob, wit, params, S, 1, prob.m, prob.u_prime(0), wit.w_pi)
    exp_rho = _phi_expected5(prob, wit, params, S, prob.m + 1, prob.n, prob.u_prime(prob.m), wit.w_rho)

    kk = params.k
    kernel, orders = {}, {}
    formula = omega_ok = True
    for x in dict.fromkeys(prob.x(i) for i in range(1, prob.n + 1)):
        g = params.eta.images[vx(x)]
        p = G.element_order(g)
        orders[x] = p
        if not isinstance(S.f_check_word(x * kk), NonRegular):
            formula = False
        first = S.f_check_word(x * (kk + 1))
        cur, size, q = first, None, 1
        while q <= max(power_checks * p, 1) or size is None:
            if cur != Triple(x * kk, G.power(g, q - 1), x * kk):
                formula = False
            cur = S.mul(cur, NonRegular(x))
            q += 1
            if size is None and cur == first:
                size = q - 1
            if q > 4 * p + 4 and size is None:
                break
        kernel[x] = size
        omega = evaluate(OmegaPower(x, 0), S, asg)
        omega_ok = omega_ok and omega == S.f_check_word(x * params.kprime)
    crucial_ok = all(S.f_hat(x * kk + u + y * kk) == params.eta.images[vc(x, u, y)]
                     for x, u, y in dict.fromkeys(prob.triple(i) for i in prob.crucial()))
    rep = Report5(phi_pi, phi_rho, exp_pi, exp_rho, kernel, orders, formula, omega_ok, crucial_ok)
    return S, rep, params


# ---------------------------------------------------------- second construction


@dataclass
class Witness6:
    k: int
    r: int
    rs: list
    w_pi: tuple
    w_rho: tuple
    w_pi_red: tuple
    w_rho_red: tuple
    b: list
    b1: list
    b2: list

    @property
    def differ(self) -> bool:
        return self.w_pi_red != self.w_rho_red


def lam(v: str, k: int) -> tuple:
    """The k-superposition word of ``v``: one variable per length-(k+1) window."""
    return tuple((v[p: p + k + 1], 1) for p in range(len(v) - k))


def build_witness6(prob: IdentityProblem) -> Witness6:
    n, m = prob.n, prob.m
    ells = [len(prob.x(i)) for i in range(1, n + 1)]
    bound = max([len(prob.u_prime(0)), len(prob.u_prime(m))]
                + [len(prob.u(j)) for j in range(1, n + 1)] + [abs(prob.q(j)) for j in range(1, n + 1)])
    r = bound + 2
    prod = 1
    for e in ells:
        prod *= e
    k = r * prod - 1
    rs = [(k + 1) // e for e in ells]
    b = [prob.x(i) * rs[i - 1] for i in range(1, n + 1)]
    b1 = [head(w, k) for w in b]
    b2 = [tail(w, k) for w in b]

    def word(first: int, last: int, u_left: str) -> tuple:
        out = lam(u_left + b1[first - 1], k)
        for i in range(first, last + 1):
            y = lam(prob.x(i) + b1[i - 1], k)
            out += fw_power(y, prob.q(i) - rs[i - 1])
            if i == last:
                out += lam(b[i - 1] + prob.u(i), k)
            else:
                out += lam(b[i - 1] + prob.u(i) + b1[i], k)
        return out

    wp = word(1, m, prob.u_prime(0))
    wr = word(m + 1, n, prob.u_prime(m))
    return Witness6(k, r, rs, wp, wr, reduce(wp), reduce(wr), b, b1, b2)


@dataclass
class Report6:
    phi_pi: object
    phi_rho: object
    expected_pi: object
    expected_rho: object

    @property
    def separated(self) -> bool:
        return self.phi_pi != self.phi_rho

    @property
    def formula_ok(self) -> bool:
        return self.phi_pi == self.expected_pi and self.phi_rho == self.expected_rho


def build_test_semigroup6(prob: IdentityProblem, wit: Optional[Witness6] = None) -> tuple[LocalGroup, Report6, GroupAssignment]:
    wit = wit or build_witness6(prob)
    d = reduce(wit.w_pi_red + fw_inverse(wit.w_rho_red))
    if d:
        eta = separating_hom(d)
    else:
        eta = GroupAssignment(trivial_group(), {})
    k = wit.k
    L = BoundedLanguage(prob.alphabet, k)
    S = LocalGroup(GFunction(L, eta.group, dict(eta.images)), name=f"S_{k}")
    asg = {a: NonRegular(a) for a in prob.alphabet}
    phi_pi = evaluate(prob.pi_canon, S, asg)
    phi_rho = evaluate(prob.rho_canon, S, asg)
    m, n = prob.m, prob.n
    exp_pi = Triple(head(prob.u_prime(0) + wit.b[0], k), eta(wit.w_pi), tail(wit.b[m - 1] + prob.u(m), k))
    exp_rho = Triple(head(prob.u_prime(m) + wit.b[m], k), eta(wit.w_rho), tail(wit.b[n - 1] + prob.u(n), k))
    return S, Report6(phi_pi, phi_rho, exp_pi, exp_rho), eta


# ------------------------------------------------------------------ deciding


@dataclass
class Decision:
    equal: bool
    certificate: dict


def _trace_json(tr: RewriteTrace) -> list:
    return [{"kind": s.kind, "before": to_str(s.before), "after": to_str(s.after)} for s in tr]


def certificate5(prob: IdentityProblem, S: LocalGroup, rep: Report5, params: Params5) -> dict:
    G = params.eta.group
    return {
        "construction": "S(G,L,f)",
        "alphabet": list(prob.alphabet.letters),
        "params": params.to_json(),
        "group": G.describe(),
        "eta": {v: G.to_json(g) for v, g in params.eta.images.items()},
        "language": {"words": params.W_i + params.W_j,
                     "periodic": [[x, params.k] for x in dict.fromkeys(prob.x(i) for i in range(1, prob.n + 1))]},
        "f": [{"word": w, "g": G.to_json(g)} for w, g in params.gfunction.values.items()],
        "phi_pi": S.to_json(rep.phi_pi),
        "phi_rho": S.to_json(rep.phi_rho),
    }


def certificate6(prob: IdentityProblem, S: LocalGroup, rep: Report6, wit: Witness6, eta: GroupAssignment) -> dict:
    G = eta.group
    return {
        "construction": "S_k(G,f)",
        "alphabet": list(prob.alphabet.letters),
        "params": {"k": wit.k, "r": wit.r},
        "group": G.describe(),
        "w_pi": fw_str(wit.w_pi_red),
        "w_rho": fw_str(wit.w_rho_red),
        "f": [{"word": w, "g": G.to_json(g)} for w, g in eta.images.items()],
        "phi_pi": S.to_json(rep.phi_pi),
        "phi_rho": S.to_json(rep.phi_rho),
    }


def decide(pi, rho, variety: str = "lg", alt: bool = False, alphabet: Optional[Alphabet] = None) -> Decision:
    """Whether ``pi = rho`` holds in every finite semigroup, equivalently every finite local group."""
    if variety.lower() not in ("lg", "s"):
        raise ValueError("variety must be 'lg' or 's'")
    pi, rho = _term(pi, alphabet), _term(rho, alphabet)
    if rank(pi) >= 2 or rank(rho) >= 2:
        raise RankError(RANK2_MESSAGE)
    if rank(pi) == 0 or rank(rho) == 0:
        a, b = as_word(pi), as_word(rho)
        equal = a is not None and a == b
        cert = {"equal": equal, "variety": variety.lower(), "canonical_pi": to_str(pi), "canonical_rho": to_str(rho),
                "reason": "a finite word equals only itself over local groups"}
        return Decision(equal, cert)
    prob = make_problem(pi, rho, alphabet)
    equal = prob.pi_canon == prob.rho_canon
    cert = {"equal": equal, "variety": variety.lower(),
            "canonical_pi": to_str(prob.pi_canon), "canonical_rho": to_str(prob.rho_canon)}
    if equal:
        cert["trace_pi"] = _trace_json(prob.pi_trace)
        cert["trace_rho"] = _trace_json(prob.rho_trace)
        return Decision(True, cert)
    S, rep, params = build_test_semigroup5(prob, power_checks=0)
    if not rep.separated:
        raise InternalConsistencyError("distinct canonical forms were not separated by the test semigroup")
    cert.update(certificate5(prob, S, rep, params))
    if alt:
        S6, rep6, eta6 = build_test_semigroup6(prob)
        if not rep6.separated:
            raise InternalConsistencyError("the windowed construction did not separate distinct canonical forms")
        cert["alternative"] = certificate6(prob, S6, rep6, build_witness6(prob), eta6)
    return Decision(False, cert)


def replay_certificate(cert: dict) -> bool:
    """Rebuild the certified test semigroup and re-check that it separates the two terms."""
    if cert.get("equal"):
        for key in ("trace_pi", "trace_rho"):
            steps = cert.get(key, [])
            for a, b in zip(steps, steps[1:]):
                if a["after"] != b["before"]:
                    return False
        return True
    if "construction" not in cert:
        return cert.get("canonical_pi") != cert.get("canonical_rho")
    A = Alphabet(tuple(cert["alphabet"]))
    G = group_from_json(cert["group"])
    values = {d["word"]: G.from_json(d["g"]) for d in cert["f"]}
    if cert["construction"] == "S_k(G,f)":
        L = BoundedLanguage(A, cert["params"]["k"])
    else:
        lang = cert["language"]
        L = language_from_generators(A, lang["words"], [(x, k) for x, k in lang["periodic"]])
    S = LocalGroup(GFunction(L, G, values))
    asg = {a: NonRegular(a) for a in A}
    vp = evaluate(parse(cert["canonical_pi"], A), S, asg)
    vr = evaluate(parse(cert["canonical_rho"], A), S, asg)
    ok = S.to_json(vp) == cert["phi_pi"] and S.to_json(vr) == cert["phi_rho"] and vp != vr
    if ok and "alternative" in cert:
        alt = dict(cert["alternative"])
        alt.update(canonical_pi=cert["canonical_pi"], canonical_rho=cert["canonical_rho"], equal=False)
        ok = replay_certificate(alt)
    return ok
