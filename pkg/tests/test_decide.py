import json

import pytest

from kappalg.corpus import canonical_corpus
from kappalg.decide import (SEARCH_CAP, build_test_semigroup5, build_test_semigroup6, build_witness5, build_witness6,
                            choose_parameters, decide, lam, make_problem, max_power_suffix, replay_certificate, vx)
from kappalg.groups import element_order, fw, reduce
from kappalg.kappa import RankError, parse


def test_witness_for_powers_of_a():
    prob = make_problem("a^(w+1)", "a^(w+2)")
    wit = build_witness5(prob)
    assert wit.qq == 3
    assert wit.w_pi == fw(*[vx("a")] * 4) and wit.w_rho == fw(*[vx("a")] * 5)


def test_parameters_for_powers_of_a():
    prob = make_problem("a^(w+1)", "a^(w+2)")
    wit = build_witness5(prob)
    p = choose_parameters(prob, wit)
    assert (p.i, p.j, p.k, p.kprime) == (3, 4, 8, 12)
    assert set(p.language) == {"a" * n for n in range(1, 9)}
    assert p.language.boundary == {"a" * 9}
    assert element_order(p.eta.group, p.eta.images[vx("a")]) == 6


def test_separation_for_powers_of_a():
    prob = make_problem("a^(w+1)", "a^(w+2)")
    S, rep, params = build_test_semigroup5(prob)
    g = params.eta.images[vx("a")]
    G = S.group
    assert rep.phi_pi.u == rep.phi_pi.v == "a" * 8
    assert rep.phi_pi.g == G.power(g, 4) and rep.phi_rho.g == G.power(g, 5)
    assert rep.separated and rep.checks_ok and rep.formula_ok
    assert rep.kernel_sizes == rep.orders == {"a": 6}


def test_trivial_identity():
    prob = make_problem("b(ab)^w b^(w-1)", "b(ab)^w b^(w-1)")
    wit = build_witness5(prob)
    assert wit.trivial and wit.w_pi == wit.w_rho
    S, rep, _ = build_test_semigroup5(prob)
    assert not rep.separated and rep.checks_ok


def test_t_for_crucial_portion():
    assert max_power_suffix("b", "ab" * 4) == 1


def test_witness6_for_powers_of_a():
    prob = make_problem("a^(w+1)", "a^(w+2)")
    w6 = build_witness6(prob)
    assert (w6.r, w6.k) == (4, 3)
    assert lam("aaa", 3) == () and lam("aaaa", 3) == fw("aaaa")
    assert reduce(w6.w_pi) == w6.w_pi_red
    assert len(w6.w_pi_red) == 2 and len(w6.w_rho_red) == 1 and w6.differ
    S, rep, _ = build_test_semigroup6(prob)
    assert rep.separated and rep.formula_ok


def test_decide_examples(tmp_path):
    assert decide("(bababa)^w b^(w-3) b (bb)^(w+1)", "b(ab)^w b^(w-1)").equal
    assert decide("ab", "ab").equal
    assert not decide("ab", "a^w").equal
    res = decide("a^(w+1)", "a^(w+2)", alt=True)
    assert not res.equal
    cert = json.loads(json.dumps(res.certificate))
    assert replay_certificate(cert)
    assert "alternative" in cert


def test_tampered_certificate_fails():
    cert = json.loads(json.dumps(decide("a^(w+1)", "a^(w+2)").certificate))
    cert["phi_rho"] = cert["phi_pi"]
    assert not replay_certificate(cert)


def test_rank_two_rejected_with_reason():
    with pytest.raises(RankError, match="x\\^w y x\\^w"):
        decide("(a^w b a^w)^w", "a^w")


def test_variety_argument():
    assert decide("a^w", "a^w", variety="s").equal
    with pytest.raises(ValueError):
        decide("a", "a", variety="g")


@pytest.mark.parametrize("i", range(6))
def test_corpus_pairs_separate(i):
    terms = canonical_corpus(12, seed=1)
    prob = make_problem(terms[i], terms[i + 6])
    S, rep, params = build_test_semigroup5(prob, power_checks=1)
    assert rep.separated and rep.checks_ok and rep.formula_ok
    assert params.i < params.j < params.k and params.j < SEARCH_CAP
