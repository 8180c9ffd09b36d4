import random

import pytest
from hypothesis import given, strategies as st

from kappalg.corpus import random_rank1_term
from kappalg.groups import cyclic
from kappalg.kappa import (Concat, KappaSyntaxError, Letter, OmegaPower, concat, evaluate, parse, power, rank,
                           to_str, word)
from kappalg.localgroups import NonRegular, Triple, example_S1
from kappalg.semigroups import GroupSemigroup, TransformationMonoid
from kappalg.words import Alphabet

import oracles


def test_parse_examples():
    t = parse("(bababa)^w b^(w-3) b (bb)^(w+1)")
    assert t == concat(OmegaPower("bababa", 0), OmegaPower("b", -3), "b", OmegaPower("bb", 1))
    assert parse("a") == Letter("a")
    assert parse("(ab)^(w-1)") == OmegaPower("ab", -1)
    assert parse("a^3b") == word("aaab")


@pytest.mark.parametrize("text", ["(ab", "a^", "a^(w+)", "a^0", "()", "a)", "a^(w*2)", ""])
def test_parse_errors(text):
    with pytest.raises(KappaSyntaxError) as exc:
        parse(text)
    assert exc.value.pos >= 0


def test_parse_respects_alphabet():
    with pytest.raises(KappaSyntaxError):
        parse("abc", Alphabet(("a", "b")))


def test_rank():
    assert rank(parse("ab")) == 0
    assert rank(parse("a^(w-1)")) == 1
    assert rank(parse("(a^w b a^w)^w")) == 2


def test_evaluate_examples():
    C2 = GroupSemigroup(cyclic(2))
    assert evaluate(parse("a^w"), C2, {"a": 1}) == 0
    assert evaluate(parse("a^(w-1)"), C2, {"a": 1}) == 1
    S1, _ = example_S1()
    assert evaluate(parse("a^w"), S1, {"a": NonRegular("a")}) == Triple("a", 1, "a")


def test_evaluate_needs_every_letter():
    with pytest.raises(ValueError):
        evaluate(parse("ab"), GroupSemigroup(cyclic(2)), {"a": 1})


def naive_eval(t, S, asg):
    if isinstance(t, str):
        t = word(t)
    if isinstance(t, Letter):
        return asg[t.a]
    if isinstance(t, Concat):
        vals = [naive_eval(x, S, asg) for x in t.items]
        acc = vals[0]
        for v in vals[1:]:
            acc = S.mul(acc, v)
        return acc
    return oracles.power_by_enumeration(S.mul, naive_eval(t.base, S, asg), t.q)


@given(st.integers(0, 10**6))
def test_printer_round_trip(seed):
    t = random_rank1_term(random.Random(seed))
    assert parse(to_str(t)) == t


@given(st.integers(0, 10**6))
def test_evaluation_matches_naive(seed):
    rng = random.Random(seed)
    T = TransformationMonoid(3)
    t = random_rank1_term(rng)
    if rng.random() < 0.3:
        t = power(concat(t, "a"), rng.randint(-2, 2))
    asg = {"a": rng.choice(T.elements()), "b": rng.choice(T.elements())}
    assert evaluate(t, T, asg) == naive_eval(t, T, asg)
