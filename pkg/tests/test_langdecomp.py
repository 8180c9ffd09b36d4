import random

import pytest
from hypothesis import given, strategies as st

from kappalg.langdecomp import (BoundedLanguage, CoordinateSequence, FactorialLanguage, MalformedCoordinates,
                                boundary, coordinates, coordinates_recursive, make_factorial, reconstruct)
from kappalg.words import Alphabet

import oracles
from conftest import AB, all_words, languages

EXAMPLE_1 = ("aaa", "aaaa", "aaa", "aaaa", "aaa", "aaab", "aab", "ba", "aa")
EXAMPLE_2 = ("ab", "abb", "bb", "bbb", "bb", "ba", "ab", "ba", "aaa", "aaaa", "aaa", "aaab", "aab")


def test_boundary_examples(L1):
    assert boundary(L1) == {"ba", "abb", "bbb", "aaaa", "aaab"}
    L2 = FactorialLanguage(AB, all_words("ab", 2))
    assert boundary(L2) == set(all_words("ab", 3)) - set(all_words("ab", 2))
    assert boundary(FactorialLanguage(AB, ["a", "b", "ab"])) == {"aa", "ba", "bb"}


def test_coordinates_examples(L1):
    assert coordinates(L1, "aaaaabaa").as_tuple() == EXAMPLE_1
    assert coordinates(L1, "abbbabaaaab").as_tuple() == EXAMPLE_2
    assert coordinates(L1, "aab").as_tuple() == ("aab",)


def test_reconstruct_examples(L1):
    assert reconstruct(L1, CoordinateSequence.from_tuple(EXAMPLE_1)) == "aaaaabaa"
    assert reconstruct(L1, CoordinateSequence.from_tuple(("bb",))) == "bb"


def test_reconstruct_rejects_malformed(L1):
    with pytest.raises(MalformedCoordinates):
        reconstruct(L1, CoordinateSequence.from_tuple(("aaa", "aa", "aaa")))
    with pytest.raises((MalformedCoordinates, ValueError)):
        CoordinateSequence.from_tuple(("aaa", "aaaa"))


def test_make_factorial_examples():
    assert set(make_factorial(AB, ["aab"])) == {"a", "b", "aa", "ab", "aab"}
    assert set(make_factorial(Alphabet(("a",)), ["a"])) == {"a"}
    assert set(make_factorial(AB, ["ba"])) == {"a", "b", "ba"}


def test_language_requires_content_and_closure():
    with pytest.raises(ValueError):
        FactorialLanguage(AB, ["a"])
    with pytest.raises(ValueError):
        FactorialLanguage(AB, ["a", "b", "aab"])


@pytest.mark.parametrize("L", languages(), ids=["L1", "A<=2", "closure"])
def test_boundary_matches_brute_force(L):
    assert boundary(L) == oracles.boundary(L, "ab", L.maxlen)


@pytest.mark.parametrize("L", languages(), ids=["L1", "A<=2", "closure"])
def test_coordinates_match_definition(L):
    bnd = oracles.boundary(L, "ab", L.maxlen)
    for w in all_words("ab", 8):
        sc = coordinates(L, w)
        assert sc.as_tuple() == oracles.coordinates(L, bnd, w)
        assert reconstruct(L, sc) == w


@given(st.text(alphabet="ab", min_size=1, max_size=14), st.integers(0, 2**32))
def test_recursive_decomposition_agrees(w, seed):
    L = languages()[0]
    assert coordinates_recursive(L, w, random.Random(seed)) == coordinates(L, w)


@given(st.text(alphabet="ab", min_size=1, max_size=14))
def test_coordinate_shape(w):
    L = languages()[2]
    sc = coordinates(L, w)
    seq = sc.as_tuple()
    assert len(seq) == 2 * sc.m + 1
    assert all(x in L for x in seq[0::2]) and all(L.is_boundary(x) for x in seq[1::2])
    assert sc.first == seq[0] and sc.last == seq[-1]


@given(st.integers(1, 4), st.text(alphabet="ab", min_size=1, max_size=12))
def test_bounded_language_matches_explicit(k, w):
    B = BoundedLanguage(AB, k)
    E = FactorialLanguage(AB, all_words("ab", k))
    assert coordinates(B, w) == coordinates(E, w)
    assert B.boundary == E.boundary
