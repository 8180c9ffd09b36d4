import pytest
from hypothesis import given, strategies as st

from kappalg.words import (Alphabet, conjugates, factors, head, is_lyndon, is_primitive, lyndon_conjugate,
                           lyndon_split, max_power_suffix, occurrences, primitive_root, tail, truncate)

import oracles

words = st.text(alphabet="ab", min_size=1, max_size=10)


def test_truncation_examples():
    assert truncate("abab", 2, "head") == "ab"
    assert truncate("a", 3, "tail") == "a"
    assert truncate("aaaa", 3, "head") == "aaa"
    assert head("abba", 3) == "abb" and tail("abba", 3) == "bba"


@pytest.mark.parametrize("w,expected", [("ab", True), ("aa", False), ("aab", True), ("ba", False), ("abb", True)])
def test_lyndon_examples(w, expected):
    assert is_lyndon(w) is expected


@pytest.mark.parametrize("w,root", [("bababa", ("ba", 3)), ("a", ("a", 1)), ("abab", ("ab", 2)), ("aba", ("aba", 1))])
def test_primitive_root(w, root):
    assert primitive_root(w) == root


@pytest.mark.parametrize("w,split", [("ba", ("b", "a")), ("ab", ("", "ab")), ("aba", ("ab", "a"))])
def test_lyndon_split(w, split):
    assert lyndon_split(w) == split


def test_occurrences():
    assert occurrences("aa", "aaa") == [1, 2]
    assert occurrences("ba", "aaaaabaa") == [6]
    assert occurrences("ab", "bbb") == []


def test_alphabet_order_matters():
    ba = Alphabet(("b", "a"))
    assert is_lyndon("ba", ba) and not is_lyndon("ab", ba)
    with pytest.raises(ValueError):
        Alphabet(("a", "b")).check("abc")


@given(words)
def test_lyndon_matches_brute_force(w):
    assert is_lyndon(w) == oracles.is_lyndon(w)
    assert is_primitive(w) == oracles.is_primitive(w)
    assert set(conjugates(w)) == oracles.conjugates(w)


@given(words)
def test_lyndon_split_reassembles_a_conjugate(w):
    r, _ = primitive_root(w)
    s, t = lyndon_split(r)
    assert s + t == r
    assert oracles.is_lyndon(t + s) and t + s == lyndon_conjugate(r)
    assert len(t) > 0


@given(words)
def test_primitive_root_power(w):
    r, n = primitive_root(w)
    assert r * n == w and oracles.is_primitive(r)


@given(st.text(alphabet="ab", min_size=1, max_size=3), words)
def test_max_power_suffix(base, w):
    t = max_power_suffix(base, w)
    assert w.endswith(base * t) and not w.endswith(base * (t + 1))


@given(words)
def test_factors_closed(w):
    F = factors(w)
    assert w in F and all(f[1:] in F | {""} and f[:-1] in F | {""} for f in F)
    assert len(F) == len({w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)})
