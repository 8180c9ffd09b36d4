import random

import pytest
from hypothesis import HealthCheck, settings

from kappalg.langdecomp import FactorialLanguage, make_factorial
from kappalg.words import Alphabet

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

AB = Alphabet(("a", "b"))


@pytest.fixture
def L1() -> FactorialLanguage:
    return FactorialLanguage(AB, ["a", "b", "aa", "ab", "bb", "aaa", "aab"])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261016)


def all_words(letters: str, max_len: int):
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + a for w in frontier for a in letters]
        out += frontier
    return out[1:]


def languages():
    return [
        FactorialLanguage(AB, ["a", "b", "aa", "ab", "bb", "aaa", "aab"]),
        FactorialLanguage(AB, [w for w in all_words("ab", 2)]),
        make_factorial(AB, ["aab", "bab"]),
    ]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
