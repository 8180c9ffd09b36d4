"""Finite local groups S(G, L, f) and the rank-1 kappa-word problem over LG."""

from .canonical import canonicalize_rank1, is_canonical_rank1
from .decide import decide
from .kappa import evaluate, parse, rank, to_str
from .langdecomp import FactorialLanguage, coordinates, make_factorial, reconstruct
from .localgroups import LocalGroup, build_local_group
from .words import Alphabet

__all__ = [
    "Alphabet", "FactorialLanguage", "LocalGroup", "build_local_group", "canonicalize_rank1", "coordinates",
    "decide", "evaluate", "is_canonical_rank1", "make_factorial", "parse", "rank", "reconstruct", "to_str",
]
