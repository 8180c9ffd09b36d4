"""JSON formats for languages, groups, f-functions and semigroups."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .groups import FiniteGroup, cyclic, group_from_json, symmetric_group
from .langdecomp import FactorialLanguage
from .localgroups import GFunction, LocalGroup, example_S1
from .semigroups import (Cayley, GroupSemigroup, Semigroup, TableSemigroup, TransformationMonoid,
                         left_zero, null_semigroup, semilattice2)
from .words import Alphabet, factors

PathLike = Union[str, Path]


def read_json(path: PathLike):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def language_from_json(data: dict) -> tuple[FactorialLanguage, list[str]]:
    """The factorial closure of the listed words, and the words the closure had to add."""
    alphabet = Alphabet(tuple(data["alphabet"]))
    given = set(data.get("words", []))
    closure = set(alphabet.letters)
    for w in given:
        if not w:
            raise ValueError("languages hold non-empty words only")
        closure |= factors(alphabet.check(w))
    L = FactorialLanguage(alphabet, closure)
    added = sorted(closure - given, key=lambda w: (len(w), alphabet.key(w)))
    return L, added


def language_to_json(L: FactorialLanguage) -> dict:
    return {"alphabet": list(L.alphabet.letters), "words": list(L)}


def load_language(path: PathLike) -> tuple[FactorialLanguage, list[str]]:
    return language_from_json(read_json(path))


def load_group(path: PathLike) -> FiniteGroup:
    return group_from_json(read_json(path))


def gfunction_from_json(data: list, L: FactorialLanguage, G: FiniteGroup) -> GFunction:
    values = {}
    for entry in data:
        w = entry["word"]
        if w in values:
            raise ValueError(f"f is given twice on {w!r}")
        values[w] = G.from_json(entry["g"])
    return GFunction(L, G, values)


def load_local_group(lang: PathLike, group: PathLike, f: PathLike = None) -> tuple[LocalGroup, list[str]]:
    L, added = load_language(lang)
    G = load_group(group)
    gf = gfunction_from_json(read_json(f) if f else [], L, G)
    return LocalGroup(gf), added


BUILTINS = {
    "S1": lambda: example_S1()[0],
    "C2": lambda: GroupSemigroup(cyclic(2), "C2"),
    "C6": lambda: GroupSemigroup(cyclic(6), "C6"),
    "Sym3": lambda: GroupSemigroup(symmetric_group(3), "Sym3"),
    "T3": lambda: TransformationMonoid(3),
    "semilattice": semilattice2,
    "null3": lambda: null_semigroup(3),
    "leftzero2": lambda: left_zero(2),
}


def semigroup_from_spec(spec: Union[str, dict], base: Path = Path(".")) -> Semigroup:
    """A built-in name, a JSON file, or an already-loaded description.

    Descriptions are ``{"type": "table", "elements": [...], "table": [[...]]}``,
    ``{"type": "group", "group": {...}}``, ``{"type": "transformation", "n": 3}``
    or ``{"type": "local", "language": {...}, "group": {...}, "f": [...]}``.
    """
    if isinstance(spec, str):
        if spec in BUILTINS:
            return BUILTINS[spec]()
        p = Path(spec)
        if not p.exists():
            raise ValueError(f"unknown semigroup {spec!r}: not a built-in name or a file")
        return semigroup_from_spec(read_json(p), p.parent)
    kind = spec.get("type", "table")
    if kind == "table":
        return TableSemigroup.from_json_spec(spec)
    if kind == "group":
        return GroupSemigroup(group_from_json(spec["group"]))
    if kind == "transformation":
        return TransformationMonoid(int(spec["n"]))
    if kind == "local":
        L, _ = language_from_json(spec["language"])
        G = group_from_json(spec["group"])
        return LocalGroup(gfunction_from_json(spec.get("f", []), L, G))
    raise ValueError(f"unknown semigroup type {kind!r}")


def export_semigroup(S: Semigroup, table: bool = True, limit: int = 10_000) -> dict:
    """Element list and, for small enough semigroups, the Cayley table by element index."""
    n = S.size()
    if n > limit:
        raise ValueError(f"semigroup has {n} elements; export is limited to {limit}")
    C = Cayley(S) if table else None
    elems = C.elems if C else list(S.elements())
    out = {"size": len(elems), "elements": [S.to_json(x) for x in elems]}
    if C:
        out["table"] = C.table
    return out
