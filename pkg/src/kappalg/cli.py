"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .canonical import canonicalize_rank1, is_canonical_rank1
from .decide import decide, make_problem, build_test_semigroup5
from .io import export_semigroup, load_language, load_local_group, semigroup_from_spec
from .kappa import KappaSyntaxError, RankError, evaluate, parse, rank, to_str
from .langdecomp import coordinates
from .localgroups import emit_presentation, structure_report, verify_relations
from .semigroups import is_local_group
from .words import Alphabet


class CliError(Exception):
    pass


def _alphabet(args) -> Optional[Alphabet]:
    return Alphabet(tuple(args.alphabet)) if getattr(args, "alphabet", None) else None


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_canon(args) -> int:
    A = _alphabet(args)
    t = parse(args.term, A)
    c, trace = canonicalize_rank1(t, A)
    steps = [{"kind": s.kind, "before": to_str(s.before), "after": to_str(s.after)} for s in trace]
    lines = [to_str(c)]
    if args.trace:
        lines += [f"  {s['kind']}: {s['before']}  ->  {s['after']}" for s in steps]
    _emit(args, {"input": to_str(t), "canonical": to_str(c), "rank": rank(t),
                 "was_canonical": is_canonical_rank1(t, A), "trace": steps}, "\n".join(lines))
    return 0


def cmd_decide(args) -> int:
    res = decide(args.pi, args.rho, args.variety, alt=args.alt, alphabet=_alphabet(args))
    cert = res.certificate
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            json.dump(cert, fh, indent=2, ensure_ascii=False)
    text = [f"equal: {'true' if res.equal else 'false'}",
            f"canonical pi:  {cert['canonical_pi']}", f"canonical rho: {cert['canonical_rho']}"]
    if not res.equal and "params" in cert:
        p = cert["params"]
        text.append(f"separated by S(G,L,f) with i={p['i']} j={p['j']} k={p['k']} k'={p['kprime']}")
    if args.certificate:
        text.append(f"certificate written to {args.certificate}")
    _emit(args, {"equal": res.equal, "variety": args.variety, "certificate": cert if args.json_cert else None,
                 "canonical_pi": cert["canonical_pi"], "canonical_rho": cert["canonical_rho"]}, "\n".join(text))
    return 0


def _parse_value(S, text: str):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError:
        raw = text
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        raw = text
    return S.from_json(raw)


def cmd_eval(args) -> int:
    S = semigroup_from_spec(args.sgp)
    asg = {}
    for item in args.assign or []:
        if "=" not in item:
            raise CliError(f"assignment {item!r} is not of the form letter=element")
        a, v = item.split("=", 1)
        asg[a.strip()] = _parse_value(S, v.strip())
    t = parse(args.term)
    val = evaluate(t, S, asg)
    shown = S.element_str(val) if hasattr(S, "element_str") else json.dumps(S.to_json(val))
    _emit(args, {"term": to_str(t), "value": S.to_json(val)}, shown)
    return 0


def cmd_sc(args) -> int:
    L, added = load_language(args.lang)
    sc = coordinates(L, L.alphabet.check(args.word))
    seq = list(sc.as_tuple())
    text = "(" + ", ".join(seq) + ")"
    if added and not args.json:
        print(f"note: factorial closure added {len(added)} word(s): {', '.join(added)}", file=sys.stderr)
    _emit(args, {"word": args.word, "coordinates": seq, "m": sc.m, "added_by_closure": added}, text)
    return 0


def cmd_build(args) -> int:
    S, added = load_local_group(args.lang, args.group, args.f)
    rep = structure_report(S) if args.check else None
    payload = {"size": S.size(), "language_size": len(S.language), "boundary": sorted(S.language.boundary),
               "group_order": S.group.order(), "added_by_closure": added}
    if rep:
        payload["structure"] = vars(rep)
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            json.dump(export_semigroup(S, table=args.table), fh)
    text = [f"|S| = {payload['size']}  (|L| = {payload['language_size']}, |G| = {payload['group_order']})",
            f"boundary: {', '.join(payload['boundary'])}"]
    if rep:
        text += [f"{k}: {v}" for k, v in vars(rep).items()]
    _emit(args, payload, "\n".join(text))
    return 0


def cmd_presentation(args) -> int:
    S, _ = load_local_group(args.lang, args.group, args.f)
    P = emit_presentation(S)
    data = P.to_json()
    data["verified"] = verify_relations(S, P)
    text = [f"generators: {', '.join(data['generators'])}"] + [f"  {l} = {r}" for l, r in data["relations"]]
    text.append(f"relations hold in S: {data['verified']}")
    _emit(args, data, "\n".join(text))
    return 0


def cmd_check_local(args) -> int:
    S = semigroup_from_spec(args.sgp)
    ok = is_local_group(S)
    _emit(args, {"semigroup": getattr(S, "name", args.sgp), "local_group": ok}, f"local group: {str(ok).lower()}")
    return 0


def cmd_selftest(args) -> int:
    from .corpus import canonical_pairs, random_local_group, random_rank1_term
    from .semigroups import TransformationMonoid

    rng = random.Random(args.seed)
    results = {}
    reports = [structure_report(random_local_group(rng), samples=2000, seed=args.seed) for _ in range(args.count)]
    results["structure"] = all(r.ok() for r in reports)
    T = TransformationMonoid(3)
    E = T.elements()
    sound = True
    for _ in range(args.count * 5):
        _, trace = canonicalize_rank1(random_rank1_term(rng))
        asg = {"a": rng.choice(E), "b": rng.choice(E)}
        sound = sound and all(evaluate(s.before, T, asg) == evaluate(s.after, T, asg) for s in trace)
    results["rewriting"] = sound
    sep = True
    for p, r in canonical_pairs(min(args.count, 24), args.seed)[: args.count]:
        _, rep, _ = build_test_semigroup5(make_problem(p, r), power_checks=1)
        sep = sep and rep.separated and rep.checks_ok
    results["separation"] = sep
    text = "\n".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in results.items())
    _emit(args, {"seed": args.seed, "results": results}, text)
    return 0 if all(results.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kappalg", description="Local groups S(G,L,f) and rank-1 kappa-identities.")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("canon", help="canonical form of a rank-1 kappa-term")
    c.add_argument("term")
    c.add_argument("--alphabet", help="letters in their order, e.g. 'ab'")
    c.add_argument("--trace", action="store_true", help="list the rewrite steps")
    c.set_defaults(fn=cmd_canon)

    d = sub.add_parser("decide", help="decide pi = rho over LG or S")
    d.add_argument("pi")
    d.add_argument("rho")
    d.add_argument("--variety", choices=["lg", "s"], default="lg")
    d.add_argument("--certificate", metavar="PATH", help="write the JSON certificate here")
    d.add_argument("--alt", action="store_true", help="also include the windowed S_k(G,f) separation")
    d.add_argument("--alphabet")
    d.add_argument("--json-cert", action="store_true", help="embed the certificate in --json output")
    d.set_defaults(fn=cmd_decide)

    e = sub.add_parser("eval", help="evaluate a kappa-term in a finite semigroup")
    e.add_argument("term")
    e.add_argument("--sgp", required=True, help="built-in name (S1, C2, C6, Sym3, T3, ...) or JSON file")
    e.add_argument("--assign", action="append", metavar="LETTER=ELEMENT")
    e.set_defaults(fn=cmd_eval)

    s = sub.add_parser("sc", help="coordinate sequence of a word")
    s.add_argument("word")
    s.add_argument("--lang", required=True)
    s.set_defaults(fn=cmd_sc)

    for name, fn, helptext in (("build-sgp", cmd_build, "build S(G,L,f) from JSON files"),
                               ("presentation", cmd_presentation, "emit a presentation of S(G,L,f)")):
        b = sub.add_parser(name, help=helptext)
        b.add_argument("--lang", required=True)
        b.add_argument("--group", required=True)
        b.add_argument("--f", help="f-function file; omitted words map to the identity")
        if name == "build-sgp":
            b.add_argument("--check", action="store_true", help="run the structural checks")
            b.add_argument("--export", metavar="PATH", help="write the element list as JSON")
            b.add_argument("--table", action="store_true", help="include the Cayley table in the export")
        b.set_defaults(fn=fn)

    k = sub.add_parser("check-local-group", help="test whether a finite semigroup is a local group")
    k.add_argument("--sgp", required=True)
    k.set_defaults(fn=cmd_check_local)

    t = sub.add_parser("selftest", help="run seeded property checks")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--count", type=int, default=10)
    t.set_defaults(fn=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except KappaSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
    except RankError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (ValueError, KeyError, OSError, CliError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


def main() -> None:
    sys.exit(run())
