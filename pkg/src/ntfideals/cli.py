"""Command-line front-end.

Exit codes: 0 pass, 1 mismatch or violated property, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .decomposition import associated_primes, irreducible_decomposition, minimal_primes
from .hypergraph import (
    Hypergraph,
    almost_bipartite_decomposition,
    classify_graph,
    cover_ideal,
    edge_ideal,
    minimal_vertex_covers,
    special_odd_cycles,
    verify_gluing,
    whisker,
)
from .integrality import is_normal_up_to
from .monomial import InputError
from .parsing import format_ideal, parse_hypergraph, parse_ideal
from .properties import (
    DEFAULT_K,
    ass_of_powers,
    is_nearly_ntf_up_to,
    is_ntf_up_to,
    localization_criterion_check,
    persistence_checks,
)
from .replay import replay, replay_names
from .tspread import (
    BorelSpec,
    a_intervals,
    analytic_spread,
    borel_generators,
    classify_degree2,
    classify_degree3,
    classify_ntf,
    generator_table,
    linear_relation_graph,
    render_table,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return k


def _primes_text(primes) -> str:
    return ", ".join(str(p) for p in primes) if primes else "(none)"


# Each handler returns (exit status, json payload, text lines).

def _cmd_ideal(args):
    ideal = parse_ideal(args.ideal)
    payload = {"ideal": format_ideal(ideal), "json": ideal.to_json(), "generators": len(ideal),
               "squarefree": ideal.is_squarefree(), "support": list(ideal.support())}
    return 0, payload, [format_ideal(ideal), f"{len(ideal)} minimal generators"]


def _cmd_decompose(args):
    ideal = parse_ideal(args.ideal)
    comps = irreducible_decomposition(ideal)
    payload = {"ideal": format_ideal(ideal), "components": [c.to_json() for c in comps]}
    return 0, payload, [format_ideal(ideal)] + [" & ".join(str(c) for c in comps)]


def _cmd_ass(args):
    ideal = parse_ideal(args.ideal)
    if args.powers:
        profile = ass_of_powers(ideal, args.powers)
        lines = [f"Ass(R/I^{k}) = {_primes_text(v)}" for k, v in sorted(profile.by_power.items())]
        return 0, {"ideal": format_ideal(ideal), "bound": args.powers, "ass": profile.to_json()}, lines
    ass = associated_primes(ideal)
    mins = minimal_primes(ideal)
    payload = {"ideal": format_ideal(ideal), "ass": [list(p.vars) for p in ass],
               "min": [list(p.vars) for p in mins]}
    return 0, payload, [f"Ass(R/I) = {_primes_text(ass)}", f"Min(I) = {_primes_text(mins)}"]


def _cmd_check(args):
    ideal = parse_ideal(args.ideal)
    k = args.max_power
    head = {"ideal": format_ideal(ideal), "property": args.property, "bound": k}
    if args.property == "ntf":
        rep = is_ntf_up_to(ideal, k)
        ok = rep.verdict.kind == "ntf"
        return (0 if ok else 1), {**head, **rep.to_json()}, [rep.describe()]
    if args.property == "nearly-ntf":
        rep = is_nearly_ntf_up_to(ideal, k)
        ok = rep.verdict.kind in ("ntf", "nearly_ntf")
        return (0 if ok else 1), {**head, **rep.to_json()}, [rep.describe()]
    if args.property == "persistence":
        rep = persistence_checks(ideal, k)
        lines = [f"{name} up to K={k}: {'holds' if rep.violations[name] is None else 'fails at k=' + str(rep.violations[name])}"
                 for name in ("persistence", "strong", "symbolic_strong")]
        ok = rep.persistence and rep.strong and rep.symbolic_strong
        return (0 if ok else 1), {**head, **rep.to_json()}, lines
    if args.property == "normal":
        rep = is_normal_up_to(ideal, k)
        line = (f"normal up to K={k}" if rep.normal
                else f"I^{rep.first_failure} not integrally closed: {rep.witness} is integral over it")
        return (0 if rep.normal else 1), {**head, **rep.to_json()}, [line]
    rep = localization_criterion_check(ideal, k)
    return (0 if rep.consistent else 1), {**head, **rep.to_json()}, [rep.describe()]


def _cmd_borel(args):
    try:
        spec = BorelSpec.parse(args.t, args.u)
    except InputError as exc:
        raise UsageError(str(exc)) from None
    head = {"spec": str(spec), "t": spec.t, "u": list(spec.indices)}
    what = args.what
    if what == "gens":
        ideal = borel_generators(spec)
        return 0, {**head, "ideal": format_ideal(ideal), "generators": len(ideal)}, [format_ideal(ideal)]
    if what == "table":
        table = render_table(generator_table(borel_generators(spec)))
        return 0, {**head, "table": table.split("\n")}, table.split("\n")
    if what == "intervals":
        iv = a_intervals(spec)
        lines = [f"A_{k}=[{lo},{hi}]" for k, (lo, hi) in enumerate(iv.intervals, start=1)]
        lines.append("unsupported: " + (", ".join(f"x{i}" for i in iv.unsupported) or "(none)"))
        return 0, {**head, **iv.to_json()}, lines
    if what == "gamma":
        g = linear_relation_graph(borel_generators(spec))
        lines = [f"components: {g.components()}"] + [
            f"{{{i},{j}}}: x{i}*({a}) = x{j}*({b})" for (i, j), (a, b) in sorted(g.witnesses.items())
        ]
        return 0, {**head, **g.to_json()}, lines
    if what == "spread":
        ell = analytic_spread(spec)
        return 0, {**head, "analytic_spread": ell}, [f"analytic spread {ell}"]
    verdicts = {"ntf": classify_ntf(spec).to_json()}
    if spec.d == 3:
        verdicts["degree3"] = classify_degree3(spec).to_json()
    if spec.d == 2:
        verdicts["degree2"] = classify_degree2(spec).to_json()
    lines = [f"{k}: {v['verdict']} ({v['reason']})" for k, v in verdicts.items()]
    return 0, {**head, "classification": verdicts}, lines


def _cmd_hypergraph(args):
    h = parse_hypergraph(args.graph)
    head = {"hypergraph": h.to_json(), "action": args.action}
    act = args.action
    if act in ("edge-ideal", "cover-ideal"):
        ideal = edge_ideal(h) if act == "edge-ideal" else cover_ideal(h)
        return 0, {**head, "ideal": format_ideal(ideal)}, [format_ideal(ideal)]
    if act == "covers":
        covers = minimal_vertex_covers(h)
        return 0, {**head, "covers": [list(c) for c in covers]}, [" ".join("{" + ",".join(map(str, c)) + "}" for c in covers)]
    if act == "special-cycles":
        top = args.max_len or len(h.vertices)
        cycles = special_odd_cycles(h, max(3, top))
        return 0, {**head, "max_len": max(3, top), "cycles": [c.sequence() for c in cycles]}, [str(c) for c in cycles] or ["(none)"]
    if act == "classify":
        cls = classify_graph(h)
        line = cls.verdict + (f" with cycle {list(cls.cycle)}" if cls.cycle else "")
        return 0, {**head, **cls.to_json()}, [line]
    if act == "decompose-almost-bipartite":
        dec = almost_bipartite_decomposition(h)
        js = dec.to_json()
        lines = [f"cycle {js['cycle']}"] + [f"A_{i} = {v}" for i, v in js["A"].items()] + [
            f"B_{{{e}}} = {v}" for e, v in js["B"].items()]
        return 0, {**head, **js}, lines
    if act == "whisker":
        if args.vertex is None:
            raise UsageError("whisker needs --vertex")
        w = whisker(h, args.vertex)
        return 0, {**head, "result": w.to_json()}, [json.dumps(w.to_json())]
    if args.other is None:
        raise UsageError("glue-check needs --other")
    rep = verify_gluing(h, parse_hypergraph(args.other), args.max_power)
    lines = [f"s={s}: {'equal' if ok else 'DIFFERENT'}" for s, ok in sorted(rep.per_power.items())]
    return (0 if rep.holds else 1), {**head, **rep.to_json()}, lines


def _cmd_replay(args):
    names = replay_names() if args.name == "all" else [args.name]
    if args.name != "all" and args.name not in replay_names():
        raise UsageError(f"unknown replay {args.name!r}; known: {', '.join(replay_names())}")
    results = [replay(n) for n in names]
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.description}")
        for c in r.checks:
            if not c.ok:
                lines.append(f"  {c.key}: expected {json.dumps(c.expected)} got {json.dumps(c.actual)}")
    ok = all(r.ok for r in results)
    return (0 if ok else 1), {"replays": [r.to_json() for r in results], "status": "PASS" if ok else "FAIL"}, lines


def _add_common(p: argparse.ArgumentParser, defaults: bool) -> None:
    def d(value):
        return value if defaults else argparse.SUPPRESS

    p.add_argument("--format", choices=("text", "json"), default=d("text"))
    p.add_argument("--max-power", type=_positive, default=d(DEFAULT_K), metavar="K",
                   help=f"power bound for bounded checks (default {DEFAULT_K})")
    p.add_argument("--timing", action="store_true", default=d(False),
                   help="report elapsed time (output is then not reproducible)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ntfideals", description="Associated primes of powers of monomial ideals.")
    _add_common(p, defaults=True)
    # the same options after the verb; SUPPRESS keeps the top-level value unless given
    common = _Parser(add_help=False)
    _add_common(common, defaults=False)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    add = sub.add_parser

    def sub_parser(name, **kw):
        return add(name, parents=[common], **kw)

    sub.add_parser = sub_parser

    s = sub.add_parser("ideal", help="parse and print an ideal in canonical form")
    s.add_argument("ideal", help="text 'vars=3; x1*x2, x3^2', JSON, or a file path")
    s = sub.add_parser("decompose", help="irredundant irreducible decomposition")
    s.add_argument("ideal")
    s = sub.add_parser("ass", help="associated and minimal primes")
    s.add_argument("ideal")
    s.add_argument("--powers", type=_positive, metavar="K", help="Ass of I^1..I^K instead")
    s = sub.add_parser("check", help="bounded property checks")
    s.add_argument("property", choices=("ntf", "nearly-ntf", "persistence", "normal", "localization"))
    s.add_argument("ideal")
    s = sub.add_parser("borel", help="t-spread principal Borel ideals")
    s.add_argument("--t", type=_positive, required=True)
    s.add_argument("--u", required=True, help="indices of u, e.g. x4,x7")
    s.add_argument("what", nargs="?", default="gens",
                   choices=("gens", "table", "intervals", "gamma", "spread", "classify"))
    s = sub.add_parser("hypergraph", help="edge and cover ideals, cycles, gluings")
    s.add_argument("action", choices=("cover-ideal", "edge-ideal", "covers", "special-cycles", "classify",
                                      "decompose-almost-bipartite", "whisker", "glue-check"))
    s.add_argument("graph", help='JSON {"vertices":5,"edges":[[1,2],...]}, a file path, or C<k>')
    s.add_argument("--vertex", type=_positive)
    s.add_argument("--other", help="second graph for glue-check")
    s.add_argument("--max-len", type=_positive, help="longest cycle for special-cycles (default: all)")
    s = sub.add_parser("replay", help="rerun a stored example")
    s.add_argument("name", help="example name or 'all'")
    return p


HANDLERS = {
    "ideal": _cmd_ideal, "decompose": _cmd_decompose, "ass": _cmd_ass, "check": _cmd_check,
    "borel": _cmd_borel, "hypergraph": _cmd_hypergraph, "replay": _cmd_replay,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        start = time.perf_counter()
        status, payload, lines = HANDLERS[args.verb](args)
    except (UsageError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        elapsed = round(time.perf_counter() - start, 3)
        payload = {**payload, "seconds": elapsed}
        lines = lines + [f"time: {elapsed} s"]
    if args.format == "json":
        print(json.dumps({"command": args.verb, "status": status, **payload}, sort_keys=True))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
