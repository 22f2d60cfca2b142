"""Named reproductions of small examples, diffed against stored expected values."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .decomposition import alexander_dual, associated_primes
from .hypergraph import (
    Hypergraph,
    almost_bipartite_decomposition,
    classify_graph,
    cover_ideal,
    edge_ideal,
    is_d_uniform_d_partite,
    special_odd_cycles,
    whisker,
)
from .monomial import InputError, MonomialIdeal, PrimeSupport, colon, deletion, localization, multiply, power
from .parsing import parse_ideal_text
from .properties import is_nearly_ntf_up_to
from .tspread import (
    BorelSpec,
    a_intervals,
    borel_generators,
    borel_hypergraph,
    classify_degree2,
    classify_degree3,
    classify_ntf,
    generator_table,
    localization_split,
    recognize_borel,
    relabel_shift,
    render_table,
    shift_table,
)

EMBEDDED_PRIME_IDEAL = "vars=3; x2^4, x1*x2^3, x1^3*x2, x1^4*x3"
PENTAGON = "vars=5; x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x1, x5*x1*x2"
PENTAGON_COMPLEMENT = Hypergraph(5, ((3, 5), (2, 5), (2, 4), (1, 4), (1, 3)))

# The 17-vertex almost bipartite graph: a 5-cycle with pendant blocks.
SEVENTEEN_VERTEX_GRAPH = Hypergraph(17, (
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (6, 7), (7, 8), (1, 8),
    (4, 9), (9, 10),
    (1, 11), (11, 13), (13, 14), (12, 14), (5, 12), (11, 12),
    (2, 15), (15, 16), (3, 16), (15, 17), (3, 17),
))


def _primes(ps) -> list:
    return [list(p.vars) for p in ps]


def _compact(ideal: MonomialIdeal) -> list:
    return ["".join(f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a) for e in ideal.exps]


def _embedded_prime() -> dict:
    ideal = parse_ideal_text(EMBEDDED_PRIME_IDEAL)
    near = is_nearly_ntf_up_to(ideal, 3)
    return {
        "ass": {str(k): _primes(v) for k, v in near.profile.by_power.items()},
        "min": _primes(near.min_primes),
        "colon_square_by_ideal_is_ideal": colon(multiply(ideal, ideal), ideal) == ideal,
        "verdict": near.verdict.kind,
        "exceptional_prime": list(near.verdict.prime.vars) if near.verdict.prime else None,
        "threshold": near.verdict.threshold,
    }


def _pentagon() -> dict:
    ideal = parse_ideal_text(PENTAGON)
    return {
        "dual": _compact(alexander_dual(ideal)),
        "edge_ideal": _compact(edge_ideal(PENTAGON_COMPLEMENT)),
        "cover_ideal_is_pentagon": cover_ideal(PENTAGON_COMPLEMENT) == ideal,
    }


def _cycle_profile(k: int, top: int) -> dict:
    j = cover_ideal(Hypergraph.cycle(k))
    return {str(s): _primes(associated_primes(power(j, s))) for s in range(1, top + 1)}


def _whisker() -> dict:
    out = {}
    cases = [("edge", Hypergraph(2, ((1, 2),)), [2])]
    cases.append(("c4", Hypergraph.cycle(4), [1, 2, 3, 4]))
    for label, g, where in cases:
        for v in where:
            h = whisker(g, v)
            per_s = {}
            for s in (1, 2, 3):
                before = {p.vars for p in associated_primes(power(cover_ideal(g), s))}
                after = {p.vars for p in associated_primes(power(cover_ideal(h), s))}
                per_s[str(s)] = [list(p) for p in sorted(after - before)] if before <= after else None
            out[f"{label}@{v}"] = per_s
    return out


def _table(t: int, u: str) -> str:
    return render_table(generator_table(borel_generators(BorelSpec.parse(t, u))))


def _b3x4x7() -> dict:
    spec = BorelSpec.parse(3, "x4,x7")
    ideal = borel_generators(spec)
    m = PrimeSupport.maximal(spec.n)
    return {
        "generators": len(ideal),
        "table": _table(3, "x4,x7"),
        "localizations": {
            str(k): localization_split(localization(ideal, m.without(k)).padded) for k in m.vars
        },
    }


def _b3x2x5x9() -> dict:
    spec = BorelSpec.parse(3, "x2,x5,x9")
    deleted = recognize_borel(deletion(borel_generators(spec), 5))
    return {
        "table": _table(3, "x2,x5,x9"),
        "intervals": [list(a) for a in a_intervals(spec).intervals],
        "unsupported": list(a_intervals(spec).unsupported),
        "deletion_at_x5": None if deleted is None else str(deleted),
    }


def _shifted_localization():
    big = borel_generators(BorelSpec.parse(3, "x2,x7,x10,x13"))
    return localization(big, PrimeSupport(13, range(4, 14))).padded


def _shift_table() -> dict:
    return {"table": render_table(shift_table(_shifted_localization(), 3))}


def _shifted_localization_check() -> dict:
    small = borel_generators(BorelSpec.parse(3, "x4,x7,x10"))
    shifted = relabel_shift(_shifted_localization(), 3)
    ass3 = associated_primes(power(small, 3))
    return {
        "shifted_is_b3x4x7x10": shifted == small,
        "maximal_prime_in_ass_cube": PrimeSupport.maximal(10) in ass3,
        "maximal_prime_in_ass_square": PrimeSupport.maximal(10) in associated_primes(power(small, 2)),
    }


def _special_cycle() -> dict:
    h = borel_hypergraph(BorelSpec.parse(3, "x3,x6,x9,x12"))
    cycles = [str(c) for c in special_odd_cycles(h, 3)]
    parts = is_d_uniform_d_partite(h)
    return {
        "contains": "1, {1,5,8,11}, 5, {2,5,9,12}, 9, {1,4,9,12}, 1" in cycles,
        "partition": None if parts is None else [list(p) for p in parts],
    }


def _seventeen_vertex() -> dict:
    dec = almost_bipartite_decomposition(SEVENTEEN_VERTEX_GRAPH)
    out = dec.to_json()
    out["class"] = classify_graph(SEVENTEEN_VERTEX_GRAPH).verdict
    return out


def _classification() -> dict:
    out = {}
    for t, u in [(3, "x3,x6,x9"), (3, "x4,x7"), (3, "x2,x5,x9")]:
        out[f"ntf {t} {u}"] = classify_ntf(BorelSpec.parse(t, u)).verdict
    for t, u in [(3, "x2,x5,x9"), (3, "x1,x7,x10"), (3, "x2,x7,x10")]:
        c = classify_degree3(BorelSpec.parse(t, u))
        out[f"degree3 {t} {u}"] = [c.verdict, _primes(c.witnesses)]
    for t, u in [(3, "x3,x7"), (3, "x4,x7")]:
        out[f"degree2 {t} {u}"] = classify_degree2(BorelSpec.parse(t, u)).verdict
    return out


REGISTRY = {
    "embedded-prime-3vars": _embedded_prime,
    "pentagon-dual": _pentagon,
    "cycle5-cover-powers": lambda: _cycle_profile(5, 3),
    "cycle7-cover-powers": lambda: _cycle_profile(7, 2),
    "whisker-cover-powers": _whisker,
    "borel-b3x4x7-table": _b3x4x7,
    "borel-b2x3x5x7-table": lambda: {"table": _table(2, "x3,x5,x7")},
    "borel-b3x3x6x9-table": lambda: {"table": _table(3, "x3,x6,x9")},
    "borel-b3x2x5x9-table": _b3x2x5x9,
    "borel-localization-table": _shift_table,
    "shifted-localization-b3x2x7x10x13": _shifted_localization_check,
    "special-cycle-b3x3x6x9x12": _special_cycle,
    "almost-bipartite-17-vertices": _seventeen_vertex,
    "borel-classification": _classification,
}


def load_fixtures() -> dict:
    text = resources.files("ntfideals").joinpath("fixtures/replay.json").read_text(encoding="utf-8")
    return json.loads(text)


_GEN = re.compile(r"x\d+(?:\^\d+)?")


def _normalize(value):
    """Generator listings like ``(x7)+(x1,x2x5)`` become sets; lists become sorted."""
    if isinstance(value, str) and value.startswith("("):
        return sorted("".join(_GEN.findall(g)) for g in re.split(r"[(),+]", value) if g)
    if isinstance(value, list):
        return sorted((_normalize(v) for v in value), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(value, dict):
        return {k: _normalize(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Check:
    key: str
    ok: bool
    expected: object
    actual: object


@dataclass(frozen=True)
class ReplayResult:
    name: str
    description: str
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "status": "PASS" if self.ok else "FAIL",
            "checks": [
                {"key": c.key, "ok": c.ok, **({} if c.ok else {"expected": c.expected, "actual": c.actual})}
                for c in self.checks
            ],
        }


def replay(name: str, fixtures: dict | None = None) -> ReplayResult:
    if name not in REGISTRY:
        raise InputError(f"unknown replay {name!r}; known: {', '.join(sorted(REGISTRY))}")
    fixtures = load_fixtures() if fixtures is None else fixtures
    entry = fixtures[name]
    actual = REGISTRY[name]()
    checks = []
    for key in sorted(set(entry["expected"]) | set(actual)):
        exp = entry["expected"].get(key)
        act = actual.get(key)
        checks.append(Check(key, key in actual and key in entry["expected"]
                            and _normalize(exp) == _normalize(act), exp, act))
    return ReplayResult(name, entry["description"], tuple(checks))


def replay_names() -> list:
    return sorted(REGISTRY)
