"""t-spread principal Borel ideals: generators, intervals, linear relation graphs, classification."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import networkx as nx

from .hypergraph import Hypergraph
from .monomial import InputError, Monomial, MonomialIdeal, PrimeSupport, format_exponents


@dataclass(frozen=True)
class BorelSpec:
    """``B_t(u)`` for the t-spread monomial ``u = x_{i_1} ... x_{i_d}``; ambient ring ``x_1..x_{i_d}``."""

    t: int
    indices: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if self.t < 1:
            raise InputError("t must be a positive integer")
        if not idx:
            raise InputError("u must have positive degree")
        if idx[0] < 1:
            raise InputError("variable indices start at 1")
        for a, b in zip(idx, idx[1:]):
            if b - a < self.t:
                raise InputError(f"u is not {self.t}-spread: x{a} and x{b} are too close")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def parse(cls, t: int, u: str) -> BorelSpec:
        """``u`` as ``x4,x7`` or ``x4*x7``."""
        idx = []
        for part in u.replace("*", ",").split(","):
            part = part.strip()
            if not (part.startswith("x") and part[1:].isdigit()):
                raise InputError(f"malformed variable {part!r} in u")
            idx.append(int(part[1:]))
        return cls(t, tuple(idx))

    @property
    def d(self) -> int:
        return len(self.indices)

    @property
    def n(self) -> int:
        return self.indices[-1]

    @property
    def u(self) -> Monomial:
        return Monomial.from_support(self.indices, self.n)

    def __str__(self) -> str:
        return f"B_{self.t}({format_exponents(self.u.exponents, sep='')})"


def borel_index_tuples(spec: BorelSpec) -> list:
    """All ``(j_1..j_d)`` with ``j_k <= i_k`` and ``j_k - j_{k-1} >= t``, lexicographically."""
    t, idx = spec.t, spec.indices
    out = []

    def extend(prefix: list):
        k = len(prefix)
        if k == len(idx):
            out.append(tuple(prefix))
            return
        lo = prefix[-1] + t if prefix else 1
        for j in range(lo, idx[k] + 1):
            extend(prefix + [j])

    extend([])
    return out


def borel_generators(spec: BorelSpec) -> MonomialIdeal:
    return MonomialIdeal(spec.n, [Monomial.from_support(j, spec.n) for j in borel_index_tuples(spec)])


def borel_hypergraph(spec: BorelSpec) -> Hypergraph:
    return Hypergraph(spec.n, tuple(borel_index_tuples(spec)))


@dataclass(frozen=True)
class Intervals:
    intervals: tuple  # ((lo, hi), ...) one per k
    unsupported: tuple  # variables of x_1..x_n outside supp(B_t(u))

    def to_json(self) -> dict:
        return {"intervals": [list(a) for a in self.intervals], "unsupported": list(self.unsupported)}


def a_intervals(spec: BorelSpec) -> Intervals:
    """``A_k = [(k-1)t + 1, i_k]`` and the variables that occur in no generator."""
    ints = tuple(((k - 1) * spec.t + 1, i) for k, i in enumerate(spec.indices, start=1))
    support = set(borel_generators(spec).support())
    return Intervals(ints, tuple(i for i in range(1, spec.n + 1) if i not in support))


@dataclass(frozen=True)
class LinearRelationGraph:
    edges: tuple  # sorted pairs (i, j), i < j
    witnesses: dict = field(compare=False)  # (i, j) -> (u_k, u_l) with x_i u_k = x_j u_l

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for e in self.edges for v in e}))

    def components(self) -> list:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return sorted(tuple(sorted(c)) for c in nx.connected_components(g))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "components": [list(c) for c in self.components()],
            "witnesses": {f"{i},{j}": [str(a), str(b)] for (i, j), (a, b) in sorted(self.witnesses.items())},
        }


def linear_relation_graph(ideal: MonomialIdeal) -> LinearRelationGraph:
    """Pairs ``{i, j}`` with ``x_i u_k = x_j u_l`` for generators ``u_k, u_l``.

    ``x_i u_k = x_j u_l`` (``i != j``) means both generators are ``w * x_j`` and
    ``w * x_i`` for the same ``w``; generators are grouped by every such ``w``.
    """
    if not ideal.is_equigenerated():
        warnings.warn("linear relation graph of an ideal that is not equigenerated", stacklevel=2)
    n = ideal.n
    groups: dict = {}
    for e in ideal.exps:
        for j in range(n):
            if e[j]:
                w = e[:j] + (e[j] - 1,) + e[j + 1:]
                groups.setdefault(w, []).append((j + 1, e))
    witnesses = {}
    for members in groups.values():
        for (a, ea), (b, eb) in combinations(members, 2):
            if a == b:
                continue
            # x_a divides e_a and e_b = (e_a / x_a) x_b, so x_b * e_a = x_a * e_b
            i, j, uk, ul = (a, b, eb, ea) if a < b else (b, a, ea, eb)
            key = (i, j)
            pair = (Monomial(uk), Monomial(ul))
            if key not in witnesses or _pair_key(pair) < _pair_key(witnesses[key]):
                witnesses[key] = pair
    return LinearRelationGraph(tuple(sorted(witnesses)), witnesses)


def _pair_key(pair) -> tuple:
    return tuple(tuple(-a for a in m.exponents) for m in pair)


def recognize_borel(ideal: MonomialIdeal) -> Optional[BorelSpec]:
    """A spec with ``borel_generators(spec)`` equal to ``ideal`` (trimmed to its ambient), or None.

    Tries the largest admissible ``t`` first.
    """
    if not ideal.is_proper() or not ideal.is_squarefree() or not ideal.is_equigenerated():
        return None
    supports = [tuple(i + 1 for i, a in enumerate(e) if a) for e in ideal.exps]
    top = tuple(max(s[k] for s in supports) for k in range(len(supports[0])))
    gaps = [b - a for s in supports for a, b in zip(s, s[1:])]
    max_t = min(gaps) if gaps else 1
    for t in range(max_t, 0, -1):
        try:
            spec = BorelSpec(t, top)
        except InputError:
            continue
        gens = borel_generators(spec)
        if gens.exps == tuple(e[: spec.n] for e in ideal.exps) and all(
            not any(e[spec.n:]) for e in ideal.exps
        ):
            return spec
    return None


def analytic_spread(target) -> int:
    """``r - s + 1`` for the linear relation graph (``r`` vertices, ``s`` components).

    Only applied to t-spread principal Borel ideals, whose first syzygies are
    linear; anything else is refused.
    """
    if isinstance(target, MonomialIdeal):
        spec = recognize_borel(target)
        if spec is None:
            raise InputError("analytic spread formula only applies to t-spread principal Borel ideals")
    elif isinstance(target, BorelSpec):
        spec = target
    else:
        raise InputError("expected a BorelSpec or a monomial ideal")
    graph = linear_relation_graph(borel_generators(spec))
    if not graph.edges:
        return 1
    return len(graph.vertices) - len(graph.components()) + 1


@dataclass(frozen=True)
class Classification:
    verdict: str  # ntf | nearly_ntf | not_nearly_ntf | not_ntf
    reason: str
    witnesses: tuple = ()  # PrimeSupport values

    @property
    def ntf(self) -> bool:
        return self.verdict == "ntf"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "reason": self.reason}
        if self.witnesses:
            out["witnesses"] = [list(p.vars) for p in self.witnesses]
        return out


def classify_ntf(spec: BorelSpec) -> Classification:
    """Normally torsion-free exactly when ``i_{d-1} <= (d-1) t``."""
    if spec.d == 1:
        return Classification("ntf", "degree 1: generated by variables")
    i_prev = spec.indices[-2]
    bound = (spec.d - 1) * spec.t
    if i_prev <= bound:
        return Classification(
            "ntf",
            f"i_{spec.d - 1}={i_prev} <= {bound}: edge ideal of a {spec.d}-uniform "
            f"{spec.d}-partite hypergraph with parts A_1..A_{spec.d}",
        )
    return Classification("not_ntf", f"i_{spec.d - 1}={i_prev} > {bound}")


def classify_degree3(spec: BorelSpec) -> Classification:
    """``u = x_a x_b x_n``: ntf if ``b < 2t+1``, else nearly ntf exactly when ``a = 1``."""
    if spec.d != 3:
        raise InputError("classify_degree3 needs a monomial of degree 3")
    a, b, n = spec.indices
    t = spec.t
    if b < 2 * t + 1:
        return Classification("ntf", f"b={b} < 2t+1={2 * t + 1}")
    if a == 1:
        return Classification("nearly_ntf", f"a=1 and b={b} >= 2t+1={2 * t + 1}")
    p1 = PrimeSupport(n, range(t + 1, n + 1))
    p2 = PrimeSupport(n, [1] + list(range(t + 2, n + 1)))
    return Classification("not_nearly_ntf", f"a={a} > 1 and b={b} >= 2t+1={2 * t + 1}", (p1, p2))


def classify_degree2(spec: BorelSpec) -> Classification:
    """``u = x_i x_n`` with ``i >= t``: ntf when ``i = t``, nearly ntf (not ntf) when ``i > t``."""
    if spec.d != 2:
        raise InputError("classify_degree2 needs a monomial of degree 2")
    i = spec.indices[0]
    t = spec.t
    if i < t:
        base = classify_ntf(spec)
        return Classification(base.verdict, f"i={i} < t={t}; decided by the i_(d-1) test: {base.reason}")
    if i == t:
        return Classification("ntf", f"i=t={t}: edge ideal of a bipartite graph")
    return Classification("nearly_ntf", f"i={i} > t={t}: nearly ntf but not ntf")


def relabel_shift(ideal: MonomialIdeal, offset: int) -> MonomialIdeal:
    """Rename ``x_j`` to ``x_{j - offset}``; the ambient ring shrinks by ``offset``."""
    if offset < 0 or offset > ideal.n:
        raise InputError(f"offset {offset} outside 0..{ideal.n}")
    if any(any(e[:offset]) for e in ideal.exps):
        raise InputError(f"ideal involves a variable x_j with j <= {offset}")
    return MonomialIdeal(ideal.n - offset, [e[offset:] for e in ideal.exps])


def relabel_unshift(ideal: MonomialIdeal, offset: int) -> MonomialIdeal:
    if offset < 0:
        raise InputError("offset must be non-negative")
    return MonomialIdeal(ideal.n + offset, [(0,) * offset + e for e in ideal.exps])


# Generator tables: one row per (j_2..j_d), one column per j_1, both ascending.

def _compact(e) -> str:
    return format_exponents(e, sep="")


def generator_table(ideal: MonomialIdeal, render=_compact) -> list:
    """Rows of rendered generators of a square-free equigenerated ideal."""
    rows: dict = {}
    for e in ideal.exps:
        supp = tuple(i for i, a in enumerate(e) if a)
        rows.setdefault(supp[1:], []).append((supp[0], e))
    return [[render(e) for _, e in sorted(rows[key])] for key in sorted(rows)]


def render_table(rows: list, sep: str = "  ") -> str:
    return "\n".join(sep.join(r) for r in rows)


def shift_table(ideal: MonomialIdeal, offset: int) -> list:
    """Rows ``u -> v`` with ``v`` the generator ``u`` shifted down by ``offset``."""
    return generator_table(
        ideal, render=lambda e: f"{_compact(e)} -> {_compact(e[offset:])}"
    )


def localization_split(ideal: MonomialIdeal) -> str:
    """``(variables)+(other generators)``, omitting an empty part."""
    lin = [e for e in ideal.exps if sum(e) == 1]
    rest = [e for e in ideal.exps if sum(e) != 1]
    lin.sort(key=lambda e: e.index(1))
    parts = []
    if lin:
        parts.append("(" + ",".join(_compact(e) for e in lin) + ")")
    if rest:
        rest.sort(key=lambda e: tuple(i for i, a in enumerate(e) if a))
        parts.append("(" + ",".join(_compact(e) for e in rest) + ")")
    return "+".join(parts) if parts else "(0)"
