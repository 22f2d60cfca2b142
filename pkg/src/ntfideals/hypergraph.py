"""Hypergraphs and graphs: edge and cover ideals, cycles, whiskers and gluings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .decomposition import alexander_dual, associated_primes
from .monomial import InputError, Monomial, MonomialIdeal, power


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph on vertices ``1..n``; edges are sorted vertex tuples."""

    n: int
    edges: tuple

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            e = tuple(sorted(set(int(v) for v in e)))
            if not e:
                raise InputError("empty edge")
            if any(not 1 <= v <= self.n for v in e):
                raise InputError(f"edge {e} has a vertex outside 1..{self.n}")
            edges.add(e)
        edges = tuple(sorted(edges, key=lambda e: (len(e), e)))
        for a in edges:
            for b in edges:
                if a != b and set(a) <= set(b):
                    raise InputError(f"hypergraph is not simple: {a} is inside {b}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> Hypergraph:
        """The hypergraph whose edge ideal is the square-free ideal ``ideal``."""
        if not ideal.is_squarefree() or not ideal.is_proper():
            raise InputError("need a proper square-free ideal")
        return cls(ideal.n, tuple(tuple(i + 1 for i, a in enumerate(e) if a) for e in ideal.exps))

    @classmethod
    def cycle(cls, k: int) -> Hypergraph:
        return cls(k, tuple((i, i % k + 1) for i in range(1, k + 1)))

    @property
    def vertices(self) -> tuple:
        """Vertices lying on some edge."""
        return tuple(sorted({v for e in self.edges for v in e}))

    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def to_networkx(self) -> nx.Graph:
        if not self.is_graph():
            raise InputError("not a graph (some edge does not have two vertices)")
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def induced(self, vertices) -> Hypergraph:
        """Induced subhypergraph: traces of edges on ``vertices``, minimal ones kept."""
        vs = set(vertices)
        traces = {tuple(v for v in e if v in vs) for e in self.edges}
        traces.discard(())
        minimal = [t for t in traces if not any(s != t and set(s) <= set(t) for s in traces)]
        return Hypergraph(self.n, tuple(minimal))

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": [list(e) for e in self.edges]}


def edge_ideal(h: Hypergraph) -> MonomialIdeal:
    return MonomialIdeal(h.n, [Monomial.from_support(e, h.n) for e in h.edges])


def minimal_vertex_covers(h: Hypergraph) -> list:
    """All inclusion-minimal transversals, sorted by (size, vertices).

    Branch on the vertices of the first uncovered edge; prune branches that
    already contain a found cover; keep the minimal results.
    """
    if not h.edges:
        return [()]
    covers: set = set()

    def branch(chosen: frozenset):
        for e in h.edges:
            if chosen.isdisjoint(e):
                for v in e:
                    nxt = chosen | {v}
                    if any(c <= nxt for c in covers):
                        continue
                    branch(nxt)
                return
        covers.add(chosen)

    branch(frozenset())
    minimal = [c for c in covers if not any(d < c for d in covers)]
    return sorted((tuple(sorted(c)) for c in minimal), key=lambda c: (len(c), c))


def cover_ideal(h: Hypergraph) -> MonomialIdeal:
    """Cover ideal, built from the minimal covers and checked against the Alexander dual."""
    if not h.edges:
        return MonomialIdeal.unit(h.n)
    j = MonomialIdeal(h.n, [Monomial.from_support(c, h.n) for c in minimal_vertex_covers(h)])
    if j != alexander_dual(edge_ideal(h)):
        raise RuntimeError("cover ideal differs from the Alexander dual of the edge ideal")
    return j


@dataclass(frozen=True)
class HyperCycle:
    """Alternating cycle ``v1, E1, v2, E2, ..., vs, Es, v1``."""

    vertices: tuple
    edges: tuple

    def __len__(self) -> int:
        return len(self.vertices)

    def sequence(self) -> list:
        out = []
        for v, e in zip(self.vertices, self.edges):
            out += [v, list(e)]
        return out + [self.vertices[0]]

    def __str__(self) -> str:
        parts = []
        for v, e in zip(self.vertices, self.edges):
            parts += [str(v), "{" + ",".join(map(str, e)) + "}"]
        return ", ".join(parts + [str(self.vertices[0])])


def special_odd_cycles(h: Hypergraph, max_len: int = 3, strict: bool = False) -> list:
    """Special cycles of odd length ``3 <= s <= max_len``.

    A cycle has distinct vertices and distinct edges, ``v_i, v_{i+1} in E_i``
    and is special when each ``E_i`` contains no cycle vertex besides
    ``v_i, v_{i+1}``. With ``strict`` every edge of ``h`` must meet the cycle's
    vertices in at most two points. Each cycle is reported once: rotated so
    the smallest vertex comes first, read in the direction with the smaller
    second vertex.
    """
    if max_len < 3:
        raise InputError("max_len must be at least 3")
    incident = {v: [e for e in h.edges if v in e] for v in h.vertices}
    found = []

    def extend(verts: list, edges: list):
        s = len(verts)
        start, cur = verts[0], verts[-1]
        on_cycle = set(verts)
        for e in incident[cur]:
            if e in edges:
                continue
            if any(v in e for v in verts[1:-1]):
                continue
            # closing edge: back to the start
            if s >= 3 and s % 2 == 1 and start in e and verts[1] < cur:
                if not strict or all(len(on_cycle.intersection(f)) <= 2 for f in h.edges):
                    found.append(HyperCycle(tuple(verts), tuple(edges + [e])))
            if (s > 1 and start in e) or s >= max_len:
                continue
            for w in e:
                if w <= start or w in on_cycle:
                    continue
                if any(w in f for f in edges):
                    continue
                extend(verts + [w], edges + [e])

    for v in h.vertices:
        extend([v], [])
    return sorted(found, key=lambda c: (len(c), c.vertices, c.edges))


@dataclass(frozen=True)
class GraphClass:
    verdict: str  # bipartite | almost_bipartite | other
    cycle: Optional[tuple] = None
    odd_cycle_count: int = 0

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "odd_induced_cycles": self.odd_cycle_count}
        if self.cycle is not None:
            out["cycle"] = list(self.cycle)
        return out


def canonical_cycle(cycle) -> tuple:
    """Rotate to the smallest vertex, then read towards the smaller neighbour."""
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def two_coloring(g: nx.Graph) -> Optional[dict]:
    """A proper 2-colouring by breadth-first search, or None."""
    color: dict = {}
    for root in sorted(g.nodes):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in sorted(g.neighbors(v)):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def induced_odd_cycles(g: nx.Graph) -> list:
    """Chordless cycles of odd length, canonically oriented and sorted."""
    cycles = {canonical_cycle(c) for c in nx.chordless_cycles(g) if len(c) % 2 == 1}
    return sorted(cycles, key=lambda c: (len(c), c))


def classify_graph(h: Hypergraph) -> GraphClass:
    g = h.to_networkx()
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        raise InputError("classification needs a connected graph")
    if two_coloring(g) is not None:
        return GraphClass("bipartite")
    odd = induced_odd_cycles(g)
    if len(odd) == 1:
        return GraphClass("almost_bipartite", odd[0], 1)
    return GraphClass("other", None, len(odd))


@dataclass(frozen=True)
class AlmostBipartiteDecomposition:
    cycle: tuple
    A: dict  # cycle vertex -> tuple of vertices
    B: dict  # cycle edge (i, j), i < j -> tuple of vertices

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "A": {str(i): list(v) for i, v in sorted(self.A.items())},
            "B": {f"{e[0]},{e[1]}": list(v) for e, v in sorted(self.B.items())},
        }


def almost_bipartite_decomposition(h: Hypergraph) -> AlmostBipartiteDecomposition:
    """The sets ``A_i`` (cycle vertices) and ``B_e`` (cycle edges) by exhaustive path search.

    ``x`` is in ``A_i`` when ``i`` lies on every path from ``x`` to every cycle
    vertex. ``x`` is in ``B_{i,j}`` when for every other cycle vertex ``m``
    some ``(x, m)``-path uses ``i`` but not ``j`` and another uses ``j`` but not ``i``.
    """
    cls = classify_graph(h)
    if cls.verdict != "almost_bipartite":
        raise InputError(f"graph is {cls.verdict}, not almost bipartite")
    g = h.to_networkx()
    cycle = cls.cycle
    on_cycle = set(cycle)
    outside = [x for x in sorted(g.nodes) if x not in on_cycle]
    paths = {(x, j): [set(p) for p in nx.all_simple_paths(g, x, j)] for x in outside for j in cycle}

    A = {}
    for i in cycle:
        A[i] = tuple(x for x in outside
                     if all(all(i in p for p in paths[x, j]) for j in cycle if j != i))
    cyc_edges = [tuple(sorted((cycle[k], cycle[(k + 1) % len(cycle)]))) for k in range(len(cycle))]
    B = {}
    for i, j in cyc_edges:
        B[(i, j)] = tuple(
            x for x in outside
            if all(any(i in p and j not in p for p in paths[x, m])
                   and any(j in p and i not in p for p in paths[x, m])
                   for m in cycle if m not in (i, j))
        )

    seen = list(cycle) + [x for v in A.values() for x in v] + [x for v in B.values() for x in v]
    if sorted(seen) != sorted(g.nodes):
        raise RuntimeError("A_i / B_e sets do not partition the vertex set")
    for part in list(A.values()) + list(B.values()):
        if part and two_coloring(g.subgraph(part)) is None:
            raise RuntimeError(f"induced subgraph on {part} is not bipartite")
    return AlmostBipartiteDecomposition(cycle, A, B)


def whisker(h: Hypergraph, v: int) -> Hypergraph:
    """Add a new vertex ``n + 1`` joined to ``v`` by a 2-edge."""
    if not 1 <= v <= h.n:
        raise InputError(f"vertex {v} outside 1..{h.n}")
    return Hypergraph(h.n + 1, h.edges + ((v, h.n + 1),))


def _widen(h: Hypergraph, n: int) -> Hypergraph:
    return Hypergraph(n, h.edges)


@dataclass(frozen=True)
class GluingReport:
    overlap: str  # "vertex" or "edge"
    bound: int
    per_power: dict  # s -> bool

    @property
    def holds(self) -> bool:
        return all(self.per_power.values())

    def to_json(self) -> dict:
        return {"overlap": self.overlap, "bound": self.bound, "holds": self.holds,
                "per_power": {str(s): ok for s, ok in sorted(self.per_power.items())}}


def verify_gluing(g1: Hypergraph, g2: Hypergraph, bound: int) -> GluingReport:
    """Check ``Ass(J(L)^s) = Ass(J(G1)^s) | Ass(J(G2)^s)`` for the union ``L``, ``s <= bound``.

    Both graphs use the vertex labels of the union; they must share one vertex,
    or two vertices and the edge between them.
    """
    for g in (g1, g2):
        gx = g.to_networkx()
        if not gx.number_of_nodes() or not nx.is_connected(gx):
            raise InputError("gluing needs connected graphs")
    shared_v = set(g1.vertices) & set(g2.vertices)
    shared_e = set(g1.edges) & set(g2.edges)
    if len(shared_v) == 1:
        overlap = "vertex"
    elif len(shared_v) == 2 and len(shared_e) == 1:
        overlap = "edge"
    else:
        raise InputError("graphs must share exactly one vertex, or exactly one edge")
    n = max(g1.n, g2.n)
    a, b = _widen(g1, n), _widen(g2, n)
    union = Hypergraph(n, tuple(set(a.edges) | set(b.edges)))
    ja, jb, jl = cover_ideal(a), cover_ideal(b), cover_ideal(union)
    per_power = {}
    for s in range(1, bound + 1):
        lhs = set(associated_primes(power(jl, s)))
        rhs = set(associated_primes(power(ja, s))) | set(associated_primes(power(jb, s)))
        per_power[s] = lhs == rhs
    return GluingReport(overlap, bound, per_power)


def is_d_uniform_d_partite(h: Hypergraph) -> Optional[list]:
    """A partition ``V_1..V_d`` meeting every edge exactly once, or None.

    Equivalent to a proper ``d``-colouring of the 2-section; found by
    backtracking over vertices in order, opening colours left to right.
    Vertices on no edge join the part of the preceding vertex.
    """
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1:
        return None
    d = sizes.pop()
    nbrs = {v: set() for v in range(1, h.n + 1)}
    for e in h.edges:
        for v in e:
            nbrs[v].update(w for w in e if w != v)
    order = list(range(1, h.n + 1))
    color: dict = {}

    def solve(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        if not nbrs[v]:
            color[v] = color.get(v - 1, 0)
            if solve(idx + 1, max(used, color[v] + 1)):
                return True
            del color[v]
            return False
        banned = {color[w] for w in nbrs[v] if w in color}
        for c in range(min(used + 1, d)):
            if c in banned:
                continue
            color[v] = c
            if solve(idx + 1, max(used, c + 1)):
                return True
            del color[v]
        return False

    if not solve(0, 0):
        return None
    return [tuple(v for v in order if color[v] == c) for c in range(d)]
