"""Whole-graph reductions assembled from the certified gadget emitters."""

from __future__ import annotations

from dataclasses import dataclass

from ..formula import Cnf3Formula
from ..graph import Graph, GraphError, is_triangle_free
from ..labeling import ListAssignment
from .gadgets import (
    GadgetBuilder,
    emit_amplifier_gadget,
    emit_clause_gadget,
    emit_variable_gadget,
    emit_vertex_gadget,
)


@dataclass(frozen=True)
class ReductionOutput:
    """A reduction graph plus the map from source objects to their vertices."""

    graph: Graph
    provenance: dict[str, tuple[int, ...]]
    params: dict

    def vertices_of(self, source: str) -> tuple[int, ...]:
        return self.provenance[source]

    def covers_all_vertices(self) -> bool:
        covered = set()
        for ids in self.provenance.values():
            covered.update(ids)
        return covered == set(range(self.graph.n))

    def id_of(self, name: str) -> int:
        for v, nm in (self.graph.names or {}).items():
            if nm == name:
                return v
        raise KeyError(name)


def _span(b: GadgetBuilder, start: int) -> tuple[int, ...]:
    return tuple(range(start, len(b)))


def build_sat_reduction(phi: Cnf3Formula) -> ReductionOutput:
    """One variable gadget per variable, one clause gadget per clause.

    The clause cycle's w1 is joined to the port of each distinct literal the
    clause contains.  The output is triangle-free, and that is checked here
    rather than assumed.
    """
    b = GadgetBuilder()
    provenance: dict[str, tuple[int, ...]] = {}
    lit_port: dict[int, int] = {}
    for i in range(1, phi.num_vars + 1):
        start = len(b)
        ids = emit_variable_gadget(b, f"x{i}")
        lit_port[i] = ids["x"]
        lit_port[-i] = ids["not_x"]
        provenance[f"x{i}"] = _span(b, start)
    for ci, clause in enumerate(phi.clauses):
        start = len(b)
        ports = [lit_port[lit] for lit in phi.distinct_literals(clause)]
        emit_clause_gadget(b, ports, f"c{ci}")
        provenance[f"c{ci}"] = _span(b, start)
    g = b.build()
    if not is_triangle_free(g):
        raise GraphError("sat reduction produced a triangle; construction is broken")
    return ReductionOutput(g, provenance, {"num_vars": phi.num_vars,
                                           "num_clauses": len(phi.clauses)})


def build_inapprox_reduction(g: Graph, d: int) -> ReductionOutput:
    """One amplifier per vertex; centers inherit the source graph's adjacency."""
    if g.n < 1:
        raise GraphError("source graph must be nonempty")
    if d < 1:
        raise GraphError(f"d must be positive, got {d}")
    b = GadgetBuilder()
    provenance: dict[str, tuple[int, ...]] = {}
    center: dict[int, int] = {}
    pair_vertices: list[int] = []
    for v in g.vertices():
        start = len(b)
        center[v] = b.add_vertex(f"v{v}")
        ids = emit_amplifier_gadget(b, center[v], d, f"v{v}")
        for ai, bi in ids["pairs"]:
            pair_vertices.extend((ai, bi))
        provenance[f"v{v}"] = _span(b, start)
    for u, v in g.edges:
        b.add_edge(center[u], center[v])
    out = b.build()
    return ReductionOutput(out, provenance, {"d": d, "source_n": g.n,
                                             "centers": tuple(center[v] for v in g.vertices()),
                                             "pair_vertices": tuple(pair_vertices)})


def paper_amplifier_d(k: int, epsilon: float) -> int:
    """The amplifier size the inapproximability argument uses: 5 * k^(ceil(3/eps)+1).

    Exposed for reference only; it is astronomically large for any
    interesting epsilon and is never instantiated at full scale here.
    """
    import math
    if k < 1 or epsilon <= 0:
        raise ValueError("need k >= 1 and epsilon > 0")
    return 5 * k ** (math.ceil(3.0 / epsilon) + 1)


def normalize_lists(lists: ListAssignment) -> tuple[ListAssignment, dict[int, int]]:
    """Relabel list values onto {2..|W|+1} by the order-preserving bijection.

    Only bijectivity is required for correctness; order preservation makes
    the output deterministic.
    """
    if not lists.lists:
        raise GraphError("list assignment is empty")
    universe = sorted({x for s in lists.lists.values() for x in s})
    f = {w: i + 2 for i, w in enumerate(universe)}
    lf = ListAssignment({v: frozenset(f[x] for x in s) for v, s in lists.lists.items()})
    return lf, f


def build_listcoloring_reduction(g: Graph, lists: ListAssignment) -> ReductionOutput:
    """One vertex gadget per source vertex; ports inherit the source adjacency.

    The resulting graph has a binary additive labeling exactly when the
    source graph is colorable from the lists.
    """
    if g.n < 1:
        raise GraphError("source graph must be nonempty")
    lists.validate_on(g)
    lf, f = normalize_lists(lists)
    s = len(f) + 1
    b = GadgetBuilder()
    provenance: dict[str, tuple[int, ...]] = {}
    port: dict[int, int] = {}
    for v in g.vertices():
        start = len(b)
        port[v] = b.add_vertex(f"v{v}")
        emit_vertex_gadget(b, port[v], lf[v], s, f"v{v}")
        provenance[f"v{v}"] = _span(b, start)
    for u, v in g.edges:
        b.add_edge(port[u], port[v])
    out = b.build()
    return ReductionOutput(out, provenance, {
        "s": s,
        "f": f,
        "lf": {v: tuple(sorted(lf[v])) for v in g.vertices()},
        "ports": tuple(port[v] for v in g.vertices()),
    })
