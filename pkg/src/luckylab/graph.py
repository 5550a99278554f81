"""Immutable undirected simple graphs and the exact graph parameters the solvers need.

Vertices are dense integer ids 0..n-1; optional display names are metadata
only and never identity.  Adjacency is exposed as sorted tuples so every
traversal in the package is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence


class GraphError(ValueError):
    """A construction request violates the simple-graph invariants."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertex ids 0..n-1.

    Each edge is stored once as (u, v) with u < v, in sorted order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    names: Optional[dict[int, str]] = None
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(b)) for b in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(b) for b in self._adj]

    def max_degree(self) -> int:
        return max((len(b) for b in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def name_of(self, v: int) -> str:
        if self.names and v in self.names:
            return self.names[v]
        return str(v)


def build_graph(
    n: int,
    edge_list: Iterable[tuple[int, int]],
    names: Optional[Mapping[int, str]] = None,
) -> Graph:
    """Normalize an edge list into a Graph.

    Duplicate pairs (in either orientation) collapse; loops and
    out-of-range endpoints are rejected with the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        seen.add((u, v) if u < v else (v, u))
    name_map = dict(names) if names else None
    if name_map:
        for v in name_map:
            if not (0 <= v < n):
                raise GraphError(f"name attached to unknown vertex {v}")
    return Graph(n=n, edges=tuple(sorted(seen)), names=name_map)


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent."""
    sets = [set(b) for b in g.adjacency()]
    for u, v in g.edges:
        if sets[u] & sets[v]:
            return False
    return True


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def max_clique(g: Graph) -> tuple[int, list[int]]:
    """Exact maximum clique via branch and bound on bitset candidate sets.

    Exponential worst case; intended for n up to ~50.  Returns the clique
    number and a sorted witness clique.
    """
    if g.n < 1:
        raise GraphError("max_clique requires n >= 1")
    n = g.n
    adjb = [0] * n
    for u, v in g.edges:
        adjb[u] |= 1 << v
        adjb[v] |= 1 << u

    best_size = 0
    best_set = 0

    def expand(r: int, r_size: int, p: int):
        nonlocal best_size, best_set
        if p == 0:
            if r_size > best_size:
                best_size = r_size
                best_set = r
            return
        if r_size + bin(p).count("1") <= best_size:
            return
        # pivot: candidate with most candidate-neighbors, ties by lowest id
        pivot, pivot_deg = -1, -1
        q = p
        while q:
            v = (q & -q).bit_length() - 1
            q &= q - 1
            d = bin(adjb[v] & p).count("1")
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        ext = p & ~adjb[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            expand(r | (1 << v), r_size + 1, p & adjb[v])
            p &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    witness = [v for v in range(n) if best_set >> v & 1]
    return best_size, witness


def chromatic_number(g: Graph) -> tuple[int, dict[int, int]]:
    """Exact chromatic number with a witness coloring (colors 1..chi).

    Tries k = 1, 2, ... and proves each failing k infeasible by exhaustive
    backtracking.  Intended for n up to ~20.
    """
    if g.n < 1:
        raise GraphError("chromatic_number requires n >= 1")
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = g.adjacency()

    for k in range(1, n + 1):
        color = [0] * n  # 0 = unassigned, colors are 1..k

        def place(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            used_max = max(color) if i else 0
            forbidden = {color[u] for u in adj[v] if color[u]}
            # new colors are interchangeable: only try one fresh color
            for c in range(1, min(k, used_max + 1) + 1):
                if c in forbidden:
                    continue
                color[v] = c
                if place(i + 1):
                    return True
                color[v] = 0
            return False

        if place(0):
            return k, {v: color[v] for v in range(n)}
    raise AssertionError("unreachable: n colors always suffice")


def regularity(g: Graph) -> Optional[int]:
    """The common degree if the graph is regular, else None."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


# ---------------------------------------------------------------------------
# Small standard families used throughout the tests and harnesses.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; complete_multipartite([2, 2, 2]) is the octahedron."""
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return build_graph(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
