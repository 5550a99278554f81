"""Named graph families: the choosability counterexample and the clique example."""

from __future__ import annotations

from ..graph import Graph, GraphError, build_graph
from ..labeling import Labeling, ListAssignment


def counterexample_graph(k: int) -> tuple[Graph, Labeling, ListAssignment]:
    """The separation construction: eta stays at k while every size-(2k-1) list family loses.

    2k-1 disjoint copies of K_{2k} on vertices {x_b^a, y_b^a : 1 <= b <= k},
    plus a hub t adjacent to every y vertex.  Ships the witness labeling
    (x_b^a and y_b^a get b, t gets k) and the adversarial list assignment
    (x and t see {1..2k-1}, y_b^a sees {1+a..2k-1+a}).
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    names: dict[int, str] = {}
    x_id: dict[tuple[int, int], int] = {}
    y_id: dict[tuple[int, int], int] = {}
    nxt = 0
    for a in range(1, 2 * k):
        for b_ in range(1, k + 1):
            x_id[a, b_] = nxt
            names[nxt] = f"x_{b_}^{a}"
            nxt += 1
        for b_ in range(1, k + 1):
            y_id[a, b_] = nxt
            names[nxt] = f"y_{b_}^{a}"
            nxt += 1
    t = nxt
    names[t] = "t"
    n = nxt + 1

    edges = []
    for a in range(1, 2 * k):
        clique = [x_id[a, b_] for b_ in range(1, k + 1)] + [y_id[a, b_] for b_ in range(1, k + 1)]
        edges.extend((u, v) for i, u in enumerate(clique) for v in clique[i + 1:])
    edges.extend((y_id[a, b_], t) for a in range(1, 2 * k) for b_ in range(1, k + 1))
    g = build_graph(n, edges, names)

    values = {t: k}
    for (a, b_), vid in x_id.items():
        values[vid] = b_
    for (a, b_), vid in y_id.items():
        values[vid] = b_
    shipped = Labeling(values)

    base = frozenset(range(1, 2 * k))
    lists: dict[int, frozenset[int]] = {t: base}
    for (a, b_), vid in x_id.items():
        lists[vid] = base
    for (a, b_), vid in y_id.items():
        lists[vid] = frozenset(range(1 + a, 2 * k + a))
    return g, shipped, ListAssignment(lists)


def clique_eta_one(n: int) -> Graph:
    """K_n whose i-th clique vertex carries i-1 pendants, separating degrees.

    Clique number n, additive number 1: with every label 1, the neighbor sum
    at each vertex is its degree, and all adjacent degrees differ.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    names = {i: f"v{i + 1}" for i in range(n)}
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nxt = n
    for i in range(1, n + 1):  # vertex v_i has i-1 pendants u_{i,j}
        for j in range(1, i):
            names[nxt] = f"u_{i},{j}"
            edges.append((i - 1, nxt))
            nxt += 1
    return build_graph(nxt, edges, names)
