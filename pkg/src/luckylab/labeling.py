"""Labeling values and the pure verification predicates over them.

Everything here is a total function over immutable inputs; nothing mutates
a graph or a labeling, so concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import Graph


class LabelingError(ValueError):
    """A labeling or list assignment violates its declared constraints."""


@dataclass(frozen=True)
class Labeling:
    """Vertex -> nonnegative integer label."""

    values: dict[int, int]

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __contains__(self, v: int) -> bool:
        return v in self.values

    def __len__(self) -> int:
        return len(self.values)

    def get(self, v: int, default=None):
        return self.values.get(v, default)

    def is_binary(self) -> bool:
        return all(x in (0, 1) for x in self.values.values())

    def max_label(self) -> int:
        return max(self.values.values(), default=0)

    def restricted(self, vs: Iterable[int]) -> "Labeling":
        keep = set(vs)
        return Labeling({v: x for v, x in self.values.items() if v in keep})


@dataclass(frozen=True)
class ListAssignment:
    """Vertex -> nonempty finite set of allowed positive labels."""

    lists: dict[int, frozenset[int]]

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)

    def max_size(self) -> int:
        return max((len(s) for s in self.lists.values()), default=0)

    def validate_on(self, g: Graph) -> None:
        for v, s in self.lists.items():
            if not (0 <= v < g.n):
                raise LabelingError(f"list attached to unknown vertex {v}")
            if not s:
                raise LabelingError(f"empty list at vertex {v}")
        missing = [v for v in g.vertices() if v not in self.lists]
        if missing:
            raise LabelingError(f"list assignment not total; missing vertices {missing}")


def make_lists(lists: Mapping[int, Iterable[int]]) -> ListAssignment:
    return ListAssignment({v: frozenset(s) for v, s in lists.items()})


@dataclass(frozen=True)
class Violation:
    """An edge whose endpoints received equal neighbor sums."""

    edge: tuple[int, int]
    sum_u: int
    sum_v: int


def _require_total(g: Graph, lab: Labeling) -> None:
    for v in g.vertices():
        if v not in lab:
            raise LabelingError(f"labeling is not total: vertex {v} has no label")


def neighbor_sum(g: Graph, lab: Labeling, v: int) -> int:
    """Sum of labels over N(v); 0 for isolated vertices.

    Raises LabelingError naming the first unlabeled neighbor.
    """
    total = 0
    for u in g.neighbors(v):
        x = lab.get(u)
        if x is None:
            raise LabelingError(f"labeling is not total: vertex {u} has no label")
        total += x
    return total


def all_neighbor_sums(g: Graph, lab: Labeling) -> list[int]:
    _require_total(g, lab)
    vals = [lab[v] for v in g.vertices()]
    return [sum(vals[u] for u in g.neighbors(v)) for v in g.vertices()]


def verify_additive(g: Graph, lab: Labeling, mode: str = "any") -> list[Violation]:
    """All edges with equal endpoint sums; empty list iff lab is additive.

    mode selects the label constraint: "any" (nonnegative integers),
    "positive" (the general additive problem, labels >= 1) or "binary"
    (labels in {0, 1}).  A label outside the mode's range raises.
    """
    _require_total(g, lab)
    if mode not in ("any", "positive", "binary"):
        raise ValueError(f"unknown mode {mode!r}")
    for v in g.vertices():
        x = lab[v]
        if x < 0:
            raise LabelingError(f"negative label {x} at vertex {v}")
        if mode == "positive" and x < 1:
            raise LabelingError(f"label {x} at vertex {v} not allowed; positive labels required")
        if mode == "binary" and x not in (0, 1):
            raise LabelingError(f"label {x} at vertex {v} not allowed; binary labels required")
    sums = all_neighbor_sums(g, lab)
    return [
        Violation((u, v), sums[u], sums[v])
        for u, v in g.edges
        if sums[u] == sums[v]
    ]


def verify_from_lists(lab: Labeling, lists: ListAssignment) -> bool:
    """True iff every vertex's label belongs to its list."""
    if set(lab.values) != set(lists.lists):
        return False
    return all(lab[v] in lists[v] for v in lists.lists)


def weight(lab: Labeling) -> int:
    """Total label mass, the objective of the binary minimum-weight problem."""
    return sum(lab.values.values())


def induced_coloring(g: Graph, lab: Labeling) -> dict[int, int]:
    """The coloring v -> neighbor sum of v; proper whenever lab is additive.

    Rejects a non-additive labeling, since the induced map would not be a
    proper coloring.
    """
    bad = verify_additive(g, lab)
    if bad:
        raise LabelingError(f"labeling is not additive; {len(bad)} violated edge(s), first {bad[0]}")
    sums = all_neighbor_sums(g, lab)
    return {v: sums[v] for v in g.vertices()}


def verify_ptds(g: Graph, dom: Iterable[int]) -> bool:
    """Proper total dominating set check.

    True iff every vertex has a neighbor in dom and every edge joins
    vertices with different counts of neighbors in dom.
    """
    ds = set(dom)
    for v in ds:
        if not (0 <= v < g.n):
            raise LabelingError(f"dominating-set member {v} is not a vertex")
    counts = [sum(1 for u in g.neighbors(v) if u in ds) for v in g.vertices()]
    if any(c == 0 for c in counts):
        return False
    return all(counts[u] != counts[v] for u, v in g.edges)
