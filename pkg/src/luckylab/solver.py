"""Exact search for every labeling problem in the workbench.

One engine drives all of them: depth-first assignment over a fixed vertex
order (descending degree, ties by id; values ascending) with sum-interval
propagation.  Every vertex carries the interval of neighbor sums still
reachable given the partial assignment; an edge whose two intervals have
collapsed to the same singleton can never be repaired, so the branch dies.
Disabling propagation only delays conflict detection until the incident
neighborhoods are fully assigned; it never changes feasibility, which the
property tests exercise.

All searches are complete: "infeasible" always means the whole space was
exhausted, and budget exhaustion is reported as its own status rather than
being passed off as an answer.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .graph import Graph, GraphError
from .labeling import Labeling, ListAssignment, verify_additive
from . import fileio

DEFAULT_MAX_NODES = 100_000_000
DEFAULT_MAX_MS = 60_000


@dataclass(frozen=True)
class SearchBudget:
    """Caps on a single solver call.  All caps must be positive."""

    max_nodes: int = DEFAULT_MAX_NODES
    max_ms: float = DEFAULT_MAX_MS

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_ms <= 0:
            raise ValueError("budget caps must be positive")


@dataclass
class SolveReport:
    """Outcome of a solver call.

    status "found" carries a certificate that re-verifies through the
    labeling module; "infeasible" certifies an exhaustive search; a budget
    cut is always reported explicitly.
    """

    status: str  # "found" | "infeasible" | "budget-exceeded"
    value: Optional[int] = None
    certificate: Optional[Labeling] = None
    nodes_explored: int = 0
    elapsed_ms: float = 0.0
    detail: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        cert = None
        if self.certificate is not None:
            cert = fileio.labeling_to_text(self.certificate)
        d = {
            "status": self.status,
            "value": self.value,
            "certificate": cert,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.detail:
            d["detail"] = self.detail
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class _BudgetExceeded(Exception):
    pass


def _twin_predecessors(n, adj, domains, pos):
    """For each vertex, its predecessor in a class of interchangeable twins.

    Two vertices with equal domains are interchangeable when their open
    neighborhoods coincide (non-adjacent twins) or their closed ones do
    (adjacent twins): swapping their labels maps valid labelings to valid
    labelings and preserves weight.  Requiring non-increasing labels along
    the search order within each class keeps one canonical representative
    per symmetry orbit.  Solution enumeration must not use this.
    """
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    open_sig: dict = {}
    closed_sig: dict = {}
    for v in range(n):
        nb = frozenset(adj[v])
        open_sig.setdefault((domains[v], nb), []).append(v)
        closed_sig.setdefault((domains[v], nb | {v}), []).append(v)
    for group in open_sig.values():
        for u in group[1:]:
            union(group[0], u)
    for group in closed_sig.values():
        for u in group[1:]:
            union(group[0], u)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    prev = [None] * n
    for members in classes.values():
        if len(members) < 2:
            continue
        members.sort(key=lambda v: pos[v])
        for a, b in zip(members, members[1:]):
            prev[b] = a
    return prev


def _search_order(n: int, adj, tiers: Optional[Mapping[int, int]] = None) -> list[int]:
    """Deterministic assignment order: maximum-cardinality search seeded by degree.

    A vertex whose neighbors are all already ordered comes immediately (its
    sum is decided, so assigning it closes its constraints on the spot);
    otherwise the vertex with the most already-ordered neighbors wins, with
    ties broken by higher degree, then lower id.  Keeping each vertex near
    its neighbors lets the sum intervals collapse early, which is what makes
    gadget-heavy graphs tractable; a plain global degree order scatters the
    local units across the search depth and provably thrashes on them.

    An optional tier map partitions the vertices into priority classes;
    lower tiers are exhausted first.  Constructions with large repeated
    appendages (the amplifier's pendant pairs) use it to put the globally
    constrained skeleton ahead of the appendages.
    """
    degree = [len(adj[v]) for v in range(n)]
    tier = [0] * n
    if tiers:
        for v, t in tiers.items():
            tier[v] = t
    placed = [False] * n
    count = [0] * n
    order: list[int] = []

    def key(v: int):
        return (-tier[v], count[v] == degree[v], count[v], degree[v], -v)

    for _ in range(n):
        best = -1
        for v in range(n):
            if placed[v]:
                continue
            if best < 0 or key(v) > key(best):
                best = v
        placed[best] = True
        order.append(best)
        for u in adj[best]:
            count[u] += 1
    return order


class _Engine:
    """One exhaustive search over labelings with per-vertex finite domains.

    extra_sum adds a constant to a vertex's neighbor sum (the boundary model
    for gadget certification); vertices in `unchecked` have host-dependent
    sums, so edges touching them are not constrained here.
    """

    def __init__(
        self,
        g: Graph,
        domains: Sequence[Sequence[int]],
        budget: SearchBudget,
        *,
        propagate: bool = True,
        weight_cap: Optional[int] = None,
        min_sum: Optional[int] = None,
        distinct_cap: Optional[int] = None,
        extra_sum: Optional[Mapping[int, int]] = None,
        unchecked: Iterable[int] = (),
        tiers: Optional[Mapping[int, int]] = None,
        break_symmetry: bool = True,
    ):
        self.g = g
        n = g.n
        self.n = n
        self.adj = g.adjacency()
        self.domains = [tuple(sorted(set(d))) for d in domains]
        for v, d in enumerate(self.domains):
            if not d:
                raise GraphError(f"empty domain at vertex {v}")
        self.budget = budget
        self.propagate = propagate
        self.weight_cap = weight_cap
        self.min_sum = min_sum
        self.distinct_cap = distinct_cap
        self.checked = [v not in set(unchecked) for v in range(n)]
        self.order = _search_order(n, self.adj, tiers)
        self.pos = [0] * n
        for i, v in enumerate(self.order):
            self.pos[v] = i

        self.dmin = [d[0] for d in self.domains]
        self.dmax = [d[-1] for d in self.domains]
        ex = dict(extra_sum or {})
        self.label = [0] * n
        self.assigned = [False] * n
        self.asum = [ex.get(v, 0) for v in range(n)]
        self.pmin = [sum(self.dmin[u] for u in self.adj[v]) for v in range(n)]
        self.pmax = [sum(self.dmax[u] for u in self.adj[v]) for v in range(n)]
        self.nun = [len(self.adj[v]) for v in range(n)]
        self.future_min = sum(self.dmin)

        self.ones_mask = 0  # levels assigned above their domain minimum
        # boundary mass or unchecked status makes a vertex non-interchangeable
        twin_sig = [(self.domains[v], ex.get(v, 0), self.checked[v]) for v in range(n)]
        self.twin_prev = _twin_predecessors(n, self.adj, twin_sig, self.pos) \
            if break_symmetry else [None] * n
        # forced-pair weight bound: disjoint edges whose endpoints must jointly
        # exceed their domain minima by one.  Entries are [u, t, culprits, active].
        self.in_bonus = [-1] * n
        self.bonus_stack: list[list] = []
        self.bonus_total = 0
        self.nodes = 0
        self.deadline = None
        self.best_weight: Optional[int] = None
        self.best_labels: Optional[list[int]] = None
        self._minimize = False
        self._on_solution: Optional[Callable[[dict[int, int], list[int]], None]] = None
        self._stop_first = False
        self._found_first: Optional[list[int]] = None

    # -- interval plumbing --------------------------------------------------

    def _decided(self, v: int) -> bool:
        if self.propagate:
            return self.pmin[v] == self.pmax[v]
        return self.nun[v] == 0

    def _sum_of(self, v: int) -> int:
        return self.asum[v] + self.pmin[v]

    def _culprits(self, u: int, t: Optional[int] = None) -> int:
        """Bitmask of assignment levels a conflict at u (and t) depends on.

        The sums at u and t are functions of their assigned neighbors'
        labels plus constants (singleton domains, boundary mass), so the
        conflict persists until one of those neighbors is unassigned.
        """
        mask = 0
        pos = self.pos
        assigned = self.assigned
        for w in self.adj[u]:
            if assigned[w]:
                mask |= 1 << pos[w]
        if t is not None:
            for w in self.adj[t]:
                if assigned[w]:
                    mask |= 1 << pos[w]
        return mask

    def _conflict_after(self, v: int) -> Optional[int]:
        """Culprit bitmask for a constraint decided by assigning v, or None."""
        min_sum = self.min_sum
        for u in self.adj[v]:
            if not self.checked[u]:
                continue
            if min_sum is not None and self.asum[u] + self.pmax[u] < min_sum:
                return self._culprits(u)
            if self._decided(u):
                su = self.asum[u] + self.pmin[u]
                if min_sum is not None and su < min_sum:
                    return self._culprits(u)
                for t in self.adj[u]:
                    if self.checked[t] and self._decided(t) and self.asum[t] + self.pmin[t] == su:
                        return self._culprits(u, t)
        return None

    # -- forced-pair weight bound --------------------------------------------
    #
    # An edge (u, t), both unassigned, is a forced pair when every other
    # unassigned neighbor of either endpoint has a fixed domain and the two
    # neighbor sums at joint domain minima coincide: labeling both at their
    # minima would violate the edge, so every completion spends at least one
    # extra unit on the pair.  Because all of its surrounding flexibility is
    # frozen, the condition persists until u or t is assigned, making the
    # count a sound addition to the weight lower bound.

    def _pair_forced(self, u: int, t: int) -> bool:
        if self.pmax[u] - self.pmin[u] != self.dmax[t] - self.dmin[t]:
            return False
        if self.pmax[t] - self.pmin[t] != self.dmax[u] - self.dmin[u]:
            return False
        return self.asum[u] + self.pmin[u] == self.asum[t] + self.pmin[t]

    def _try_bonus(self, u: int, t: int) -> bool:
        if self._pair_forced(u, t):
            idx = len(self.bonus_stack)
            self.bonus_stack.append([u, t, self._culprits(u, t), True])
            self.in_bonus[u] = idx
            self.in_bonus[t] = idx
            self.bonus_total += 1
            return True
        return False

    def _scan_bonuses(self, v: int) -> int:
        """Detect pairs newly forced by assigning v; returns how many were added."""
        added = 0
        assigned = self.assigned
        in_bonus = self.in_bonus
        checked = self.checked
        for u in self.adj[v]:
            if assigned[u] or in_bonus[u] >= 0 or not checked[u]:
                continue
            for t in self.adj[u]:
                if t == v or assigned[t] or in_bonus[t] >= 0 or not checked[t]:
                    continue
                if self._try_bonus(u, t):
                    added += 1
                    break
        return added

    def _pop_bonuses(self, count: int) -> None:
        for _ in range(count):
            u, t, _c, _a = self.bonus_stack.pop()
            self.in_bonus[u] = -1
            self.in_bonus[t] = -1
            self.bonus_total -= 1

    def _bonus_culprits(self) -> int:
        mask = 0
        for u, t, culprits, active in self.bonus_stack:
            if active:
                mask |= culprits
        return mask

    def _initial_bonus_scan(self) -> None:
        for u, t in self.g.edges:
            if not (self.checked[u] and self.checked[t]):
                continue
            if self.in_bonus[u] < 0 and self.in_bonus[t] < 0:
                self._try_bonus(u, t)

    def _initial_conflict(self) -> bool:
        if self.min_sum is not None:
            for v in range(self.n):
                if self.checked[v] and self.asum[v] + self.pmax[v] < self.min_sum:
                    return True
        for u, v in self.g.edges:
            if not (self.checked[u] and self.checked[v]):
                continue
            if self._decided(u) and self._decided(v) and self._sum_of(u) == self._sum_of(v):
                return True
        return False

    # -- search -------------------------------------------------------------

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes % 2048 == 0 and time.monotonic() >= self.deadline:
            raise _BudgetExceeded

    def _dfs(self, depth: int, cur_weight: int, used: dict[int, int]) -> Optional[int]:
        """Search with conflict-directed backjumping.

        Returns None the moment a first-solution search succeeds; otherwise
        returns the bitmask of assignment levels (< depth) responsible for
        the subtree failing.  A child whose failure does not involve this
        level proves the remaining values here futile, so the failure is
        passed straight up.  Solutions found while enumerating or minimizing
        return a full mask, which degrades those passes to chronological
        backtracking and keeps them complete.
        """
        below = (1 << depth) - 1
        if depth == self.n:
            labels = list(self.label)
            if self._minimize:
                if self.best_weight is None or cur_weight < self.best_weight:
                    self.best_weight = cur_weight
                    self.best_labels = labels
                return below
            if self._on_solution is not None:
                sums = [self.asum[v] + self.pmin[v] for v in range(self.n)]
                self._on_solution({v: labels[v] for v in range(self.n)}, sums)
                return below
            self._found_first = labels
            return None
        v = self.order[depth]
        bit_d = 1 << depth
        adj_v = self.adj[v]
        dmin_v, dmax_v = self.dmin[v], self.dmax[v]
        base_future = self.future_min - dmin_v
        cap = self.weight_cap
        if self._minimize and self.best_weight is not None:
            b = self.best_weight - 1
            cap = b if cap is None else min(cap, b)
        conf = 0
        twin = self.twin_prev[v]
        bonus_v = self.in_bonus[v]
        bonus_v_active = bonus_v >= 0 and self.bonus_stack[bonus_v][3]
        for val in self.domains[v]:
            if twin is not None and val > self.label[twin]:
                conf |= 1 << self.pos[twin]
                break  # canonical orbit representative: twins carry non-increasing labels
            if cap is not None:
                # a value above the minimum discharges v's own forced pair
                eff_bonus = self.bonus_total
                if bonus_v_active and val > dmin_v:
                    eff_bonus -= 1
                if cur_weight + val + base_future + eff_bonus > cap:
                    # only levels labeled above their domain minimum, or the
                    # assignments that forced the active pairs, can lower this
                    conf |= (self.ones_mask | self._bonus_culprits()) & below
                    break  # values ascend, so every later value also blows the cap
            new_count = None
            if self.distinct_cap is not None:
                c = used.get(val, 0)
                if c == 0 and len(used) >= self.distinct_cap:
                    conf |= below
                    continue
                new_count = c + 1
            self._tick()
            self.label[v] = val
            self.assigned[v] = True
            if val > dmin_v:
                self.ones_mask |= bit_d
            self.future_min -= dmin_v
            if bonus_v_active:
                self.bonus_stack[bonus_v][3] = False
                self.bonus_total -= 1
            for u in adj_v:
                self.asum[u] += val
                self.pmin[u] -= dmin_v
                self.pmax[u] -= dmax_v
                self.nun[u] -= 1
            if new_count is not None:
                used[val] = new_count
            cmask = self._conflict_after(v)
            added_bonuses = 0
            if cmask is None:
                added_bonuses = self._scan_bonuses(v)
                if cap is not None and cur_weight + val + self.future_min + self.bonus_total > cap:
                    cmask = (self.ones_mask | self._bonus_culprits()) & ((1 << (depth + 1)) - 1)
            skip_rest = None
            if cmask is None:
                r = self._dfs(depth + 1, cur_weight + val, used)
                if r is None:
                    return None  # success; state intentionally left assigned
                if not r & bit_d:
                    skip_rest = r & below  # failure below is independent of v
                else:
                    conf |= r
            else:
                conf |= cmask
            if new_count is not None:
                if new_count == 1:
                    del used[val]
                else:
                    used[val] = new_count - 1
            self._pop_bonuses(added_bonuses)
            if bonus_v_active:
                self.bonus_stack[bonus_v][3] = True
                self.bonus_total += 1
            for u in adj_v:
                self.asum[u] -= val
                self.pmin[u] += dmin_v
                self.pmax[u] += dmax_v
                self.nun[u] += 1
            self.future_min += dmin_v
            self.assigned[v] = False
            self.ones_mask &= ~bit_d
            if skip_rest is not None:
                return skip_rest
        return conf & below

    def _run(self) -> str:
        self.deadline = time.monotonic() + self.budget.max_ms / 1000.0
        try:
            if self.weight_cap is not None and self.future_min > self.weight_cap:
                return "done"
            if self._initial_conflict():
                return "done"
            self._initial_bonus_scan()
            if self.weight_cap is not None and self.future_min + self.bonus_total > self.weight_cap:
                return "done"
            self._dfs(0, 0, {})
            return "done"
        except _BudgetExceeded:
            return "budget-exceeded"

    def first_solution(self) -> tuple[str, Optional[dict[int, int]]]:
        self._stop_first = True
        outcome = self._run()
        if self._found_first is not None:
            return "found", {v: self._found_first[v] for v in range(self.n)}
        if outcome == "budget-exceeded":
            return "budget-exceeded", None
        return "infeasible", None

    def minimize_weight(self) -> tuple[str, Optional[dict[int, int]], Optional[int]]:
        self._minimize = True
        outcome = self._run()
        if outcome == "budget-exceeded":
            # a budget cut with an incumbent is still not a proven optimum
            return "budget-exceeded", None, None
        if self.best_labels is None:
            return "infeasible", None, None
        return "found", {v: self.best_labels[v] for v in range(self.n)}, self.best_weight

    def enumerate_all(self, on_solution: Callable[[dict[int, int], list[int]], None]) -> str:
        self._on_solution = on_solution
        outcome = self._run()
        return "exhausted" if outcome == "done" else "budget-exceeded"


@dataclass(frozen=True)
class SearchProblem:
    """A labeling search instance for the shared engine."""

    graph: Graph
    domains: tuple[tuple[int, ...], ...]
    weight_cap: Optional[int] = None
    min_sum: Optional[int] = None
    distinct_cap: Optional[int] = None
    extra_sum: Optional[tuple[tuple[int, int], ...]] = None
    unchecked: frozenset[int] = frozenset()
    tiers: Optional[tuple[tuple[int, int], ...]] = None

    def _engine(self, budget: SearchBudget, propagate: bool,
                break_symmetry: bool = True) -> _Engine:
        return _Engine(
            self.graph,
            self.domains,
            budget,
            propagate=propagate,
            weight_cap=self.weight_cap,
            min_sum=self.min_sum,
            distinct_cap=self.distinct_cap,
            extra_sum=dict(self.extra_sum) if self.extra_sum else None,
            unchecked=self.unchecked,
            tiers=dict(self.tiers) if self.tiers else None,
            break_symmetry=break_symmetry,
        )


def uniform_domains(g: Graph, values: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    vals = tuple(sorted(set(values)))
    return tuple(vals for _ in range(g.n))


def first_solution(problem: SearchProblem, budget: SearchBudget, propagate: bool = True):
    eng = problem._engine(budget, propagate)
    status, sol = eng.first_solution()
    return status, sol, eng.nodes


def minimize_weight(problem: SearchProblem, budget: SearchBudget, propagate: bool = True):
    eng = problem._engine(budget, propagate)
    status, sol, w = eng.minimize_weight()
    return status, sol, w, eng.nodes


def enumerate_solutions(problem: SearchProblem, budget: SearchBudget, on_solution, propagate: bool = True):
    # enumeration must visit every solution, so symmetry breaking is off
    eng = problem._engine(budget, propagate, break_symmetry=False)
    outcome = eng.enumerate_all(on_solution)
    return outcome, eng.nodes


# ---------------------------------------------------------------------------
# Named solver operations.


def _require_nonempty(g: Graph):
    if g.n < 1:
        raise GraphError("solver requires a graph with at least one vertex")


def _finish(report: SolveReport, t0: float) -> SolveReport:
    report.elapsed_ms = (time.monotonic() - t0) * 1000.0
    return report


def _recheck(g: Graph, lab: Labeling, mode: str):
    bad = verify_additive(g, lab, mode=mode)
    if bad:
        raise AssertionError(f"solver produced a non-additive certificate: {bad[:3]}")


def solve_eta(g: Graph, budget: Optional[SearchBudget] = None, propagate: bool = True) -> SolveReport:
    """Additive number: least k so that labels {1..k} admit an additive labeling.

    Iterates k upward; each k is decided exhaustively before moving on, so a
    reported value carries a solver lower bound as well as a certificate.
    """
    _require_nonempty(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    spent = 0
    last_decided = 0
    k = 0
    while True:
        k += 1
        remaining = budget.max_nodes - spent
        remaining_ms = budget.max_ms - (time.monotonic() - t0) * 1000.0
        if remaining <= 0 or remaining_ms <= 0:
            return _finish(SolveReport("budget-exceeded", nodes_explored=spent,
                                       detail={"last_decided_k": last_decided}), t0)
        sub = SearchBudget(max_nodes=remaining, max_ms=remaining_ms)
        problem = SearchProblem(g, uniform_domains(g, range(1, k + 1)))
        status, sol, nodes = first_solution(problem, sub, propagate)
        spent += nodes
        if status == "budget-exceeded":
            return _finish(SolveReport("budget-exceeded", nodes_explored=spent,
                                       detail={"last_decided_k": last_decided}), t0)
        if status == "found":
            lab = Labeling(sol)
            _recheck(g, lab, "positive")
            return _finish(SolveReport("found", value=k, certificate=lab,
                                       nodes_explored=spent), t0)
        last_decided = k


def exists_binary(g: Graph, budget: Optional[SearchBudget] = None, propagate: bool = True,
                  weight_cap: Optional[int] = None,
                  tiers: Optional[Mapping[int, int]] = None) -> SolveReport:
    """Decide whether any (0,1)-additive labeling exists (optionally weight-capped).

    `tiers` is a deterministic assignment-priority hint (lower first), used
    by constructions whose repeated appendages would otherwise be
    interleaved with the skeleton they depend on.
    """
    _require_nonempty(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    problem = SearchProblem(g, uniform_domains(g, (0, 1)), weight_cap=weight_cap,
                            tiers=tuple(sorted(tiers.items())) if tiers else None)
    status, sol, nodes = first_solution(problem, budget, propagate)
    rep = SolveReport(status, nodes_explored=nodes)
    if status == "found":
        lab = Labeling(sol)
        _recheck(g, lab, "binary")
        rep.certificate = lab
        rep.value = sum(sol.values())
    if weight_cap is not None:
        rep.detail["weight_cap"] = weight_cap
    return _finish(rep, t0)


def solve_eta1(g: Graph, budget: Optional[SearchBudget] = None, propagate: bool = True) -> SolveReport:
    """Minimum total weight over (0,1)-additive labelings, by branch and bound."""
    _require_nonempty(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    problem = SearchProblem(g, uniform_domains(g, (0, 1)))
    status, sol, w, nodes = minimize_weight(problem, budget, propagate)
    rep = SolveReport(status, nodes_explored=nodes)
    if status == "found":
        lab = Labeling(sol)
        _recheck(g, lab, "binary")
        rep.certificate = lab
        rep.value = w
    return _finish(rep, t0)


def decide_list_additive(g: Graph, lists: ListAssignment,
                         budget: Optional[SearchBudget] = None, propagate: bool = True) -> SolveReport:
    """Decide whether an additive labeling exists with every label drawn from its list."""
    _require_nonempty(g)
    lists.validate_on(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    domains = tuple(tuple(sorted(lists[v])) for v in g.vertices())
    problem = SearchProblem(g, domains)
    status, sol, nodes = first_solution(problem, budget, propagate)
    rep = SolveReport(status, nodes_explored=nodes)
    if status == "found":
        lab = Labeling(sol)
        _recheck(g, lab, "any")
        rep.certificate = lab
        rep.value = lab.max_label()
    return _finish(rep, t0)


@dataclass
class RefutationResult:
    """Outcome of an adversarial-list refutation.

    status "refuted" certifies (by exhaustive search) that no additive
    labeling respects the lists, hence the additive choosability exceeds the
    largest list size.  status "beaten" carries the labeling that defeated
    the lists.
    """

    status: str  # "refuted" | "beaten" | "budget-exceeded"
    max_list_size: int
    eta_ell_lower_bound: Optional[int]
    labeling: Optional[Labeling]
    report: SolveReport

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "max_list_size": self.max_list_size,
            "eta_ell_lower_bound": self.eta_ell_lower_bound,
            "labeling": fileio.labeling_to_text(self.labeling) if self.labeling else None,
            "search": self.report.to_json_dict(),
        }


def refute_lists(g: Graph, lists: ListAssignment,
                 budget: Optional[SearchBudget] = None, propagate: bool = True) -> RefutationResult:
    """Certify that a list assignment defeats its list size, or fail with a labeling."""
    rep = decide_list_additive(g, lists, budget, propagate)
    k = lists.max_size()
    if rep.status == "infeasible":
        return RefutationResult("refuted", k, k + 1, None, rep)
    if rep.status == "found":
        return RefutationResult("beaten", k, None, rep.certificate, rep)
    return RefutationResult("budget-exceeded", k, None, None, rep)


def sigma_label_cap(g: Graph) -> int:
    """Label universe bound used by the sigma search: n * max_degree + 1.

    A heuristic cap, not a theorem; every report that relies on it says so.
    """
    return g.n * g.max_degree() + 1


def solve_sigma(g: Graph, budget: Optional[SearchBudget] = None, propagate: bool = True) -> SolveReport:
    """Minimum number of distinct labels over additive labelings.

    Labels are drawn from {1..n*maxdeg+1}; the cap is surfaced in the report
    detail because the problem statement does not bound it.
    """
    _require_nonempty(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    cap = sigma_label_cap(g)
    spent = 0
    for m in range(1, g.n + 1):
        remaining = budget.max_nodes - spent
        remaining_ms = budget.max_ms - (time.monotonic() - t0) * 1000.0
        if remaining <= 0 or remaining_ms <= 0:
            return _finish(SolveReport("budget-exceeded", nodes_explored=spent,
                                       detail={"label_universe_max": cap, "last_decided_m": m - 1}), t0)
        sub = SearchBudget(max_nodes=remaining, max_ms=remaining_ms)
        problem = SearchProblem(g, uniform_domains(g, range(1, cap + 1)), distinct_cap=m)
        status, sol, nodes = first_solution(problem, sub, propagate)
        spent += nodes
        if status == "budget-exceeded":
            return _finish(SolveReport("budget-exceeded", nodes_explored=spent,
                                       detail={"label_universe_max": cap, "last_decided_m": m - 1}), t0)
        if status == "found":
            lab = Labeling(sol)
            _recheck(g, lab, "positive")
            distinct = len(set(sol.values()))
            if distinct > m:
                raise AssertionError("distinct-label cap violated by search")
            return _finish(SolveReport("found", value=distinct, certificate=lab, nodes_explored=spent,
                                       detail={"label_universe_max": cap}), t0)
    return _finish(SolveReport("infeasible", nodes_explored=spent,
                               detail={"label_universe_max": cap}), t0)


def min_ptds(g: Graph, budget: Optional[SearchBudget] = None, propagate: bool = True) -> SolveReport:
    """Minimum proper total dominating set.

    Encoded as a minimum-weight (0,1)-additive labeling whose neighbor sums
    are additionally required to be >= 1 everywhere; the certificate is the
    indicator labeling of the set.
    """
    _require_nonempty(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    problem = SearchProblem(g, uniform_domains(g, (0, 1)), min_sum=1)
    status, sol, w, nodes = minimize_weight(problem, budget, propagate)
    rep = SolveReport(status, nodes_explored=nodes)
    if status == "found":
        lab = Labeling(sol)
        _recheck(g, lab, "binary")
        rep.certificate = lab
        rep.value = w
        rep.detail["set"] = sorted(v for v, x in sol.items() if x == 1)
    return _finish(rep, t0)


def complete_partial(
    g: Graph,
    fixed: Mapping[int, int],
    budget: Optional[SearchBudget] = None,
    *,
    values: Iterable[int] = (0, 1),
    weight_cap: Optional[int] = None,
    propagate: bool = True,
) -> SolveReport:
    """Extend a partial labeling to a full additive labeling, or prove it cannot extend.

    Fixed vertices keep their given label; free vertices range over `values`.
    """
    _require_nonempty(g)
    budget = budget or SearchBudget()
    t0 = time.monotonic()
    free = tuple(sorted(set(values)))
    domains = tuple((fixed[v],) if v in fixed else free for v in g.vertices())
    problem = SearchProblem(g, domains, weight_cap=weight_cap)
    status, sol, nodes = first_solution(problem, budget, propagate)
    rep = SolveReport(status, nodes_explored=nodes)
    if status == "found":
        lab = Labeling(sol)
        _recheck(g, lab, "any")
        rep.certificate = lab
        rep.value = sum(sol.values())
    return _finish(rep, t0)
