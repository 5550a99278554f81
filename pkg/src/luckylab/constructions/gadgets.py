"""Gadget constructions and their machine-checked contracts.

The source figures for these gadgets are unavailable, so each gadget is
reconstructed as the smallest edge set consistent with every neighbor-sum
identity its correctness argument states, then repaired where necessary and
certified exhaustively.  The edge sets written in the emitters below are
the canonical records of those reconstructions; `certify_gadget` replays
the certification at any time.

Certification model: the gadget's port may have external neighbors in a
host.  A boundary case fixes port labels and/or declares the total label
mass of external neighbors; edges whose endpoint sums depend on undeclared
host structure are excluded.  Solutions are enumerated by the exhaustive
solver, so a "certified" verdict quantifies over every binary labeling
consistent with the boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from ..graph import Graph, GraphError, build_graph
from ..solver import SearchBudget, SearchProblem, enumerate_solutions

DEFAULT_ENUM_CAP = 22


class GadgetBuilder:
    """Incremental graph assembly with stable ids and unique vertex names."""

    def __init__(self):
        self.names: list[str] = []
        self._index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()

    def add_vertex(self, name: str) -> int:
        if name in self._index:
            raise GraphError(f"duplicate vertex name {name!r}")
        vid = len(self.names)
        self.names.append(name)
        self._index[name] = vid
        return vid

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        self.edges.add((u, v) if u < v else (v, u))

    def __len__(self) -> int:
        return len(self.names)

    def build(self) -> Graph:
        return build_graph(len(self.names), sorted(self.edges),
                           {i: nm for i, nm in enumerate(self.names)})


# ---------------------------------------------------------------------------
# Emitters: the single source of truth for gadget shapes.  Reductions and the
# standalone gadget builders both go through these.


def emit_clause_gadget(b: GadgetBuilder, literal_ports: Sequence[int], prefix: str) -> dict[str, int]:
    """Five-cycle w1 w2 w4 w5 w3 with w1 joined to each distinct literal port.

    With all attached literals labeled 0 the cycle's sums reduce to the bare
    odd-cycle system, which has no binary additive labeling; any literal
    labeled 1 unlocks it.
    """
    w = {i: b.add_vertex(f"{prefix}.w{i}") for i in range(1, 6)}
    for a, c in ((1, 2), (2, 4), (4, 5), (5, 3), (3, 1)):
        b.add_edge(w[a], w[c])
    seen: set[int] = set()
    for port in literal_ports:
        if port not in seen:
            seen.add(port)
            b.add_edge(w[1], port)
    return {f"w{i}": w[i] for i in range(1, 6)}


def emit_variable_gadget(b: GadgetBuilder, var: str) -> dict[str, int]:
    """Ports for a variable and its negation, guarded so both cannot be 1.

    Five-cycle y1 y2 y4 y5 y3 plus y6 adjacent to y5 and to both ports: the
    cycle forces y6 = 1, and the case split on y5 rules out both ports being
    labeled 1.  The ports are deliberately not adjacent to each other (that
    edge would close a triangle through y6 and is never used by the
    both-ports-1 argument).  Five slack pendants per port keep the port sums
    tunable when a satisfying assignment is extended to a full labeling.
    """
    x = b.add_vertex(var)
    nx = b.add_vertex(f"!{var}")
    y = {i: b.add_vertex(f"{var}.y{i}") for i in range(1, 7)}
    for a, c in ((1, 2), (2, 4), (4, 5), (5, 3), (3, 1)):
        b.add_edge(y[a], y[c])
    b.add_edge(y[5], y[6])
    b.add_edge(y[6], x)
    b.add_edge(y[6], nx)
    for i in range(1, 6):
        b.add_edge(b.add_vertex(f"{var}.z{i}"), x)
    for i in range(6, 11):
        b.add_edge(b.add_vertex(f"{var}.z{i}"), nx)
    ports = {"x": x, "not_x": nx}
    ports.update({f"y{i}": y[i] for i in range(1, 7)})
    return ports


def emit_forced_one_core(b: GadgetBuilder, prefix: str) -> tuple[int, int]:
    """Triangle plus a pendant: the pendant is forced to 1, the attach vertex to 0.

    Returns (pendant id, attach id).  The attach vertex's sum is forced to 2.
    """
    a1 = b.add_vertex(f"{prefix}.a1")
    a2 = b.add_vertex(f"{prefix}.a2")
    a3 = b.add_vertex(f"{prefix}.a3")
    top = b.add_vertex(f"{prefix}.top")
    b.add_edge(a1, a2)
    b.add_edge(a1, a3)
    b.add_edge(a2, a3)
    b.add_edge(a3, top)
    return top, a3


def emit_forcing_unit(b: GadgetBuilder, prefix: str) -> dict[str, int]:
    """The port-zeroing unit: returns ids including 'w'; caller joins w to the port.

    Two triangle cores: the x-core forces w = 1 with its attach sum pinned to
    2, the y-core forces y4 = 1.  w's neighbors are exactly the x-attach
    (0), y4 (1) and the port, so the w/x3 edge forces the port label to 0
    and the sum at w to 1.  Two pendants on y4 lift its sum to 3, keeping
    the w/y4 and y3/y4 edges satisfiable.
    """
    w = b.add_vertex(f"{prefix}.w")
    x1 = b.add_vertex(f"{prefix}.x1")
    x2 = b.add_vertex(f"{prefix}.x2")
    x3 = b.add_vertex(f"{prefix}.x3")
    b.add_edge(x1, x2)
    b.add_edge(x1, x3)
    b.add_edge(x2, x3)
    b.add_edge(x3, w)
    y1 = b.add_vertex(f"{prefix}.y1")
    y2 = b.add_vertex(f"{prefix}.y2")
    y3 = b.add_vertex(f"{prefix}.y3")
    y4 = b.add_vertex(f"{prefix}.y4")
    b.add_edge(y1, y2)
    b.add_edge(y1, y3)
    b.add_edge(y2, y3)
    b.add_edge(y3, y4)
    b.add_edge(w, y4)
    q1 = b.add_vertex(f"{prefix}.q1")
    q2 = b.add_vertex(f"{prefix}.q2")
    b.add_edge(y4, q1)
    b.add_edge(y4, q2)
    return {"w": w, "x1": x1, "x2": x2, "x3": x3,
            "y1": y1, "y2": y2, "y3": y3, "y4": y4, "q1": q1, "q2": q2}


def emit_z_unit(b: GadgetBuilder, prefix: str) -> int:
    """A lightweight forced-one vertex (triangle core); returns the forced vertex."""
    top, _attach = emit_forced_one_core(b, prefix)
    return top


def emit_index_gadget(b: GadgetBuilder, j: int, prefix: str) -> int:
    """Port u with forced sum exactly j (given a forced-0 external neighbor).

    u is joined to one forcing unit, which pins u's own label to 0, and to
    j-1 forced-one vertices; together they contribute exactly j.
    """
    if j < 2:
        raise GraphError(f"index gadget needs j >= 2, got {j}")
    u = b.add_vertex(f"{prefix}.u{j}")
    unit = emit_forcing_unit(b, f"{prefix}.t")
    b.add_edge(u, unit["w"])
    for i in range(1, j):
        b.add_edge(u, emit_z_unit(b, f"{prefix}.z{i}"))
    return u


def emit_vertex_gadget(b: GadgetBuilder, v: int, lf: frozenset[int], s: int, prefix: str) -> dict:
    """Constrain an existing vertex v so its neighbor sum lands exactly in lf.

    One forcing unit pins v to 0 and contributes 1; an index gadget per
    excluded value forbids that sum; s pendants supply the adjustable mass.
    The first two pendants share an edge, which forces exactly one of them
    to 1 and caps the reachable sums at s (without it, all-ones pendants
    would overshoot every list).
    """
    if not lf:
        raise GraphError("list must be nonempty")
    if not lf <= set(range(2, s + 1)):
        raise GraphError(f"list {sorted(lf)} not contained in {{2..{s}}}")
    unit = emit_forcing_unit(b, f"{prefix}.t")
    b.add_edge(v, unit["w"])
    u_ports = {}
    for j in sorted(set(range(2, s + 1)) - lf):
        u_ports[j] = emit_index_gadget(b, j, f"{prefix}.i{j}")
        b.add_edge(v, u_ports[j])
    pendants = [b.add_vertex(f"{prefix}.f{i}") for i in range(1, s + 1)]
    for p in pendants:
        b.add_edge(v, p)
    b.add_edge(pendants[0], pendants[1])
    return {"w": unit["w"], "index_ports": u_ports, "pendants": pendants}


def emit_amplifier_gadget(b: GadgetBuilder, v: int, d: int, prefix: str) -> dict:
    """Attach the weight amplifier to an existing center vertex v.

    A triangle core (p1 p2 p3) forces v = 1 and p3 = 0.  Selectors p4 p5 p6
    hang on v and carry the color encoding; a shared stabilizer pendant r on
    the selectors keeps their sums clear of the pendant pairs.  Each pair
    (a_i, b_i) has a_i adjacent to all three selectors, so whenever the
    selector mass is 0 the pair edge forces a_i + b_i >= 1.
    """
    if d < 1:
        raise GraphError(f"amplifier needs d >= 1, got {d}")
    p = {}
    p[1] = b.add_vertex(f"{prefix}.p1")
    p[2] = b.add_vertex(f"{prefix}.p2")
    p[3] = b.add_vertex(f"{prefix}.p3")
    b.add_edge(p[1], p[2])
    b.add_edge(p[1], p[3])
    b.add_edge(p[2], p[3])
    b.add_edge(p[3], v)
    for i in (4, 5, 6):
        p[i] = b.add_vertex(f"{prefix}.p{i}")
        b.add_edge(v, p[i])
    r = b.add_vertex(f"{prefix}.r")
    for i in (4, 5, 6):
        b.add_edge(r, p[i])
    pairs = []
    for i in range(1, d + 1):
        ai = b.add_vertex(f"{prefix}.a{i}")
        bi = b.add_vertex(f"{prefix}.b{i}")
        b.add_edge(ai, bi)
        for sel in (4, 5, 6):
            b.add_edge(ai, p[sel])
        pairs.append((ai, bi))
    return {"p": p, "r": r, "pairs": pairs}


# ---------------------------------------------------------------------------
# Gadget instances and contracts.


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    ports: dict[str, int]
    kind: str  # "A" | "B" | "T" | "I" | "G" | "D"
    params: dict


@dataclass(frozen=True)
class BoundaryCase:
    """One boundary configuration to certify under.

    fixed: port name -> forced label.  extra: port name -> declared total
    label mass of external neighbors.  unknown_sums: ports whose own sums
    depend on undeclared host structure; their edges are not constrained.
    """

    name: str
    fixed: tuple[tuple[str, int], ...] = ()
    extra: tuple[tuple[str, int], ...] = ()
    unknown_sums: tuple[str, ...] = ()
    expect_feasible: bool = True


SolutionCheck = Callable[[GadgetInstance, BoundaryCase, dict[int, int], list[int]], Optional[str]]
AggregateCheck = Callable[[GadgetInstance, BoundaryCase, list[tuple[dict[int, int], list[int]]]], Optional[str]]


@dataclass(frozen=True)
class GadgetContract:
    """Decidable form of a gadget's correctness fact."""

    boundary_cases: Callable[[GadgetInstance], list[BoundaryCase]]
    solution_checks: tuple[tuple[str, SolutionCheck], ...] = ()
    aggregate_checks: tuple[tuple[str, AggregateCheck], ...] = ()


@dataclass
class CaseReport:
    name: str
    expect_feasible: bool
    solutions: int
    countermodels: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.countermodels


@dataclass
class CertificationReport:
    kind: str
    params: dict
    internal_size: int
    cases: list[CaseReport] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return all(c.ok for c in self.cases)

    def countermodels(self) -> list[str]:
        return [f"{c.name}: {m}" for c in self.cases for m in c.countermodels]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": {k: sorted(v) if isinstance(v, (set, frozenset)) else v
                       for k, v in self.params.items()},
            "internal_size": self.internal_size,
            "certified": self.certified,
            "cases": [
                {"name": c.name, "expect_feasible": c.expect_feasible,
                 "solutions": c.solutions, "countermodels": c.countermodels}
                for c in self.cases
            ],
        }


# -- contract definitions ----------------------------------------------------


def _a_cases(inst: GadgetInstance) -> list[BoundaryCase]:
    lits = sorted(nm for nm in inst.ports if nm.startswith("lit"))
    cases = []
    for bits in itertools.product((0, 1), repeat=len(lits)):
        cases.append(BoundaryCase(
            name="lit=" + "".join(map(str, bits)),
            fixed=tuple(zip(lits, bits)),
            unknown_sums=tuple(lits),
            expect_feasible=sum(bits) >= 1,
        ))
    return cases


def _b_cases(inst: GadgetInstance) -> list[BoundaryCase]:
    cases = []
    for bx, bn in itertools.product((0, 1), repeat=2):
        cases.append(BoundaryCase(
            name=f"x={bx},!x={bn}",
            fixed=(("x", bx), ("not_x", bn)),
            unknown_sums=("x", "not_x"),
            expect_feasible=not (bx == 1 and bn == 1),
        ))
    return cases


def _t_check_w(inst, case, labels, sums):
    w = inst.ports["w"]
    if labels[w] != 1:
        return f"w labeled {labels[w]}, expected forced 1"
    if sums[w] != 1:
        return f"sum at w is {sums[w]}, expected forced 1"
    return None


def _t_cases(inst: GadgetInstance) -> list[BoundaryCase]:
    return [
        BoundaryCase(name="port=0", fixed=(("v", 0),), unknown_sums=("v",), expect_feasible=True),
        BoundaryCase(name="port=1", fixed=(("v", 1),), unknown_sums=("v",), expect_feasible=False),
    ]


def _i_checks(inst, case, labels, sums):
    u = inst.ports["u"]
    j = inst.params["j"]
    ext = dict(case.extra).get("u", 0)
    if labels[u] != 0:
        return f"u labeled {labels[u]}, expected forced 0"
    if sums[u] != j + ext:
        return f"sum at u is {sums[u]}, expected exactly {j + ext}"
    return None


def _i_cases(inst: GadgetInstance) -> list[BoundaryCase]:
    return [
        BoundaryCase(name="external=0", extra=(("u", 0),), expect_feasible=True),
        BoundaryCase(name="external=1", extra=(("u", 1),), expect_feasible=True),
    ]


def _g_check(inst, case, labels, sums):
    v = inst.ports["v"]
    lf = inst.params["lf"]
    if labels[v] != 0:
        return f"port labeled {labels[v]}, expected forced 0"
    if sums[v] not in lf:
        return f"sum at port is {sums[v]}, outside the list {sorted(lf)}"
    return None


def _g_attainable(inst, case, solutions):
    v = inst.ports["v"]
    got = {sums[v] for _labels, sums in solutions}
    lf = set(inst.params["lf"])
    if got != lf:
        return f"port sums attained {sorted(got)}, list is {sorted(lf)}"
    return None


def _g_cases(inst: GadgetInstance) -> list[BoundaryCase]:
    # externals of the port are other gadget ports, all forced to 0 in a host
    return [BoundaryCase(name="externals-forced-0", extra=(("v", 0),), expect_feasible=True)]


def _d_check_forced(inst, case, labels, sums):
    v = inst.ports["v"]
    p3 = inst.ports["p3"]
    if labels[v] != 1:
        return f"center labeled {labels[v]}, expected forced 1"
    if labels[p3] != 0:
        return f"p3 labeled {labels[p3]}, expected forced 0"
    return None


def _d_check_sum_identity(inst, case, labels, sums):
    v = inst.ports["v"]
    sel = labels[inst.ports["p4"]] + labels[inst.ports["p5"]] + labels[inst.ports["p6"]]
    ext = dict(case.extra).get("v", 0)
    if sums[v] != ext + sel:
        return f"center sum {sums[v]} != externals {ext} + selectors {sel}"
    return None


def _d_check_pairs(inst, case, labels, sums):
    sel = labels[inst.ports["p4"]] + labels[inst.ports["p5"]] + labels[inst.ports["p6"]]
    if sel != 0:
        return None
    for i, (ai, bi) in enumerate(inst.params["pairs"], start=1):
        if labels[ai] + labels[bi] < 1:
            return f"selector mass 0 but pair {i} has weight 0"
    return None


def _d_cases(inst: GadgetInstance) -> list[BoundaryCase]:
    lo, hi = inst.params.get("ext_range", (0, 4))
    return [
        BoundaryCase(name=f"ext={s}", extra=(("v", s),), expect_feasible=True)
        for s in range(lo, hi + 1)
    ]


_CONTRACTS: dict[str, GadgetContract] = {
    "A": GadgetContract(_a_cases),
    "B": GadgetContract(_b_cases),
    "T": GadgetContract(_t_cases, solution_checks=(("w-forced", _t_check_w),)),
    "I": GadgetContract(_i_cases, solution_checks=(("u-forced-and-sum", _i_checks),)),
    "G": GadgetContract(_g_cases, solution_checks=(("port-sum-in-list", _g_check),),
                        aggregate_checks=(("list-attainable", _g_attainable),)),
    "D": GadgetContract(_d_cases, solution_checks=(
        ("center-forced", _d_check_forced),
        ("sum-identity", _d_check_sum_identity),
        ("pairs-forced-when-selectors-zero", _d_check_pairs),
    )),
}


class CertificationError(RuntimeError):
    """A gadget failed its contract at build time."""


def certify_gadget(instance: GadgetInstance, cap: int = DEFAULT_ENUM_CAP,
                   budget: Optional[SearchBudget] = None) -> CertificationReport:
    """Exhaustively check a gadget's contract under its boundary model.

    Enumerates every binary labeling of the non-fixed vertices per boundary
    case (complete backtracking search) and evaluates the contract on each;
    any countermodel is reported verbatim.
    """
    contract = _CONTRACTS.get(instance.kind)
    if contract is None:
        raise GraphError(f"no contract registered for gadget kind {instance.kind!r}")
    budget = budget or SearchBudget()
    g = instance.graph
    cases = contract.boundary_cases(instance)
    internal = g.n - (len(cases[0].fixed) if cases else 0)
    if internal > cap:
        raise GraphError(
            f"gadget has {internal} internal vertices, above the enumeration cap {cap}; "
            f"raise cap= to certify anyway")
    report = CertificationReport(instance.kind, dict(instance.params), internal)
    for case in cases:
        fixed = {instance.ports[nm]: val for nm, val in case.fixed}
        extra = {instance.ports[nm]: val for nm, val in case.extra}
        unchecked = frozenset(instance.ports[nm] for nm in case.unknown_sums)
        domains = tuple((fixed[v],) if v in fixed else (0, 1) for v in g.vertices())
        problem = SearchProblem(g, domains,
                                extra_sum=tuple(sorted(extra.items())) or None,
                                unchecked=unchecked)
        solutions: list[tuple[dict[int, int], list[int]]] = []

        def keep(labels, sums, _acc=solutions):
            _acc.append((labels, sums))

        outcome, _nodes = enumerate_solutions(problem, budget, keep)
        case_rep = CaseReport(case.name, case.expect_feasible, len(solutions))
        if outcome != "exhausted":
            case_rep.countermodels.append("search budget exhausted; certification incomplete")
        else:
            if case.expect_feasible and not solutions:
                case_rep.countermodels.append("expected a feasible labeling, none exists")
            if not case.expect_feasible and solutions:
                labels, _ = solutions[0]
                case_rep.countermodels.append(
                    "expected infeasible, found labeling "
                    + _render_labels(instance, labels))
            for check_name, fn in contract.solution_checks:
                for labels, sums in solutions:
                    err = fn(instance, case, labels, sums)
                    if err:
                        case_rep.countermodels.append(
                            f"{check_name}: {err} in " + _render_labels(instance, labels))
                        break
            for check_name, fn in contract.aggregate_checks:
                err = fn(instance, case, solutions)
                if err:
                    case_rep.countermodels.append(f"{check_name}: {err}")
        report.cases.append(case_rep)
    return report


def _render_labels(instance: GadgetInstance, labels: dict[int, int]) -> str:
    g = instance.graph
    ones = [g.name_of(v) for v in sorted(labels) if labels[v] == 1]
    return "{1-labeled: " + ", ".join(ones) + "}"


_CERT_CACHE: dict = {}


def _certified(instance: GadgetInstance, cap: int = DEFAULT_ENUM_CAP) -> GadgetInstance:
    key = (instance.kind, tuple(sorted(
        (k, tuple(sorted(v)) if isinstance(v, (set, frozenset)) else
         (tuple(v) if isinstance(v, list) else v))
        for k, v in instance.params.items() if k != "pairs")))
    if key not in _CERT_CACHE:
        internal = instance.graph.n
        if internal <= cap:
            rep = certify_gadget(instance, cap=cap)
            if not rep.certified:
                raise CertificationError(
                    f"gadget {instance.kind}{instance.params} failed its contract: "
                    + "; ".join(rep.countermodels()))
        _CERT_CACHE[key] = True
    return instance


# ---------------------------------------------------------------------------
# Standalone builders (ports included as stub vertices, certified on build
# whenever they fit under the enumeration cap).


def build_clause_gadget(literals: Sequence[str] = ("a", "b", "c")) -> GadgetInstance:
    """A(c)-style clause gadget over up to three (possibly repeated) literals."""
    if not (1 <= len(literals) <= 3):
        raise GraphError("a clause carries 1..3 literals")
    b = GadgetBuilder()
    distinct: list[str] = []
    for nm in literals:
        if nm not in distinct:
            distinct.append(nm)
    port_ids = {f"lit{i}": b.add_vertex(nm) for i, nm in enumerate(distinct)}
    emit_clause_gadget(b, list(port_ids.values()), "c")
    inst = GadgetInstance(b.build(), port_ids, "A", {"num_literals": len(distinct)})
    return _certified(inst)


def build_variable_gadget() -> GadgetInstance:
    """B(x)-style variable gadget with ports for the literal and its negation."""
    b = GadgetBuilder()
    ids = emit_variable_gadget(b, "x")
    inst = GadgetInstance(b.build(), {"x": ids["x"], "not_x": ids["not_x"]}, "B", {})
    return _certified(inst)


def build_forcing_gadget() -> GadgetInstance:
    """T(w)-style unit: forces its port to 0, its w to 1, and w's sum to 1."""
    b = GadgetBuilder()
    v = b.add_vertex("v")
    ids = emit_forcing_unit(b, "t")
    b.add_edge(v, ids["w"])
    ports = {"v": v, "w": ids["w"]}
    inst = GadgetInstance(b.build(), ports, "T", {})
    return _certified(inst)


def build_index_gadget(j: int) -> GadgetInstance:
    """I(j)-style unit: port u with sum pinned to j plus its external mass."""
    b = GadgetBuilder()
    u = emit_index_gadget(b, j, "i")
    inst = GadgetInstance(b.build(), {"u": u}, "I", {"j": j})
    return _certified(inst, cap=max(DEFAULT_ENUM_CAP, 7 + 4 * j))


def build_vertex_gadget(lf: Iterable[int], s: int) -> GadgetInstance:
    """G(v, L, s)-style unit: port whose neighbor sum is forced into the list."""
    lf = frozenset(lf)
    b = GadgetBuilder()
    v = b.add_vertex("v")
    emit_vertex_gadget(b, v, lf, s, "g")
    inst = GadgetInstance(b.build(), {"v": v}, "G", {"lf": lf, "s": s})
    return _certified(inst, cap=max(DEFAULT_ENUM_CAP, inst.graph.n))


def corrupted_variable_gadget() -> GadgetInstance:
    """A deliberately broken variable gadget (one cycle edge dropped).

    Negative control for the certification machinery: with the y5/y3 edge
    missing, the both-ports-1 boundary becomes satisfiable, so certification
    must emit a countermodel.
    """
    b = GadgetBuilder()
    ids = emit_variable_gadget(b, "x")
    g = b.build()
    drop = tuple(sorted((ids["y5"], ids["y3"])))
    edges = tuple(e for e in g.edges if e != drop)
    broken = build_graph(g.n, edges, dict(g.names))
    return GadgetInstance(broken, {"x": ids["x"], "not_x": ids["not_x"]}, "B", {"corrupted": True})


def gadget_certification_suite(cap: int = 40) -> list[tuple[str, CertificationReport]]:
    """The full desk-scale contract suite, one report per shipped gadget."""
    suite: list[tuple[str, CertificationReport]] = []
    suite.append(("A(c) three literals", certify_gadget(build_clause_gadget(), cap=cap)))
    suite.append(("A(c) collapsed literal", certify_gadget(build_clause_gadget(("x", "x", "x")), cap=cap)))
    suite.append(("B(x)", certify_gadget(build_variable_gadget(), cap=cap)))
    suite.append(("T(w)", certify_gadget(build_forcing_gadget(), cap=cap)))
    for j in (2, 3, 4):
        suite.append((f"I({j})", certify_gadget(build_index_gadget(j), cap=max(cap, 7 + 4 * j))))
    suite.append(("G(v,{2},3)", certify_gadget(build_vertex_gadget({2}, 3), cap=max(cap, 34))))
    for d in (1, 2, 3):
        suite.append((f"D(v) d={d}", certify_gadget(build_amplifier_gadget(d), cap=cap)))
    return suite


def build_amplifier_gadget(d: int) -> GadgetInstance:
    """D(v)-style amplifier around a center port.

    With the selector mass at 0 every pendant pair is forced to carry
    weight, which is what blows the weight of any labeling past d.
    """
    b = GadgetBuilder()
    v = b.add_vertex("v")
    ids = emit_amplifier_gadget(b, v, d, "d")
    ports = {"v": v, "r": ids["r"]}
    ports.update({f"p{i}": ids["p"][i] for i in range(1, 7)})
    inst = GadgetInstance(b.build(), ports, "D", {"d": d, "pairs": ids["pairs"]})
    if inst.graph.n <= DEFAULT_ENUM_CAP:
        rep = certify_gadget(inst)
        if not rep.certified:
            raise CertificationError(
                f"amplifier d={d} failed its contract: " + "; ".join(rep.countermodels()))
    return inst
