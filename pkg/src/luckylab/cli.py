"""Batch command-line surface for the whole workbench.

Exit codes: 0 for success or agreement; 1 for infeasible, refuted or
disagreeing results (valid outcomes, distinguished in the JSON); 2 for
usage errors, malformed files, budget exhaustion or inconclusive checks.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from multiprocessing import Pool
from pathlib import Path

from . import bounds as bounds_mod
from . import fileio
from .constructions import (
    build_amplifier_gadget,
    build_clause_gadget,
    build_forcing_gadget,
    build_index_gadget,
    build_inapprox_reduction,
    build_listcoloring_reduction,
    build_sat_reduction,
    build_variable_gadget,
    build_vertex_gadget,
    certify_gadget,
    clique_eta_one,
    counterexample_graph,
    gadget_certification_suite,
)
from .formula import Cnf3Formula
from .graph import GraphError
from .labeling import LabelingError, verify_additive, verify_from_lists, verify_ptds, weight
from .oracles import (
    check_equivalence_listcolor,
    check_equivalence_sat,
    check_threshold_inapprox,
    exhaustive_small_formulas,
    random_formula,
    random_list_instance,
)
from .solver import (
    SearchBudget,
    decide_list_additive,
    exists_binary,
    min_ptds,
    refute_lists,
    solve_eta,
    solve_eta1,
    solve_sigma,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_ms=args.budget_ms)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=100_000_000)
    p.add_argument("--budget-ms", type=float, default=60_000.0)
    p.add_argument("--json", action="store_true", help="emit canonical JSON")


# ---------------------------------------------------------------------------
# solve


def cmd_solve(args) -> int:
    g = fileio.read_graph(args.graph)
    budget = _budget(args)
    propagate = not args.no_propagate
    if args.problem == "eta":
        rep = solve_eta(g, budget, propagate)
    elif args.problem == "eta1":
        rep = solve_eta1(g, budget, propagate)
    elif args.problem == "binary":
        rep = exists_binary(g, budget, propagate)
    elif args.problem == "sigma":
        rep = solve_sigma(g, budget, propagate)
    elif args.problem == "ptds":
        rep = min_ptds(g, budget, propagate)
    else:  # listdecide
        if not args.lists:
            print("listdecide requires --lists", file=sys.stderr)
            return EXIT_ERROR
        lists = fileio.read_lists(args.lists)
        rep = decide_list_additive(g, lists, budget, propagate)
    _emit(args, rep.to_json_dict(), f"{args.problem}: {rep.status}"
          + (f", value {rep.value}" if rep.value is not None else ""))
    if rep.status == "found":
        return EXIT_OK
    if rep.status == "infeasible":
        return EXIT_NEGATIVE
    return EXIT_ERROR


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    g = fileio.read_graph(args.graph)
    if args.what == "labeling":
        lab = fileio.read_labeling(args.labeling)
        violations = verify_additive(g, lab, mode=args.mode)
        payload = {
            "valid": not violations,
            "violations": [
                {"edge": list(v.edge), "sum_u": v.sum_u, "sum_v": v.sum_v}
                for v in violations
            ],
            "weight": weight(lab),
        }
        _emit(args, payload, "additive" if not violations
              else f"{len(violations)} violated edge(s), first {violations[0]}")
        return EXIT_OK if not violations else EXIT_NEGATIVE
    if args.what == "lists":
        lab = fileio.read_labeling(args.labeling)
        lists = fileio.read_lists(args.lists)
        ok = verify_from_lists(lab, lists)
        _emit(args, {"from_lists": ok}, "labels drawn from lists" if ok else "label outside its list")
        return EXIT_OK if ok else EXIT_NEGATIVE
    # ptds: the candidate set is given as an indicator labeling
    lab = fileio.read_labeling(args.labeling)
    dom = {v for v, x in lab.values.items() if x == 1}
    ok = verify_ptds(g, dom)
    _emit(args, {"proper_total_dominating": ok, "set": sorted(dom)},
          "proper total dominating set" if ok else "not a proper total dominating set")
    return EXIT_OK if ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# construct


def _write_outputs(prefix: str, graph, labeling=None, lists=None, provenance=None,
                   dot: bool = False) -> dict:
    paths = {}
    base = Path(prefix)
    fileio.write_graph(base.with_suffix(".col"), graph)
    paths["graph"] = str(base.with_suffix(".col"))
    if labeling is not None:
        fileio.write_labeling(base.with_suffix(".lab"), labeling)
        paths["labeling"] = str(base.with_suffix(".lab"))
    if lists is not None:
        fileio.write_lists(base.with_suffix(".lists"), lists)
        paths["lists"] = str(base.with_suffix(".lists"))
    if provenance is not None:
        side = base.with_suffix(".provenance.json")
        side.write_text(json.dumps({k: list(v) for k, v in provenance.items()}, sort_keys=True))
        paths["provenance"] = str(side)
    if dot:
        base.with_suffix(".dot").write_text(fileio.dot_export(graph))
        paths["dot"] = str(base.with_suffix(".dot"))
    return paths


def cmd_construct(args) -> int:
    budget = _budget(args)
    if args.kind == "counterexample":
        g, lab, lists = counterexample_graph(args.k)
        paths = _write_outputs(args.out, g, lab, lists, dot=args.dot)
        payload = {"n": g.n, "m": g.m, "k": args.k, "paths": paths}
        if args.verify:
            violations = verify_additive(g, lab, mode="positive")
            eta_rep = solve_eta(g, budget)
            refutation = refute_lists(g, lists, budget)
            payload["shipped_labeling_additive"] = not violations
            payload["shipped_max_label"] = lab.max_label()
            payload["eta"] = eta_rep.to_json_dict()
            payload["refutation"] = refutation.to_json_dict()
            ok = (not violations and lab.max_label() == args.k
                  and eta_rep.status == "found" and eta_rep.value == args.k
                  and refutation.status == "refuted")
            payload["verified"] = ok
            _emit(args, payload,
                  f"counterexample k={args.k}: n={g.n}, eta={eta_rep.value}, "
                  f"lists {refutation.status}, choosability > {refutation.max_list_size}"
                  + ("" if ok else "  [VERIFICATION FAILED]"))
            return EXIT_OK if ok else EXIT_ERROR
        _emit(args, payload, f"counterexample k={args.k}: n={g.n}, m={g.m} -> {paths['graph']}")
        return EXIT_OK
    if args.kind == "clique-example":
        g = clique_eta_one(args.n)
        paths = _write_outputs(args.out, g, dot=args.dot)
        _emit(args, {"n": g.n, "m": g.m, "paths": paths},
              f"clique example n={args.n}: {g.n} vertices -> {paths['graph']}")
        return EXIT_OK
    if args.kind == "gadget":
        builders = {
            "clause": lambda: build_clause_gadget(),
            "variable": build_variable_gadget,
            "forcing": build_forcing_gadget,
            "index": lambda: build_index_gadget(args.j),
            "vertex": lambda: build_vertex_gadget(set(int(x) for x in args.lf.split(",")), args.s),
            "amplifier": lambda: build_amplifier_gadget(args.d),
        }
        if args.gadget_kind not in builders:
            print(f"unknown gadget kind {args.gadget_kind!r}", file=sys.stderr)
            return EXIT_ERROR
        inst = builders[args.gadget_kind]()
        paths = _write_outputs(args.out, inst.graph, dot=args.dot)
        payload = {"kind": inst.kind, "n": inst.graph.n,
                   "ports": {k: v for k, v in inst.ports.items()}, "paths": paths}
        if args.verify:
            rep = certify_gadget(inst, cap=max(40, inst.graph.n))
            payload["certification"] = rep.to_json_dict()
            _emit(args, payload, f"gadget {args.gadget_kind}: n={inst.graph.n}, "
                  f"certified={rep.certified}")
            return EXIT_OK if rep.certified else EXIT_NEGATIVE
        _emit(args, payload, f"gadget {args.gadget_kind}: n={inst.graph.n} -> {paths['graph']}")
        return EXIT_OK
    if args.kind == "sat":
        num_vars, clauses = fileio.read_cnf(args.cnf)
        phi = Cnf3Formula(num_vars, tuple(clauses))
        red = build_sat_reduction(phi)
        paths = _write_outputs(args.out, red.graph, provenance=red.provenance, dot=args.dot)
        payload = {"n": red.graph.n, "m": red.graph.m, "paths": paths, "params": red.params}
        if args.check:
            verdict = check_equivalence_sat(phi, budget)
            payload["verdict"] = verdict.to_json_dict()
            _emit(args, payload, f"sat reduction: n={red.graph.n}, verdict {verdict.status}")
            return EXIT_OK if verdict.agree else (
                EXIT_NEGATIVE if verdict.status == "disagree" else EXIT_ERROR)
        _emit(args, payload, f"sat reduction: n={red.graph.n} -> {paths['graph']}")
        return EXIT_OK
    if args.kind == "inapprox":
        g = fileio.read_graph(args.graph)
        red = build_inapprox_reduction(g, args.d)
        paths = _write_outputs(args.out, red.graph, provenance=red.provenance, dot=args.dot)
        _emit(args, {"n": red.graph.n, "paths": paths, "d": args.d},
              f"amplifier graph: n={red.graph.n} -> {paths['graph']}")
        return EXIT_OK
    # listcolor
    g = fileio.read_graph(args.graph)
    lists = fileio.read_lists(args.lists)
    red = build_listcoloring_reduction(g, lists)
    paths = _write_outputs(args.out, red.graph, provenance=red.provenance, dot=args.dot)
    _emit(args, {"n": red.graph.n, "paths": paths, "s": red.params["s"]},
          f"list-coloring reduction: n={red.graph.n} -> {paths['graph']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# refute-lists / bounds


def cmd_refute_lists(args) -> int:
    g = fileio.read_graph(args.graph)
    lists = fileio.read_lists(args.lists)
    res = refute_lists(g, lists, _budget(args))
    _emit(args, res.to_json_dict(),
          {"refuted": f"lists refuted: additive choosability >= {res.eta_ell_lower_bound}",
           "beaten": "lists beaten: a labeling exists",
           "budget-exceeded": "budget exceeded before the search finished"}[res.status])
    return {"refuted": EXIT_OK, "beaten": EXIT_NEGATIVE, "budget-exceeded": EXIT_ERROR}[res.status]


def _bounds_payload(g) -> dict:
    rep = bounds_mod.bounds_report(g, SearchBudget(max_nodes=20_000_000, max_ms=10_000))
    payload = rep.to_json_dict()
    payload["edges"] = [list(e) for e in g.edges]
    return payload


def cmd_bounds(args) -> int:
    if args.random:
        if args.seed is None:
            print("--random sweeps require --seed", file=sys.stderr)
            return EXIT_ERROR
        rng = random.Random(args.seed)
        from .oracles import random_graph

        graphs = [random_graph(rng, 1, args.max_n) for _ in range(args.random)]
        payloads = _run_sweep(_bounds_payload, graphs, args.jobs)
        bad = 0
        for payload in payloads:
            if args.json:
                print(json.dumps(payload, sort_keys=True))
            if not all(payload["flags"].values()):
                bad += 1
        print(f"bounds sweep: {len(payloads)} graphs, {bad} flag violations",
              file=sys.stderr if args.json else sys.stdout)
        return EXIT_OK if bad == 0 else EXIT_NEGATIVE
    g = fileio.read_graph(args.graph)
    rep = bounds_mod.bounds_report(g, _budget(args))
    _emit(args, rep.to_json_dict(),
          f"n={rep.n} omega={rep.omega} chi={rep.chi} eta={rep.eta} eta1={rep.eta1} "
          f"sigma={rep.sigma} flags={'all hold' if rep.all_flags_hold() else rep.flags}")
    return EXIT_OK if rep.all_flags_hold() else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# check


def _sat_verdict_payload(phi: Cnf3Formula) -> dict:
    return check_equivalence_sat(phi).to_json_dict()


def _lc_verdict_payload(inst) -> dict:
    g, lists = inst
    return check_equivalence_listcolor(g, lists).to_json_dict()


def _solver_oracle_payload(g) -> dict:
    from .oracles import naive_eta, naive_eta1, naive_ptds, naive_sigma

    eta = solve_eta(g)
    eta1 = solve_eta1(g)
    sigma = solve_sigma(g)
    ptds = min_ptds(g)
    got = {
        "eta": eta.value,
        "eta1": eta1.value if eta1.status == "found" else None,
        "sigma": sigma.value,
        "ptds": ptds.value if ptds.status == "found" else None,
    }
    want = {
        "eta": naive_eta(g),
        "eta1": naive_eta1(g),
        "sigma": naive_sigma(g),
        "ptds": naive_ptds(g),
    }
    return {"edges": [list(e) for e in g.edges], "n": g.n,
            "solver": got, "oracle": want, "agree": got == want}


def _run_sweep(worker, instances, jobs: int) -> list[dict]:
    if jobs > 1:
        with Pool(jobs) as pool:
            return pool.map(worker, instances)
    return [worker(i) for i in instances]


def _summarize_verdicts(args, verdicts: list[dict], label: str) -> int:
    agree = sum(1 for v in verdicts if v["status"] == "agree")
    disagree = [v for v in verdicts if v["status"] == "disagree"]
    inconclusive = [v for v in verdicts if v["status"] == "inconclusive"]
    if args.json:
        for v in verdicts:
            print(json.dumps(v, sort_keys=True))
    print(f"{label}: {agree}/{len(verdicts)} agree, {len(disagree)} disagree, "
          f"{len(inconclusive)} inconclusive", file=sys.stderr if args.json else sys.stdout)
    if disagree:
        return EXIT_NEGATIVE
    if inconclusive:
        return EXIT_ERROR
    return EXIT_OK


def cmd_check(args) -> int:
    if args.target == "gadgets":
        suite = gadget_certification_suite()
        all_ok = True
        for name, rep in suite:
            line = {"gadget": name, **rep.to_json_dict()}
            if args.json:
                print(json.dumps(line, sort_keys=True))
            else:
                print(f"{name}: certified={rep.certified} "
                      f"({len(rep.cases)} boundary cases, n={rep.internal_size})")
            all_ok = all_ok and rep.certified
        return EXIT_OK if all_ok else EXIT_NEGATIVE

    if args.target == "solvers":
        if args.seed is None:
            print("--random sweeps require --seed", file=sys.stderr)
            return EXIT_ERROR
        from .oracles import random_graph

        rng = random.Random(args.seed)
        graphs = [random_graph(rng, 1, min(args.max_n, 6)) for _ in range(args.random or 200)]
        payloads = _run_sweep(_solver_oracle_payload, graphs, args.jobs)
        bad = sum(1 for p in payloads if not p["agree"])
        if args.json:
            for p in payloads:
                print(json.dumps(p, sort_keys=True))
        print(f"solver-oracle equivalence: {len(payloads) - bad}/{len(payloads)} agree",
              file=sys.stderr if args.json else sys.stdout)
        return EXIT_OK if bad == 0 else EXIT_NEGATIVE

    if args.target == "sat":
        if args.cnf:
            num_vars, clauses = fileio.read_cnf(args.cnf)
            verdict = check_equivalence_sat(Cnf3Formula(num_vars, tuple(clauses)), _budget(args))
            _emit(args, verdict.to_json_dict(), f"{verdict.instance}: {verdict.status}")
            return EXIT_OK if verdict.agree else (
                EXIT_NEGATIVE if verdict.status == "disagree" else EXIT_ERROR)
        instances: list[Cnf3Formula] = []
        if args.exhaustive:
            instances.extend(exhaustive_small_formulas(args.max_vars, args.max_clauses))
        if args.random:
            if args.seed is None:
                print("--random sweeps require --seed", file=sys.stderr)
                return EXIT_ERROR
            rng = random.Random(args.seed)
            instances.extend(random_formula(rng, args.vars, args.clauses)
                             for _ in range(args.random))
        if not instances:
            print("nothing to check: pass --cnf, --exhaustive or --random", file=sys.stderr)
            return EXIT_ERROR
        verdicts = _run_sweep(_sat_verdict_payload, instances, args.jobs)
        return _summarize_verdicts(args, verdicts, "sat equivalence")

    if args.target == "listcolor":
        if args.graph:
            g = fileio.read_graph(args.graph)
            lists = fileio.read_lists(args.lists)
            verdict = check_equivalence_listcolor(g, lists, _budget(args))
            _emit(args, verdict.to_json_dict(), f"{verdict.instance}: {verdict.status}")
            return EXIT_OK if verdict.agree else (
                EXIT_NEGATIVE if verdict.status == "disagree" else EXIT_ERROR)
        if not args.random:
            print("nothing to check: pass --graph/--lists or --random", file=sys.stderr)
            return EXIT_ERROR
        if args.seed is None:
            print("--random sweeps require --seed", file=sys.stderr)
            return EXIT_ERROR
        rng = random.Random(args.seed)
        instances = [random_list_instance(rng, args.max_n) for _ in range(args.random)]
        verdicts = _run_sweep(_lc_verdict_payload, instances, args.jobs)
        return _summarize_verdicts(args, verdicts, "list-coloring equivalence")

    if args.target == "inapprox":
        g = fileio.read_graph(args.graph)
        verdict = check_threshold_inapprox(g, args.d, _budget(args))
        _emit(args, verdict.to_json_dict(), f"{verdict.instance}: {verdict.status}")
        return EXIT_OK if verdict.agree else (
            EXIT_NEGATIVE if verdict.status == "disagree" else EXIT_ERROR)

    # all: the desk-scale battery in one shot
    if args.seed is None:
        print("check all requires --seed", file=sys.stderr)
        return EXIT_ERROR
    rc = EXIT_OK
    suite = gadget_certification_suite()
    ok = all(rep.certified for _name, rep in suite)
    print(f"gadget contracts: {'all certified' if ok else 'FAILURES'} ({len(suite)} gadgets)")
    rc = max(rc, EXIT_OK if ok else EXIT_NEGATIVE)
    instances = exhaustive_small_formulas(2, 2)
    rng = random.Random(args.seed)
    instances += [random_formula(rng, 3, 3) for _ in range(10)]
    verdicts = _run_sweep(_sat_verdict_payload, instances, args.jobs)
    rc = max(rc, _summarize_verdicts(args, verdicts, "sat equivalence"))
    rng = random.Random(args.seed)
    lc = [random_list_instance(rng, 3) for _ in range(8)]
    verdicts = _run_sweep(_lc_verdict_payload, lc, args.jobs)
    rc = max(rc, _summarize_verdicts(args, verdicts, "list-coloring equivalence"))
    from .graph import complete_graph
    for g, d in ((complete_graph(3), 16), (complete_graph(4), 21)):
        verdict = check_threshold_inapprox(g, d, _budget(args))
        print(f"threshold n={g.n} d={d}: {verdict.status}")
        rc = max(rc, EXIT_OK if verdict.agree else EXIT_ERROR)
    return rc


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="luckylab",
                                description="Workbench for additive (lucky) graph labelings")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="run an exact solver")
    ps.add_argument("problem", choices=["eta", "eta1", "binary", "sigma", "ptds", "listdecide"])
    ps.add_argument("--graph", required=True)
    ps.add_argument("--lists")
    ps.add_argument("--no-propagate", action="store_true")
    _add_budget_flags(ps)
    ps.set_defaults(func=cmd_solve)

    pv = sub.add_parser("verify", help="check a labeling, list membership or dominating set")
    pv.add_argument("what", choices=["labeling", "lists", "ptds"])
    pv.add_argument("--graph", required=True)
    pv.add_argument("--labeling", required=True)
    pv.add_argument("--lists")
    pv.add_argument("--mode", choices=["any", "positive", "binary"], default="any")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("construct", help="build a named family, gadget or reduction")
    pc.add_argument("kind", choices=["counterexample", "clique-example", "gadget",
                                     "sat", "inapprox", "listcolor"])
    pc.add_argument("--out", required=True, help="output path prefix")
    pc.add_argument("--k", type=int, default=1)
    pc.add_argument("--n", type=int, default=3)
    pc.add_argument("--d", type=int, default=1)
    pc.add_argument("--j", type=int, default=2)
    pc.add_argument("--s", type=int, default=3)
    pc.add_argument("--lf", default="2")
    pc.add_argument("--gadget-kind", choices=["clause", "variable", "forcing",
                                              "index", "vertex", "amplifier"])
    pc.add_argument("--cnf")
    pc.add_argument("--graph")
    pc.add_argument("--lists")
    pc.add_argument("--verify", action="store_true")
    pc.add_argument("--check", action="store_true")
    pc.add_argument("--dot", action="store_true")
    _add_budget_flags(pc)
    pc.set_defaults(func=cmd_construct)

    pr = sub.add_parser("refute-lists", help="certify that a list assignment defeats its size")
    pr.add_argument("--graph", required=True)
    pr.add_argument("--lists", required=True)
    _add_budget_flags(pr)
    pr.set_defaults(func=cmd_refute_lists)

    pb = sub.add_parser("bounds", help="compute exact values and check every bound")
    pb.add_argument("--graph")
    pb.add_argument("--random", type=int, default=0, help="sweep over seeded random graphs")
    pb.add_argument("--max-n", type=int, default=7)
    pb.add_argument("--seed", type=int)
    pb.add_argument("--jobs", type=int, default=1)
    _add_budget_flags(pb)
    pb.set_defaults(func=cmd_bounds)

    pk = sub.add_parser("check", help="run an equivalence harness or certification suite")
    pk.add_argument("target", choices=["sat", "listcolor", "inapprox", "gadgets", "solvers", "all"])
    pk.add_argument("--cnf")
    pk.add_argument("--graph")
    pk.add_argument("--lists")
    pk.add_argument("--d", type=int, default=16)
    pk.add_argument("--exhaustive", action="store_true")
    pk.add_argument("--max-vars", type=int, default=2)
    pk.add_argument("--max-clauses", type=int, default=2)
    pk.add_argument("--random", type=int, default=0)
    pk.add_argument("--vars", type=int, default=3)
    pk.add_argument("--clauses", type=int, default=3)
    pk.add_argument("--max-n", type=int, default=4)
    pk.add_argument("--seed", type=int)
    pk.add_argument("--jobs", type=int, default=1)
    _add_budget_flags(pk)
    pk.set_defaults(func=cmd_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (fileio.FileFormatError, GraphError, LabelingError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
