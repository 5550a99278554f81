import random

import pytest

from luckylab import fileio
from luckylab.formula import make_formula
from luckylab.graph import GraphError, complete_graph, is_triangle_free, max_clique
from luckylab.labeling import make_lists, verify_additive, verify_from_lists
from luckylab.solver import exists_binary, solve_eta
from luckylab.constructions import (
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
    corrupted_variable_gadget,
    counterexample_graph,
    gadget_certification_suite,
    normalize_lists,
)


# -- families ---------------------------------------------------------------


def test_counterexample_k1_is_p3():
    g, lab, lists = counterexample_graph(1)
    assert g.n == 3 and g.m == 2
    assert lab.values == {0: 1, 1: 1, 2: 1}
    names = {g.name_of(v) for v in g.vertices()}
    assert names == {"x_1^1", "y_1^1", "t"}
    by_name = {g.name_of(v): v for v in g.vertices()}
    assert sorted(lists[by_name["x_1^1"]]) == [1]
    assert sorted(lists[by_name["y_1^1"]]) == [2]
    assert sorted(lists[by_name["t"]]) == [1]


def test_counterexample_k2_shape():
    g, lab, lists = counterexample_graph(2)
    assert g.n == 13
    assert g.m == 3 * 6 + 6  # three K4 copies plus the hub edges
    assert lab.max_label() == 2
    assert verify_additive(g, lab, mode="positive") == []
    # the shipped labeling is not drawn from the adversarial lists
    assert not verify_from_lists(lab, lists)
    assert all(len(lists[v]) == 3 for v in g.vertices())


def test_counterexample_shipped_labeling_verifies_up_to_k4():
    for k in range(1, 5):
        g, lab, lists = counterexample_graph(k)
        assert g.n == 2 * k * (2 * k - 1) + 1
        assert verify_additive(g, lab, mode="positive") == []
        assert lab.max_label() == k
        assert all(len(lists[v]) == 2 * k - 1 for v in g.vertices())


def test_counterexample_y_membership_fails_for_alpha_ge_beta():
    # y_b^a carries label b but its list starts at 1+a
    g, lab, lists = counterexample_graph(2)
    by_name = {g.name_of(v): v for v in g.vertices()}
    y11 = by_name["y_1^1"]
    assert lab[y11] == 1 and 1 not in lists[y11]


def test_counterexample_hub_neighbor_sum():
    g, lab, _lists = counterexample_graph(1)
    from luckylab.labeling import neighbor_sum

    by_name = {g.name_of(v): v for v in g.vertices()}
    # y's neighbors are its clique partner and the hub, both labeled 1
    assert neighbor_sum(g, lab, by_name["y_1^1"]) == 2


def test_clique_eta_one():
    g = clique_eta_one(3)
    assert g.n == 6
    assert sorted(g.degree(v) for v in range(3)) == [2, 3, 4]
    for n in range(1, 6):
        gg = clique_eta_one(n)
        assert gg.n == n * (n + 1) // 2
        assert max_clique(gg)[0] == n
    for n in range(1, 5):
        assert solve_eta(clique_eta_one(n)).value == 1


# -- gadget contracts ---------------------------------------------------------


def test_clause_gadget_contract():
    rep = certify_gadget(build_clause_gadget())
    assert rep.certified
    by_name = {c.name: c for c in rep.cases}
    assert by_name["lit=000"].solutions == 0
    assert by_name["lit=100"].solutions > 0


def test_clause_gadget_collapses_duplicates():
    inst = build_clause_gadget(("x", "x", "x"))
    assert inst.params["num_literals"] == 1
    assert certify_gadget(inst).certified


def test_variable_gadget_contract():
    rep = certify_gadget(build_variable_gadget())
    assert rep.certified
    by_name = {c.name: c for c in rep.cases}
    assert by_name["x=1,!x=1"].solutions == 0
    for nm in ("x=0,!x=0", "x=0,!x=1", "x=1,!x=0"):
        assert by_name[nm].solutions > 0


def test_forcing_gadget_contract():
    rep = certify_gadget(build_forcing_gadget())
    assert rep.certified
    by_name = {c.name: c for c in rep.cases}
    assert by_name["port=1"].solutions == 0
    assert by_name["port=0"].solutions > 0


def test_forcing_gadget_minimal_host():
    # the unit pins its port's sum away from 1, so a bare pendant port has no
    # labeling at all; one slack pendant on the port is the smallest viable host
    inst = build_forcing_gadget()
    assert exists_binary(inst.graph).status == "infeasible"
    from luckylab.graph import build_graph

    g = inst.graph
    host = build_graph(g.n + 1, list(g.edges) + [(inst.ports["v"], g.n)])
    rep = exists_binary(host)
    assert rep.status == "found"
    assert rep.certificate[inst.ports["v"]] == 0
    assert rep.certificate[inst.ports["w"]] == 1


def test_index_gadget_contract():
    for j in (2, 3, 4):
        rep = certify_gadget(build_index_gadget(j), cap=24)
        assert rep.certified, rep.countermodels()
    with pytest.raises(GraphError, match="j >= 2"):
        build_index_gadget(1)


def test_vertex_gadget_contract():
    assert certify_gadget(build_vertex_gadget({2, 3}, 3), cap=40).certified
    assert certify_gadget(build_vertex_gadget({2}, 3), cap=40).certified
    assert certify_gadget(build_vertex_gadget({3}, 3), cap=40).certified
    # nothing excluded means no index gadgets at all
    inst = build_vertex_gadget({2, 3}, 3)
    names = {inst.graph.name_of(v) for v in inst.graph.vertices()}
    assert not any(".u" in nm for nm in names)


def test_vertex_gadget_rejects_bad_lists():
    with pytest.raises(GraphError):
        build_vertex_gadget(set(), 3)
    with pytest.raises(GraphError):
        build_vertex_gadget({1, 2}, 3)


def test_amplifier_contract():
    for d in (1, 2, 3):
        rep = certify_gadget(build_amplifier_gadget(d), cap=30)
        assert rep.certified, rep.countermodels()


def test_amplifier_pair_weight_forced_when_selectors_zero():
    # minimum pendant-pair weight is d when the selector mass is 0
    inst = build_amplifier_gadget(3)
    from luckylab.solver import SearchProblem, enumerate_solutions, SearchBudget

    g = inst.graph
    fixed = {inst.ports[f"p{i}"]: 0 for i in (4, 5, 6)}
    domains = tuple((fixed[v],) if v in fixed else (0, 1) for v in g.vertices())
    best = [None]

    def keep(labels, sums):
        w = sum(labels[a] + labels[b] for a, b in inst.params["pairs"])
        if best[0] is None or w < best[0]:
            best[0] = w

    outcome, _ = enumerate_solutions(
        SearchProblem(g, domains, extra_sum=((inst.ports["v"], 0),)),
        SearchBudget(), keep)
    assert outcome == "exhausted"
    assert best[0] == 3


def test_corrupted_gadget_emits_countermodel():
    rep = certify_gadget(corrupted_variable_gadget())
    assert not rep.certified
    assert any("expected infeasible" in m for m in rep.countermodels())


def test_certification_cap():
    inst = build_vertex_gadget({2}, 3)
    with pytest.raises(GraphError, match="enumeration cap"):
        certify_gadget(inst, cap=22)


def test_suite_all_certified():
    for name, rep in gadget_certification_suite():
        assert rep.certified, (name, rep.countermodels())


# -- reductions ---------------------------------------------------------------


def test_sat_reduction_shape():
    phi = make_formula(3, [(1, 2, 3)])
    red = build_sat_reduction(phi)
    assert red.covers_all_vertices()
    assert is_triangle_free(red.graph)
    w1 = red.id_of("c0.w1")
    ports = {red.id_of("x1"), red.id_of("x2"), red.id_of("x3")}
    assert ports <= set(red.graph.neighbors(w1))


def test_sat_reduction_duplicate_literals_single_edge():
    phi = make_formula(1, [(1, 1, 1)])
    red = build_sat_reduction(phi)
    w1 = red.id_of("c0.w1")
    x = red.id_of("x1")
    assert red.graph.neighbors(w1).count(x) == 1
    # w1 keeps its two cycle neighbors plus the one collapsed literal edge
    assert red.graph.degree(w1) == 3


def test_sat_reduction_triangle_free_random():
    rng = random.Random(424242)
    for _ in range(100):
        nv = rng.randint(1, 4)
        clauses = [tuple(rng.choice([1, -1]) * rng.randint(1, nv)
                         for _ in range(rng.randint(1, 3)))
                   for _ in range(rng.randint(1, 4))]
        red = build_sat_reduction(make_formula(nv, clauses))
        assert is_triangle_free(red.graph)


def test_reduction_build_deterministic():
    phi = make_formula(2, [(1, -2), (2, 1)])
    a = fileio.graph_to_text(build_sat_reduction(phi).graph)
    b = fileio.graph_to_text(build_sat_reduction(phi).graph)
    assert a == b
    g, lab, lists = counterexample_graph(2)
    g2, lab2, lists2 = counterexample_graph(2)
    assert fileio.graph_to_text(g) == fileio.graph_to_text(g2)
    assert fileio.labeling_to_text(lab) == fileio.labeling_to_text(lab2)
    assert fileio.lists_to_text(lists) == fileio.lists_to_text(lists2)


def test_normalize_lists():
    lf, f = normalize_lists(make_lists({0: {3, 7}, 1: {7}}))
    assert f == {3: 2, 7: 3}
    assert sorted(lf[0]) == [2, 3] and sorted(lf[1]) == [3]
    lf, f = normalize_lists(make_lists({0: {2, 3, 4}}))
    assert f == {2: 2, 3: 3, 4: 4}


def test_listcolor_reduction_ports_inherit_adjacency():
    k2 = complete_graph(2)
    red = build_listcoloring_reduction(k2, make_lists({0: {1}, 1: {2}}))
    p0, p1 = red.params["ports"]
    assert red.graph.has_edge(p0, p1)
    assert red.covers_all_vertices()


def test_inapprox_reduction_shape():
    k2 = complete_graph(2)
    red = build_inapprox_reduction(k2, 1)
    assert red.graph.n == 20  # two 10-vertex amplifiers for d=1
    c0, c1 = red.params["centers"]
    assert red.graph.has_edge(c0, c1)
    assert red.covers_all_vertices()


def test_certification_counts_match_raw_enumeration():
    # the engine-backed enumeration against a direct scan of all labelings
    import itertools as it

    inst = build_clause_gadget()
    g = inst.graph
    ports = [inst.ports[f"lit{i}"] for i in range(3)]
    internals = [v for v in g.vertices() if v not in ports]
    for bits in it.product((0, 1), repeat=3):
        fixed = dict(zip(ports, bits))
        count = 0
        for vals in it.product((0, 1), repeat=len(internals)):
            labels = dict(fixed)
            labels.update(zip(internals, vals))
            sums = [sum(labels[u] for u in g.neighbors(v)) for v in g.vertices()]
            ok = all(sums[u] != sums[v] for u, v in g.edges
                     if u not in ports and v not in ports)
            count += ok
        rep = certify_gadget(inst)
        case = next(c for c in rep.cases if c.name == "lit=" + "".join(map(str, bits)))
        assert case.solutions == count, (bits, case.solutions, count)
