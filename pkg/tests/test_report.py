from random import Random

from oracles import random_compartmental_spec
from structid.classify import classify
from structid.invariants import theta_prime_creation
from structid.report import build_graph, render_report
from structid.structures import DesignEdit, apply_edits


def edge_set(graph, kind):
    return {(e.source, e.target) for e in graph.edges if e.kind == kind}


def test_parent_graph_shape(case_specs):
    graph = build_graph(case_specs["parent"])
    node_ids = {nid for nid, _ in graph.nodes}
    assert {"x1", "x2", "x3", "env", "y1", "y2", "y3"} <= node_ids
    flows = edge_set(graph, "flow")
    assert ("x1", "x2") in flows and ("x2", "x1") in flows
    assert ("x2", "x3") in flows and ("x3", "x2") in flows
    assert ("x1", "x3") not in flows and ("x3", "x1") not in flows
    assert edge_set(graph, "outflow") == {("x1", "env")}
    assert edge_set(graph, "observation") == {
        ("x1", "y1"), ("x2", "y2"), ("x3", "y3"),
    }


def test_zero_gain_drops_observation(case_specs):
    spec = case_specs["parent"]
    edited = apply_edits(spec, [DesignEdit.parse("C[3][3]=0", spec.table)])
    graph = build_graph(edited)
    assert edge_set(graph, "observation") == {("x1", "y1"), ("x2", "y2")}
    assert all(nid != "y3" for nid, _ in graph.nodes)


def test_single_compartment_no_outflow():
    from structid.algebra import Poly, SymbolTable
    from structid.structures import make_structure

    table = SymbolTable(["k", "x0"])
    k, x0 = table.symbols()
    spec = make_structure(
        n=1, k=1,
        A=[[-Poly.var(k)]],
        C=[[Poly.one()]],
        x0=[Poly.var(x0)],
        theta=[k, x0],
        outflow_params=[Poly.zero()],
        compartmental=True,
        table=table,
    )
    graph = build_graph(spec)
    node_ids = {nid for nid, _ in graph.nodes}
    assert "env" not in node_ids
    assert edge_set(graph, "outflow") == set()
    assert edge_set(graph, "observation") == {("x1", "y1")}


def test_edges_match_sparsity_random():
    rng = Random(31)
    for _ in range(10):
        spec = random_compartmental_spec(rng)
        graph = build_graph(spec)
        flows = edge_set(graph, "flow")
        for i in range(spec.n):
            for j in range(spec.n):
                if i == j:
                    continue
                expected = not spec.A[i][j].is_zero()
                assert ((f"x{j + 1}", f"x{i + 1}") in flows) == expected
        outs = edge_set(graph, "outflow")
        for j in range(spec.n):
            expected = not spec.outflow_params[j].is_zero()
            assert ((f"x{j + 1}", "env") in outs) == expected
        obs = edge_set(graph, "observation")
        for i in range(spec.k):
            expected = any(not e.is_zero() for e in spec.C[i])
            assert any(t == f"y{i + 1}" for _, t in obs) == expected


def test_dot_output_well_formed(case_specs):
    dot = build_graph(case_specs["parent"]).to_dot()
    assert dot.startswith("digraph ")
    assert dot.count("{") == dot.count("}")
    assert 'label="k21"' in dot
    assert "x1 -> env" in dot


def test_graph_dict_structure(case_specs):
    d = build_graph(case_specs["parent"]).as_dict()
    assert set(d.keys()) == {"nodes", "edges"}
    assert all(set(e.keys()) == {"source", "target", "label", "kind"} for e in d["edges"])


def test_report_panels(case_specs, case_solutions):
    spec = case_specs["parent"]
    sol = case_solutions["parent"]
    renaming = theta_prime_creation(spec.theta, mode="caps")
    cls = classify(sol, renaming)
    graph = build_graph(spec)
    text = render_report(renaming, sol, cls, graph)
    assert "== parameters ==" in text
    assert "== solution ==" in text
    assert "== structure graph ==" in text
    assert "== verdict ==" in text
    assert "K01 = k01" in text
    assert "C1*X20 - c1*x20" in text
    assert text.rstrip().endswith("verdict: SU")


def test_report_deterministic(case_specs, case_solutions):
    spec = case_specs["sli"]
    sol = case_solutions["sli"]
    renaming = theta_prime_creation(spec.theta, mode="caps")
    cls = classify(sol, renaming)
    graph = build_graph(spec)
    assert render_report(renaming, sol, cls, graph) == render_report(
        renaming, sol, cls, graph
    )


def test_sgi_report_verdict_line(case_specs, case_solutions):
    spec = case_specs["sgi"]
    sol = case_solutions["sgi"]
    renaming = theta_prime_creation(spec.theta, mode="caps")
    cls = classify(sol, renaming)
    text = render_report(renaming, sol, cls, build_graph(spec))
    assert text.rstrip().endswith("verdict: SGI")
