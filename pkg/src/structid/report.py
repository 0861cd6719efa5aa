"""Presentation: the structure as a directed graph, and a four panel
text report (parameter pairs, solution, graph, verdict).

Everything here is deterministic for a fixed analysis: node and edge
order follow the structure row by row, and the verdict panel always
ends the report, its last line being exactly "verdict: <V>".
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import format_poly, format_ratfunc
from .classify import Classification
from .invariants import ParameterRenaming
from .solver import SolutionSet
from .structures import StructureSpec

_NODE_SHAPE = {"compartment": "circle", "output": "doublecircle", "sink": "point"}
_EDGE_STYLE = {"flow": "", "outflow": " style=dashed", "observation": " style=dotted"}


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    label: str
    kind: str  # flow | outflow | observation


@dataclass(frozen=True)
class CompartmentGraph:
    nodes: tuple[tuple[str, str], ...]  # (id, kind)
    edges: tuple[GraphEdge, ...]

    def to_dot(self) -> str:
        lines = ["digraph structure {", "  rankdir=LR;"]
        for node_id, kind in self.nodes:
            attrs = f"shape={_NODE_SHAPE[kind]}"
            if kind == "sink":
                attrs += ' label=""'
            else:
                attrs += f' label="{node_id}"'
            lines.append(f"  {node_id} [{attrs}];")
        for e in self.edges:
            lines.append(
                f'  {e.source} -> {e.target} [label="{e.label}"{_EDGE_STYLE[e.kind]}];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "nodes": [{"id": i, "kind": k} for i, k in self.nodes],
            "edges": [
                {
                    "source": e.source,
                    "target": e.target,
                    "label": e.label,
                    "kind": e.kind,
                }
                for e in self.edges
            ],
        }


def build_graph(spec: StructureSpec) -> CompartmentGraph:
    """Directed graph view: compartments, material flows (column j feeds
    row i through A[i][j]), outflows to an environment sink, and dotted
    observation edges into one output node per nonzero C row."""
    order = spec.symbol_order()

    def fmt(p) -> str:
        return format_poly(p, order)

    nodes: list[tuple[str, str]] = [
        (f"x{j + 1}", "compartment") for j in range(spec.n)
    ]
    edges: list[GraphEdge] = []
    for j in range(spec.n):
        for i in range(spec.n):
            if i == j:
                continue
            entry = spec.A[i][j]
            if not entry.is_zero():
                edges.append(GraphEdge(f"x{j + 1}", f"x{i + 1}", fmt(entry), "flow"))
    if any(not p.is_zero() for p in spec.outflow_params):
        nodes.append(("env", "sink"))
        for j, p in enumerate(spec.outflow_params):
            if not p.is_zero():
                edges.append(GraphEdge(f"x{j + 1}", "env", fmt(p), "outflow"))
    for i in range(spec.k):
        row = spec.C[i]
        if all(e.is_zero() for e in row):
            continue
        nodes.append((f"y{i + 1}", "output"))
        for j, entry in enumerate(row):
            if not entry.is_zero():
                edges.append(
                    GraphEdge(f"x{j + 1}", f"y{i + 1}", fmt(entry), "observation")
                )
    return CompartmentGraph(tuple(nodes), tuple(edges))


def _solution_lines(sol: SolutionSet) -> list[str]:
    lines = [f"status: {sol.symbolic_status}"]
    if sol.branches:
        for i, branch in enumerate(sol.branches, start=1):
            lines.append(f"branch {i}:")
            for sym, expr in branch.assignments:
                lines.append(f"  {sym.name} = {format_ratfunc(expr)}")
            if branch.free:
                lines.append(f"  free: {', '.join(s.name for s in branch.free)}")
    elif sol.symbolic_basis:
        lines.append("no explicit branches; basis relations:")
        for p in sol.symbolic_basis:
            lines.append(f"  {format_poly(p)} = 0")
    if sol.relation_certificates:
        lines.append("pinned products:")
        for cert in sol.relation_certificates:
            lines.append(f"  {format_poly(cert)} = 0")
    lines.append(f"generic dimension: {sol.generic_dimension}")
    if sol.generic_count is None:
        count_text = "infinitely many" if not sol.indeterminate else "indeterminate"
    else:
        count_text = str(sol.generic_count)
    lines.append(f"solutions at a generic point: {count_text}")
    if sol.free_unknowns:
        lines.append(f"free: {', '.join(s.name for s in sol.free_unknowns)}")
    return lines


def render_report(
    renaming: ParameterRenaming,
    sol: SolutionSet,
    cls: Classification,
    graph: CompartmentGraph,
) -> str:
    """Four panel text report; the final line is 'verdict: <V>'."""
    out: list[str] = []
    out.append("== parameters ==")
    width = max(len(t.name) for t in renaming.theta) if renaming.theta else 0
    for theta, prime in zip(renaming.theta, renaming.theta_prime):
        out.append(f"{theta.name:<{width}}  ->  {prime.name}")
    out.append(f"(naming mode: {renaming.mode})")
    out.append("")
    out.append("== solution ==")
    out.extend(_solution_lines(sol))
    out.append("")
    out.append("== structure graph ==")
    for e in graph.edges:
        arrow = "=>" if e.kind == "observation" else "->"
        out.append(f"{e.source} {arrow} {e.target}  [{e.label}]")
    if not graph.edges:
        out.append("(no edges)")
    out.append("")
    out.append("== verdict ==")
    for name, status in cls.per_parameter.items():
        out.append(f"{name}: {status}")
    if cls.positivity:
        out.append(f"positivity: {cls.positivity}")
    out.append(f"verdict: {cls.verdict}")
    return "\n".join(out) + "\n"
