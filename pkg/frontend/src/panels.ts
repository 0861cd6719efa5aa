import { layoutByName, type TraceFn } from "./layout.js";
import type { AnalysisResponse, GraphEdge } from "./types.js";

// The four result panels. Everything shown here is read straight out of an
// AnalysisResponse; the only computation on this side is node placement.

const SVG_NS = "http://www.w3.org/2000/svg";

function h(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function missing(root: HTMLElement, what: string): void {
  root.appendChild(h("p", "panel-missing", `${what} unavailable for this run`));
}

export function renderParameters(root: HTMLElement, result: AnalysisResponse | null): void {
  root.replaceChildren();
  if (!result || !result.renaming) {
    missing(root, "parameter renaming");
    return;
  }
  const table = h("table", "pairs-table");
  const head = h("tr");
  head.appendChild(h("th", undefined, "θ"));
  head.appendChild(h("th", undefined, "θ′"));
  table.appendChild(head);
  for (const [theta, prime] of result.renaming.pairs) {
    const row = h("tr");
    row.appendChild(h("td", "sym", theta));
    row.appendChild(h("td", "sym", prime));
    table.appendChild(row);
  }
  root.appendChild(table);
}

export function renderSolution(root: HTMLElement, result: AnalysisResponse | null): void {
  root.replaceChildren();
  const sol = result?.solution;
  if (!result || !sol) {
    missing(root, "solution set");
    return;
  }
  if (sol.symbolic_status !== "ok") {
    root.appendChild(
      h("p", "panel-warning", `symbolic solve ${sol.symbolic_status}; showing generic results only`),
    );
  }
  const dims = h("p", "solution-summary");
  const count = sol.generic_count === null ? "–" : String(sol.generic_count);
  dims.textContent = `generic dimension ${sol.generic_dimension}, solution count ${count}`;
  root.appendChild(dims);

  sol.branches.forEach((branch, i) => {
    const box = h("div", "branch");
    box.appendChild(h("h4", undefined, sol.branches.length > 1 ? `branch ${i + 1}` : "solution"));
    const list = h("ul", "assignments");
    for (const [name, expr] of branch.assignments) {
      list.appendChild(h("li", "assignment", `${name} = ${expr}`));
    }
    for (const name of branch.free) {
      list.appendChild(h("li", "assignment free", `${name} free`));
    }
    box.appendChild(list);
    root.appendChild(box);
  });

  if (sol.certificates.length > 0) {
    const box = h("div", "certificates");
    box.appendChild(h("h4", undefined, "identified combinations (vanishing on all solutions)"));
    const list = h("ul");
    for (const cert of sol.certificates) list.appendChild(h("li", "certificate", cert));
    box.appendChild(list);
    root.appendChild(box);
  }

  if (sol.positivity) {
    root.appendChild(
      h("p", "positivity-note", `${sol.positivity.kept} of ${sol.positivity.total} branches satisfy non-negativity`),
    );
  }
}

interface EdgeGeometry {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  curved: boolean;
}

function nodeRadius(kind: string): number {
  if (kind === "compartment") return 24;
  if (kind === "sink") return 18;
  return 16;
}

export function renderDiagram(
  root: HTMLElement,
  result: AnalysisResponse | null,
  layoutName: string,
  trace?: TraceFn,
): void {
  root.replaceChildren();
  const graph = result?.graph;
  if (!result || !graph) {
    missing(root, "diagram");
    return;
  }
  const width = 560;
  const height = 380;
  const layout = layoutByName(layoutName);
  trace?.(`diagram: laying out ${graph.nodes.length} nodes with '${layout.name}'`);
  const pos = layout.compute(graph, width, height, trace);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "diagram");

  const defs = document.createElementNS(SVG_NS, "defs");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrow");
  marker.setAttribute("viewBox", "0 0 10 10");
  marker.setAttribute("refX", "9");
  marker.setAttribute("refY", "5");
  marker.setAttribute("markerWidth", "7");
  marker.setAttribute("markerHeight", "7");
  marker.setAttribute("orient", "auto-start-reverse");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
  marker.appendChild(tip);
  defs.appendChild(marker);
  svg.appendChild(defs);

  const kinds = new Map(graph.nodes.map((n) => [n.id, n.kind]));
  const pairSeen = new Set<string>();

  const geometry = (e: GraphEdge): EdgeGeometry | null => {
    const a = pos.get(e.source);
    const b = pos.get(e.target);
    if (!a || !b) return null;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const d = Math.hypot(dx, dy) || 1;
    const rs = nodeRadius(kinds.get(e.source) ?? "");
    const rt = nodeRadius(kinds.get(e.target) ?? "");
    const reverseKey = `${e.target}->${e.source}`;
    const curved = pairSeen.has(reverseKey);
    pairSeen.add(`${e.source}->${e.target}`);
    return {
      x1: a.x + (dx / d) * rs,
      y1: a.y + (dy / d) * rs,
      x2: b.x - (dx / d) * rt,
      y2: b.y - (dy / d) * rt,
      curved,
    };
  };

  for (const edge of graph.edges) {
    const g = geometry(edge);
    if (!g) continue;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `edge edge-${edge.kind}`);
    const mx = (g.x1 + g.x2) / 2;
    const my = (g.y1 + g.y2) / 2;
    // perpendicular offset separates the two directions of a reversible flow
    const dx = g.x2 - g.x1;
    const dy = g.y2 - g.y1;
    const d = Math.hypot(dx, dy) || 1;
    const off = g.curved ? 14 : 0;
    const cx = mx + (-dy / d) * off * 2;
    const cy = my + (dx / d) * off * 2;
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", `M ${g.x1.toFixed(1)} ${g.y1.toFixed(1)} Q ${cx.toFixed(1)} ${cy.toFixed(1)} ${g.x2.toFixed(1)} ${g.y2.toFixed(1)}`);
    path.setAttribute("marker-end", "url(#arrow)");
    group.appendChild(path);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(mx + ((-dy / d) * (off + 10))));
    label.setAttribute("y", String(my + ((dx / d) * (off + 10))));
    label.textContent = edge.label;
    group.appendChild(label);
    svg.appendChild(group);
  }

  for (const node of graph.nodes) {
    const p = pos.get(node.id);
    if (!p) continue;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `node node-${node.kind}`);
    group.setAttribute("data-node", node.id);
    if (node.kind === "sink") {
      const rect = document.createElementNS(SVG_NS, "rect");
      const r = nodeRadius(node.kind);
      rect.setAttribute("x", String(p.x - r));
      rect.setAttribute("y", String(p.y - r * 0.7));
      rect.setAttribute("width", String(2 * r));
      rect.setAttribute("height", String(1.4 * r));
      rect.setAttribute("rx", "6");
      group.appendChild(rect);
    } else {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(p.x));
      circle.setAttribute("cy", String(p.y));
      circle.setAttribute("r", String(nodeRadius(node.kind)));
      group.appendChild(circle);
    }
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.id;
    group.appendChild(label);
    svg.appendChild(group);
  }

  root.appendChild(svg);
}

const VERDICT_BLURB: Record<string, string> = {
  SGI: "every parameter is globally unique",
  SLI: "finitely many parameter sets are output-indistinguishable",
  SU: "a continuum of parameter sets is output-indistinguishable",
  unknown: "the analysis could not reach a verdict",
};

export function renderVerdict(root: HTMLElement, result: AnalysisResponse | null): void {
  root.replaceChildren();
  if (!result) {
    missing(root, "verdict");
    return;
  }
  const verdict = result.verdict;
  const banner = h("div", `verdict-banner verdict-${verdict.toLowerCase()}`);
  banner.appendChild(h("span", "verdict-name", verdict));
  banner.appendChild(h("span", "verdict-blurb", VERDICT_BLURB[verdict] ?? ""));
  root.appendChild(banner);

  const cls = result.classification;
  if (!cls) {
    missing(root, "per-parameter detail");
    return;
  }
  const facts: string[] = [];
  if (cls.generic_dimension !== null) facts.push(`dimension ${cls.generic_dimension}`);
  if (cls.generic_count !== null) facts.push(`count ${cls.generic_count}`);
  if (facts.length) root.appendChild(h("p", "verdict-facts", facts.join(", ")));

  const list = h("ul", "per-parameter");
  for (const [name, status] of Object.entries(cls.per_parameter)) {
    const item = h("li");
    item.appendChild(h("span", "param", name));
    item.appendChild(h("span", `status status-${status.replace(/[^a-z-]/g, "")}`, status));
    list.appendChild(item);
  }
  root.appendChild(list);
}
