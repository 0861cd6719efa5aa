import type { GraphJson, GraphNode } from "./types.js";

// Client-side placement of the diagram nodes. Every algorithm works from the
// graph topology alone; edge labels (the gains) are never read, so structures
// with zero gains lay out the same as any other.

export interface Point {
  x: number;
  y: number;
}

export type Positions = Map<string, Point>;

export type TraceFn = (line: string) => void;

export interface LayoutAlgorithm {
  name: string;
  describe: string;
  compute(graph: GraphJson, width: number, height: number, trace?: TraceFn): Positions;
}

const PAD = 48;

function byKind(graph: GraphJson, kind: GraphNode["kind"]): GraphNode[] {
  return graph.nodes.filter((n) => n.kind === kind);
}

/** Compartment each output node observes, and compartments feeding the sink. */
function attachments(graph: GraphJson): { outputSource: Map<string, string>; sinkSources: Map<string, string[]> } {
  const outputSource = new Map<string, string>();
  const sinkSources = new Map<string, string[]>();
  for (const e of graph.edges) {
    if (e.kind === "observation") outputSource.set(e.target, e.source);
    if (e.kind === "outflow") {
      const list = sinkSources.get(e.target) ?? [];
      list.push(e.source);
      sinkSources.set(e.target, list);
    }
  }
  return { outputSource, sinkSources };
}

function fitToBox(pos: Positions, width: number, height: number): void {
  if (pos.size === 0) return;
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const p of pos.values()) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const spanX = maxX - minX;
  const spanY = maxY - minY;
  const scaleX = spanX > 1e-9 ? (width - 2 * PAD) / spanX : 0;
  const scaleY = spanY > 1e-9 ? (height - 2 * PAD) / spanY : 0;
  for (const [id, p] of pos) {
    pos.set(id, {
      x: spanX > 1e-9 ? PAD + (p.x - minX) * scaleX : width / 2,
      y: spanY > 1e-9 ? PAD + (p.y - minY) * scaleY : height / 2,
    });
  }
}

/** Shift any output sharing a compartment sideways so labels stay readable. */
function placeOutputs(
  graph: GraphJson,
  pos: Positions,
  offset: (anchor: Point, slot: number) => Point,
): void {
  const { outputSource } = attachments(graph);
  const slots = new Map<string, number>();
  for (const node of byKind(graph, "output")) {
    const src = outputSource.get(node.id);
    const anchor = (src && pos.get(src)) || { x: 0, y: 0 };
    const slot = slots.get(src ?? "") ?? 0;
    slots.set(src ?? "", slot + 1);
    pos.set(node.id, offset(anchor, slot));
  }
}

const rowLayout: LayoutAlgorithm = {
  name: "row",
  describe: "compartments left to right, observations above, sink below",
  compute(graph, width, height, trace) {
    const pos: Positions = new Map();
    const comps = byKind(graph, "compartment");
    const step = comps.length > 1 ? 1 : 0;
    comps.forEach((node, i) => {
      pos.set(node.id, { x: i * (step || 1), y: 0 });
      trace?.(`row: ${node.id} in column ${i}`);
    });
    placeOutputs(graph, pos, (anchor, slot) => ({ x: anchor.x + slot * 0.35, y: anchor.y - 0.8 }));
    const { sinkSources } = attachments(graph);
    for (const node of byKind(graph, "sink")) {
      const sources = sinkSources.get(node.id) ?? [];
      const xs = sources.map((s) => pos.get(s)?.x ?? 0);
      const x = xs.length ? xs.reduce((a, b) => a + b, 0) / xs.length : 0;
      pos.set(node.id, { x, y: 0.8 });
      trace?.(`row: ${node.id} under ${sources.join(", ") || "nothing"}`);
    }
    fitToBox(pos, width, height);
    return pos;
  },
};

const circleLayout: LayoutAlgorithm = {
  name: "circle",
  describe: "compartments on a ring, observations outside, sink in the middle",
  compute(graph, width, height, trace) {
    const pos: Positions = new Map();
    const comps = byKind(graph, "compartment");
    comps.forEach((node, i) => {
      const angle = -Math.PI / 2 + (2 * Math.PI * i) / Math.max(comps.length, 1);
      pos.set(node.id, { x: Math.cos(angle), y: Math.sin(angle) });
      trace?.(`circle: ${node.id} at ${((angle * 180) / Math.PI).toFixed(0)} degrees`);
    });
    placeOutputs(graph, pos, (anchor, slot) => {
      const r = Math.hypot(anchor.x, anchor.y) || 1;
      const stretch = 1.55 + slot * 0.3;
      return { x: (anchor.x / r) * stretch, y: (anchor.y / r) * stretch };
    });
    for (const node of byKind(graph, "sink")) {
      pos.set(node.id, { x: 0, y: 0 });
      trace?.(`circle: ${node.id} at center`);
    }
    fitToBox(pos, width, height);
    return pos;
  },
};

const gridLayout: LayoutAlgorithm = {
  name: "grid",
  describe: "all nodes on a square grid in declaration order",
  compute(graph, width, height, trace) {
    const pos: Positions = new Map();
    const ordered = [
      ...byKind(graph, "compartment"),
      ...byKind(graph, "output"),
      ...byKind(graph, "sink"),
    ];
    const cols = Math.max(1, Math.ceil(Math.sqrt(ordered.length)));
    ordered.forEach((node, i) => {
      pos.set(node.id, { x: i % cols, y: Math.floor(i / cols) });
    });
    trace?.(`grid: ${ordered.length} nodes in ${cols} columns`);
    fitToBox(pos, width, height);
    return pos;
  },
};

const springLayout: LayoutAlgorithm = {
  name: "spring",
  describe: "force-directed from a fixed seed; safe for zero gains",
  compute(graph, width, height, trace) {
    const pos: Positions = new Map();
    const nodes = graph.nodes;
    nodes.forEach((node, i) => {
      const angle = (2 * Math.PI * i) / Math.max(nodes.length, 1);
      pos.set(node.id, { x: Math.cos(angle), y: Math.sin(angle) });
    });
    const k = 1.2 / Math.sqrt(Math.max(nodes.length, 1));
    const iterations = 200;
    let temperature = 0.25;
    for (let step = 0; step < iterations; step++) {
      const disp = new Map<string, Point>(nodes.map((n) => [n.id, { x: 0, y: 0 }]));
      for (let i = 0; i < nodes.length; i++) {
        for (let j = i + 1; j < nodes.length; j++) {
          const a = pos.get(nodes[i].id)!;
          const b = pos.get(nodes[j].id)!;
          let dx = a.x - b.x;
          let dy = a.y - b.y;
          let d = Math.hypot(dx, dy);
          if (d < 1e-9) {
            // coincident points repel along a direction fixed by index
            dx = 1e-3 * (i + 1);
            dy = 1e-3 * (j + 1);
            d = Math.hypot(dx, dy);
          }
          const force = (k * k) / d;
          const da = disp.get(nodes[i].id)!;
          const db = disp.get(nodes[j].id)!;
          da.x += (dx / d) * force;
          da.y += (dy / d) * force;
          db.x -= (dx / d) * force;
          db.y -= (dy / d) * force;
        }
      }
      for (const e of graph.edges) {
        const a = pos.get(e.source);
        const b = pos.get(e.target);
        if (!a || !b) continue;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d = Math.hypot(dx, dy) || 1e-9;
        const force = (d * d) / k;
        const da = disp.get(e.source)!;
        const db = disp.get(e.target)!;
        da.x -= (dx / d) * force;
        da.y -= (dy / d) * force;
        db.x += (dx / d) * force;
        db.y += (dy / d) * force;
      }
      let maxMove = 0;
      for (const node of nodes) {
        const p = pos.get(node.id)!;
        const d = disp.get(node.id)!;
        const len = Math.hypot(d.x, d.y);
        if (len > 1e-12) {
          const move = Math.min(len, temperature);
          p.x += (d.x / len) * move;
          p.y += (d.y / len) * move;
          maxMove = Math.max(maxMove, move);
        }
      }
      temperature *= 0.985;
      if (step % 50 === 0) trace?.(`spring: step ${step}, max move ${maxMove.toFixed(4)}`);
    }
    fitToBox(pos, width, height);
    return pos;
  },
};

export const LAYOUTS: LayoutAlgorithm[] = [rowLayout, circleLayout, gridLayout, springLayout];

export function layoutByName(name: string): LayoutAlgorithm {
  return LAYOUTS.find((l) => l.name === name) ?? LAYOUTS[0];
}
