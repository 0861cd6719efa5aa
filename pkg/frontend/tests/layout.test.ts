import { describe, expect, it } from "vitest";
import { LAYOUTS, layoutByName, type Positions } from "../src/layout.js";
import type { GraphJson } from "../src/types.js";

const parentGraph: GraphJson = {
  nodes: [
    { id: "x1", kind: "compartment" },
    { id: "x2", kind: "compartment" },
    { id: "x3", kind: "compartment" },
    { id: "env", kind: "sink" },
    { id: "y1", kind: "output" },
    { id: "y2", kind: "output" },
    { id: "y3", kind: "output" },
  ],
  edges: [
    { source: "x1", target: "x2", label: "k21", kind: "flow" },
    { source: "x2", target: "x1", label: "k12", kind: "flow" },
    { source: "x2", target: "x3", label: "k32", kind: "flow" },
    { source: "x3", target: "x2", label: "k23", kind: "flow" },
    { source: "x1", target: "env", label: "k01", kind: "outflow" },
    { source: "x1", target: "y1", label: "c1", kind: "observation" },
    { source: "x2", target: "y2", label: "c2", kind: "observation" },
    { source: "x3", target: "y3", label: "c3", kind: "observation" },
  ],
};

// every gain zeroed out; layouts must not care
const zeroGainGraph: GraphJson = {
  nodes: parentGraph.nodes,
  edges: parentGraph.edges.map((e) => ({ ...e, label: "0" })),
};

const singleNode: GraphJson = {
  nodes: [{ id: "x1", kind: "compartment" }],
  edges: [],
};

const W = 560;
const H = 380;

function assertWellFormed(pos: Positions, graph: GraphJson): void {
  expect(pos.size).toBe(graph.nodes.length);
  for (const node of graph.nodes) {
    const p = pos.get(node.id);
    expect(p, `missing position for ${node.id}`).toBeDefined();
    expect(Number.isFinite(p!.x)).toBe(true);
    expect(Number.isFinite(p!.y)).toBe(true);
    expect(p!.x).toBeGreaterThanOrEqual(0);
    expect(p!.x).toBeLessThanOrEqual(W);
    expect(p!.y).toBeGreaterThanOrEqual(0);
    expect(p!.y).toBeLessThanOrEqual(H);
  }
}

function minPairDistance(pos: Positions): number {
  const points = [...pos.values()];
  let best = Infinity;
  for (let i = 0; i < points.length; i++) {
    for (let j = i + 1; j < points.length; j++) {
      best = Math.min(best, Math.hypot(points[i].x - points[j].x, points[i].y - points[j].y));
    }
  }
  return best;
}

describe.each(LAYOUTS.map((l) => [l.name, l] as const))("%s layout", (_name, layout) => {
  it("places every node inside the box", () => {
    assertWellFormed(layout.compute(parentGraph, W, H), parentGraph);
  });

  it("keeps nodes apart", () => {
    const pos = layout.compute(parentGraph, W, H);
    expect(minPairDistance(pos)).toBeGreaterThan(8);
  });

  it("is unaffected by zero gains", () => {
    const a = layout.compute(parentGraph, W, H);
    const b = layout.compute(zeroGainGraph, W, H);
    for (const [id, p] of a) {
      expect(b.get(id)).toEqual(p);
    }
  });

  it("is deterministic", () => {
    const a = layout.compute(parentGraph, W, H);
    const b = layout.compute(parentGraph, W, H);
    expect([...b.entries()]).toEqual([...a.entries()]);
  });

  it("handles a single isolated node", () => {
    assertWellFormed(layout.compute(singleNode, W, H), singleNode);
  });
});

describe("layoutByName", () => {
  it("finds each algorithm by name", () => {
    for (const layout of LAYOUTS) {
      expect(layoutByName(layout.name)).toBe(layout);
    }
  });

  it("falls back to the first algorithm for unknown names", () => {
    expect(layoutByName("no-such-layout")).toBe(LAYOUTS[0]);
  });

  it("offers at least three distinct algorithms", () => {
    expect(new Set(LAYOUTS.map((l) => l.name)).size).toBeGreaterThanOrEqual(3);
  });
});

describe("trace output", () => {
  it("reports layout steps when a trace sink is given", () => {
    const lines: string[] = [];
    layoutByName("spring").compute(parentGraph, W, H, (line) => lines.push(line));
    expect(lines.length).toBeGreaterThan(0);
    expect(lines.some((l) => l.startsWith("spring:"))).toBe(true);
  });
});
