import type { AnalysisResponse, GraphJson } from "../src/types.js";

// Hand-written responses mirroring what the server returns for the bundled
// three compartment chain and its variants; trimmed to the fields the panels
// actually read.

export const parentGraph: GraphJson = {
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

export function baseResult(overrides: Partial<AnalysisResponse> = {}): AnalysisResponse {
  return {
    layout_hint: null,
    edits: [],
    structure: null,
    structure_effective: null,
    validation: { violations: [], checked_numerically: [] },
    transfer: null,
    invariants: null,
    renaming: {
      mode: "caps",
      pairs: [
        ["k01", "K01"],
        ["k12", "K12"],
        ["k21", "K21"],
        ["x10", "X10"],
        ["c1", "C1"],
        ["c3", "C3"],
      ],
    },
    equations: { total: 12, identically_zero: 0 },
    solution: {
      generic_dimension: 1,
      generic_count: null,
      free: ["X30"],
      seeds: [11, 23, 37],
      branches: [
        {
          assignments: [
            ["K01", "k01"],
            ["K12", "k12"],
            ["X10", "(c1*x10)/C3"],
          ],
          free: ["C3"],
        },
      ],
      certificates: ["C1*X10 - c1*x10", "C1*X20 - c1*x20"],
      symbolic_status: "ok",
      basis: [],
      indeterminate: false,
      disagreement: null,
      positivity: null,
    },
    classification: {
      verdict: "SU",
      generic_dimension: 1,
      generic_count: null,
      free_parameters: ["X30"],
      per_parameter: {
        k01: "unique",
        k12: "unique",
        x10: "free",
        c1: "free",
      },
      positivity: null,
    },
    graph: parentGraph,
    dot: null,
    report: null,
    ok: true,
    verdict: "SU",
    error: null,
    timings_ms: {},
    ...overrides,
  };
}

export function sgiResult(): AnalysisResponse {
  return baseResult({
    verdict: "SGI",
    edits: ["C[1][1]=1"],
    solution: {
      ...baseResult().solution!,
      generic_dimension: 0,
      generic_count: 1,
      free: [],
      branches: [{ assignments: [["K01", "k01"], ["K12", "k12"]], free: [] }],
      certificates: [],
    },
    classification: {
      verdict: "SGI",
      generic_dimension: 0,
      generic_count: 1,
      free_parameters: [],
      per_parameter: { k01: "unique", k12: "unique" },
      positivity: null,
    },
  });
}

export function timeoutResult(): AnalysisResponse {
  return baseResult({
    verdict: "unknown",
    solution: {
      ...baseResult().solution!,
      branches: [],
      certificates: [],
      symbolic_status: "timeout",
    },
    classification: null,
    ok: false,
  });
}

/** the c3 = 0 variant: y3 and its observation edge are gone from the graph */
export function droppedOutputResult(): AnalysisResponse {
  return baseResult({
    verdict: "SLI",
    edits: ["C[1][1]=1", "C[2][2]=1", "C[3][3]=0"],
    graph: {
      nodes: parentGraph.nodes.filter((n) => n.id !== "y3"),
      edges: parentGraph.edges.filter((e) => e.target !== "y3"),
    },
    classification: {
      verdict: "SLI",
      generic_dimension: 0,
      generic_count: 2,
      free_parameters: [],
      per_parameter: { k01: "finitely-many", k12: "unique" },
      positivity: null,
    },
  });
}
