// Shapes of the JSON the analysis server produces. The UI never computes any
// of these values itself; it only lays them out.

export interface StructureJson {
  n: number;
  k: number;
  parameters: string[];
  A: string[][];
  C: string[][];
  x0: string[];
  outflow_params?: string[];
  compartmental?: boolean;
}

export interface ExampleInfo {
  id: string;
  title: string;
  structure: StructureJson;
  suggested_edits: string[];
}

export type NodeKind = "compartment" | "sink" | "output";
export type EdgeKind = "flow" | "outflow" | "observation";

export interface GraphNode {
  id: string;
  kind: NodeKind;
}

export interface GraphEdge {
  source: string;
  target: string;
  label: string;
  kind: EdgeKind;
}

export interface GraphJson {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface BranchJson {
  assignments: [string, string][];
  free: string[];
}

export interface SolutionJson {
  generic_dimension: number;
  generic_count: number | null;
  free: string[];
  seeds: number[];
  branches: BranchJson[];
  certificates: string[];
  symbolic_status: string;
  basis: string[];
  indeterminate: boolean;
  disagreement: string | null;
  positivity: { kept: number; total: number } | null;
}

export type Verdict = "SGI" | "SLI" | "SU" | "unknown";

export interface ClassificationJson {
  verdict: Verdict;
  generic_dimension: number | null;
  generic_count: number | null;
  free_parameters: string[];
  per_parameter: Record<string, string>;
  positivity: { kept: number; total: number } | null;
}

export interface AnalysisResponse {
  layout_hint: string | null;
  edits: string[];
  structure: StructureJson | null;
  structure_effective: StructureJson | null;
  validation: { violations: unknown[]; checked_numerically: unknown[] } | null;
  transfer: { canonical: boolean; entries: { num: string; den: string }[] } | null;
  invariants: {
    no_parameter_information: boolean;
    values: string[];
    origins: { entry: number; part: string; power: number }[];
  } | null;
  renaming: { mode: string; pairs: [string, string][] } | null;
  equations: { total: number; identically_zero: number } | null;
  solution: SolutionJson | null;
  classification: ClassificationJson | null;
  graph: GraphJson | null;
  dot: string | null;
  report: string | null;
  ok: boolean;
  verdict: Verdict;
  error: { stage: string; message: string } | null;
  timings_ms: Record<string, number>;
}

export interface AnalyzeRequestBody {
  structure: StructureJson | string;
  edits?: string[];
  canonical_form?: boolean;
  naming_mode?: "caps" | "underscore";
  seeds?: number[];
  positivity_filter?: boolean;
  symbolic_timeout?: number;
  layout_hint?: string;
}
