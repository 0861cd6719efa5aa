import { ApiClient, ApiError, isAbortError } from "./api.js";
import { checkPolyText } from "./polytext.js";
import type { AnalysisResponse, ExampleInfo } from "./types.js";

// Holds everything the dashboard shows and decides when to talk to the
// server. Text edits are debounced; dropdowns and resets go out immediately.
// Responses from superseded requests are dropped, and starting a request
// aborts the previous one, so at most one is ever in flight.

export type FieldKey = string; // "C[1][1]" or "x0[2]"

export interface FieldState {
  key: FieldKey;
  label: string;
  baseline: string;
  text: string;
  error: string | null;
}

export interface DashboardState {
  example: ExampleInfo | null;
  fields: FieldState[];
  naming: "caps" | "underscore";
  layoutName: string;
  result: AnalysisResponse | null;
  inFlight: boolean;
  networkError: string | null;
}

export interface ControllerOptions {
  client: ApiClient;
  onChange: (state: DashboardState) => void;
  debounceMs?: number;
  symbolicTimeout?: number;
}

export class DashboardController {
  readonly state: DashboardState = {
    example: null,
    fields: [],
    naming: "caps",
    layoutName: "row",
    result: null,
    inFlight: false,
    networkError: null,
  };

  /** analyze calls actually issued; used by tests and the debug log */
  requestCount = 0;

  private client: ApiClient;
  private onChange: (state: DashboardState) => void;
  private debounceMs: number;
  private symbolicTimeout: number | undefined;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private aborter: AbortController | null = null;
  private token = 0;

  constructor(opts: ControllerOptions) {
    this.client = opts.client;
    this.onChange = opts.onChange;
    this.debounceMs = opts.debounceMs ?? 300;
    this.symbolicTimeout = opts.symbolicTimeout;
  }

  private notify(): void {
    this.onChange(this.state);
  }

  loadExample(example: ExampleInfo): void {
    const s = example.structure;
    const fields: FieldState[] = [];
    const gains = Math.min(s.k, s.n);
    for (let i = 1; i <= gains; i++) {
      const baseline = s.C[i - 1][i - 1];
      fields.push({ key: `C[${i}][${i}]`, label: `c${i}`, baseline, text: baseline, error: null });
    }
    for (let i = 1; i <= s.n; i++) {
      const baseline = s.x0[i - 1];
      fields.push({ key: `x0[${i}]`, label: `x${i}(0)`, baseline, text: baseline, error: null });
    }
    this.state.example = example;
    this.state.fields = fields;
    this.state.result = null;
    this.state.networkError = null;
    this.schedule(0);
    this.notify();
  }

  setField(key: FieldKey, text: string): void {
    const field = this.state.fields.find((f) => f.key === key);
    if (!field) return;
    field.text = text;
    const check = checkPolyText(text);
    if (check.ok) {
      field.error = null;
      this.schedule(this.debounceMs);
    } else {
      field.error = check.message;
      // the newest edit is unusable, so anything already queued is stale
      this.cancelPending();
    }
    this.notify();
  }

  setNaming(mode: "caps" | "underscore"): void {
    if (this.state.naming === mode) return;
    this.state.naming = mode;
    this.schedule(0);
    this.notify();
  }

  setLayout(name: string): void {
    if (this.state.layoutName === name) return;
    this.state.layoutName = name;
    this.notify(); // layout is client-side; no request
  }

  resetFields(): void {
    for (const field of this.state.fields) {
      field.text = field.baseline;
      field.error = null;
    }
    this.schedule(0);
    this.notify();
  }

  retry(): void {
    this.state.networkError = null;
    this.schedule(0);
    this.notify();
  }

  currentEdits(): string[] {
    const edits: string[] = [];
    for (const field of this.state.fields) {
      const text = field.text.trim();
      if (text !== field.baseline.trim()) edits.push(`${field.key}=${text}`);
    }
    return edits;
  }

  private cancelPending(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private schedule(delay: number): void {
    this.cancelPending();
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire();
    }, delay);
  }

  private async fire(): Promise<void> {
    const example = this.state.example;
    if (!example) return;
    if (this.state.fields.some((f) => f.error !== null)) return;

    this.aborter?.abort();
    const aborter = new AbortController();
    this.aborter = aborter;
    const token = ++this.token;
    this.requestCount += 1;
    this.state.inFlight = true;
    this.notify();

    try {
      const result = await this.client.analyze(
        {
          structure: example.structure,
          edits: this.currentEdits(),
          naming_mode: this.state.naming,
          layout_hint: this.state.layoutName,
          ...(this.symbolicTimeout !== undefined ? { symbolic_timeout: this.symbolicTimeout } : {}),
        },
        aborter.signal,
      );
      if (token !== this.token) return; // a newer request superseded this one
      this.state.result = result;
      this.state.networkError = null;
      this.state.inFlight = false;
      this.notify();
    } catch (err) {
      if (isAbortError(err)) return;
      if (token !== this.token) return;
      this.state.inFlight = false;
      if (err instanceof ApiError && err.status === 400) {
        // the server rejected the input; keep the old result, surface the reason
        this.state.networkError = err.message;
      } else {
        this.state.networkError = err instanceof Error ? err.message : String(err);
      }
      this.notify();
    }
  }
}
