import type { AnalysisResponse, AnalyzeRequestBody, ExampleInfo } from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number | null = null) {
    super(message);
    this.name = "ApiError";
  }
}

export function isAbortError(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

type FetchFn = typeof fetch;

export class ApiClient {
  constructor(
    private base: string = "",
    private fetchFn: FetchFn = (...args) => globalThis.fetch(...args),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (err) {
      if (isAbortError(err)) throw err;
      throw new ApiError(`network error: ${err instanceof Error ? err.message : String(err)}`);
    }
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      // fall through; non-JSON bodies are reported by status below
    }
    if (!response.ok) {
      const detail =
        body && typeof body === "object" && "error" in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${response.status}`;
      throw new ApiError(detail, response.status);
    }
    return body;
  }

  async analyze(body: AnalyzeRequestBody, signal?: AbortSignal): Promise<AnalysisResponse> {
    const result = await this.request("/api/analyze", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    return result as AnalysisResponse;
  }

  async examples(): Promise<ExampleInfo[]> {
    const result = (await this.request("/api/examples")) as { examples: ExampleInfo[] };
    return result.examples;
  }

  async health(): Promise<{ status: string; version: string }> {
    return (await this.request("/api/health")) as { status: string; version: string };
  }
}
