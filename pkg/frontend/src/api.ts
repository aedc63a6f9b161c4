/** Thin fetch client for the diagmut HTTP service. */

import type {
  Classification,
  DiagramDocument,
  HealthResponse,
  MutateResponse,
  OrbitResponse,
  ValidateResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(`service error ${status}: ${typeof detail === "string" ? detail : JSON.stringify(detail)}`);
    this.name = "ApiError";
  }
}

export type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  async health(): Promise<HealthResponse> {
    return this.request("GET", "/v1/health");
  }

  async validate(diagram: DiagramDocument): Promise<ValidateResponse> {
    return this.request("POST", "/v1/validate", { diagram });
  }

  async classify(diagram: DiagramDocument): Promise<Classification> {
    return this.request("POST", "/v1/classify", { diagram });
  }

  async mutate(diagram: DiagramDocument, vertex: string): Promise<MutateResponse> {
    return this.request("POST", "/v1/mutate", { diagram, vertex });
  }

  async orbit(
    diagram: DiagramDocument,
    limits?: { max_members?: number; max_steps?: number },
  ): Promise<OrbitResponse> {
    return this.request("POST", "/v1/orbit", { diagram, ...limits });
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    let payload: unknown = null;
    try {
      payload = await res.json();
    } catch {
      // non-JSON error body; keep null
    }
    if (!res.ok) {
      const detail =
        payload !== null && typeof payload === "object" && "detail" in payload
          ? (payload as { detail: unknown }).detail
          : payload;
      throw new ApiError(res.status, detail);
    }
    return payload as T;
  }
}
