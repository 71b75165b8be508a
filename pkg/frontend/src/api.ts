import type {
  AllocateDto,
  AttackDto,
  MetricsDto,
  NetworkDto,
  RiskDto,
  RoiPointDto,
  ScenarioDto,
  Tagged,
} from "./types.js";

export const VERSION_HEADER = "X-Snapshot-Version";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** The service answered with an error status. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly violations: string[] = [],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** The service could not be reached at all. */
export class OfflineError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "OfflineError";
  }
}

/**
 * Thin typed client over the service's JSON API.
 *
 * Every call resolves to the response body tagged with the snapshot
 * version from the X-Snapshot-Version header, so callers can refuse to
 * mix figures from different snapshots.
 */
export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  network(): Promise<Tagged<NetworkDto>> {
    return this.exchange("/network");
  }

  metrics(): Promise<Tagged<MetricsDto>> {
    return this.exchange("/metrics");
  }

  risk(): Promise<Tagged<RiskDto>> {
    return this.exchange("/risk");
  }

  allocate(budget: number, allocator: string): Promise<Tagged<AllocateDto>> {
    return this.exchange("/faulttree/allocate", { budget, allocator });
  }

  attack(scenario: ScenarioDto): Promise<Tagged<AttackDto>> {
    return this.exchange("/attack", { scenario });
  }

  roiCurve(budgets: number[], allocator: string): Promise<Tagged<RoiPointDto[]>> {
    const list = budgets.join(",");
    return this.exchange(`/roi-curve?budgets=${encodeURIComponent(list)}&allocator=${allocator}`);
  }

  private async exchange<T>(path: string, body?: unknown): Promise<Tagged<T>> {
    const init: RequestInit | undefined =
      body === undefined
        ? undefined
        : {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
          };
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (error) {
      throw new OfflineError(`service unreachable: ${String(error)}`);
    }
    const version = response.headers.get(VERSION_HEADER) ?? "";
    if (!response.ok) {
      let message = `request failed with status ${response.status}`;
      let violations: string[] = [];
      try {
        const doc = (await response.json()) as { error?: unknown; violations?: unknown };
        if (typeof doc.error === "string") message = doc.error;
        if (Array.isArray(doc.violations)) violations = doc.violations.map(String);
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(response.status, message, violations);
    }
    return { version, body: (await response.json()) as T };
  }
}
