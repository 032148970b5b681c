import type { MutateResponse, SessionPayload } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = await res.json();
      detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body);
    } catch {
      /* keep statusText */
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class Client {
  constructor(public base: string) {}

  createSeed(cartan: string | { matrix: number[][] }, word: number[]): Promise<SessionPayload> {
    return request(this.base, "/api/seeds", {
      method: "POST",
      body: JSON.stringify({ cartan, word }),
    });
  }

  getSeed(id: string): Promise<SessionPayload> {
    return request(this.base, `/api/seeds/${id}`);
  }

  /** Raw body bytes of the session state, for byte-identity checks. */
  async getSeedRaw(id: string): Promise<string> {
    const res = await fetch(`${this.base}/api/seeds/${id}`);
    if (!res.ok) throw new ApiError(res.status, res.statusText);
    return await res.text();
  }

  mutate(id: string, k: number, dryRun = false): Promise<MutateResponse> {
    return request(this.base, `/api/seeds/${id}/mutate`, {
      method: "POST",
      body: JSON.stringify({ k, dry_run: dryRun }),
    });
  }

  undo(id: string): Promise<SessionPayload> {
    return request(this.base, `/api/seeds/${id}/undo`, { method: "POST" });
  }

  variables(id: string): Promise<{ variables: unknown[]; denominator_support: number[][] }> {
    return request(this.base, `/api/seeds/${id}/variables`);
  }
}
