// Typed client for the galex HTTP API. Every lattice fact shown by the UI
// comes from these payloads; nothing is derived client-side.

export interface ConceptRecord {
  id: number;
  extent: string[];
  intent: string[];
  introduced_attributes: string[];
  introduced_objects: string[];
}

export interface ConceptDetail extends ConceptRecord {
  upper_covers: number[];
  lower_covers: number[];
  is_valid_configuration: boolean;
}

export interface LatticeExport {
  concepts: ConceptRecord[];
  covers: [number, number][];
  top: number;
  bottom: number;
}

export interface PosetExport {
  concepts: ConceptRecord[];
  covers: [number, number][];
  kind: string;
  min_extent: number | null;
}

export interface MoveCard {
  direction: "UP" | "DOWN";
  target: number;
  attributes_added: string[];
  attributes_removed: string[];
  objects_gained: string[];
  objects_lost: string[];
  target_is_valid_configuration: boolean;
}

export interface HistoryEntry {
  concept: number;
  via: "start" | "move" | "jump";
}

export interface SessionState {
  session_id: string;
  current: number;
  history: HistoryEntry[];
  concept: ConceptDetail;
  moves: MoveCard[];
}

export interface ReachableEntry {
  object: string;
  concept: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let code = "HttpError";
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { error?: string; detail?: string };
      code = body.error ?? code;
      detail = body.detail ?? detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, code, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    return asJson<T>(await fetch(this.base + path));
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    return asJson<T>(
      await fetch(this.base + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }

  lattice(): Promise<LatticeExport> {
    return this.get("/api/lattice");
  }

  subhierarchy(kind: string): Promise<PosetExport> {
    return this.get(`/api/subhierarchy?kind=${encodeURIComponent(kind)}`);
  }

  createSession(at?: number): Promise<SessionState> {
    return this.post("/api/sessions", at === undefined ? {} : { at });
  }

  session(id: string): Promise<SessionState> {
    return this.get(`/api/sessions/${encodeURIComponent(id)}`);
  }

  move(id: string, target: number): Promise<SessionState> {
    return this.post(`/api/sessions/${encodeURIComponent(id)}/move`, { target });
  }

  jump(id: string, target: number): Promise<SessionState> {
    return this.post(`/api/sessions/${encodeURIComponent(id)}/jump`, { target });
  }

  async reachable(id: string): Promise<ReachableEntry[]> {
    const data = await this.get<{ reachable: ReachableEntry[] }>(
      `/api/sessions/${encodeURIComponent(id)}/reachable`,
    );
    return data.reachable;
  }
}
