import type {
  FactInfo,
  Operator,
  PlaceSlot,
  SessionState,
} from "./types.js";

/** Error carrying the HTTP status and the server's machine-readable code. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function toJson<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "http_error";
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { code?: string; error?: string };
    if (body.code) code = body.code;
    if (body.error) message = body.error;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(response.status, code, message);
}

/** Thin typed client for the /api endpoints; base URL is configurable. */
export class DialogueClient {
  constructor(readonly baseUrl: string = "http://127.0.0.1:7878") {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async listFacts(): Promise<FactInfo[]> {
    return toJson(await fetch(this.url("/api/facts")));
  }

  async createSession(factIndex: number): Promise<SessionState> {
    return toJson(
      await fetch(this.url("/api/session"), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ fact: factIndex }),
      }),
    );
  }

  async getSession(sessionId: string): Promise<SessionState> {
    return toJson(await fetch(this.url(`/api/session/${sessionId}`)));
  }

  async ask(
    sessionId: string,
    operator: Operator,
    slot?: PlaceSlot,
  ): Promise<SessionState> {
    const body: { operator: Operator; slot?: PlaceSlot } = { operator };
    if (slot) body.slot = slot;
    return toJson(
      await fetch(this.url(`/api/session/${sessionId}/ask`), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }
}
