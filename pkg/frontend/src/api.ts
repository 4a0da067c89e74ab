// Typed client for the session service. Move requests are queued FIFO per
// client so replies can never arrive out of order; every method resolves to
// the server's canonical JSON, parsed once and never re-derived.

import { CreateResponse, MoveResponse, ServerState } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, method: string, body?: unknown): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
  } catch (error) {
    throw new ApiError(0, `network failure: ${String(error)}`);
  }
  const text = await response.text();
  let parsed: unknown = null;
  if (text) {
    try {
      parsed = JSON.parse(text);
    } catch {
      throw new ApiError(response.status, "server sent malformed JSON");
    }
  }
  if (!response.ok) {
    const message =
      parsed && typeof parsed === "object" && "error" in parsed
        ? String((parsed as { error: unknown }).error)
        : `HTTP ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return parsed as T;
}

export class SessionClient {
  private queue: Promise<unknown> = Promise.resolve();

  constructor(public readonly baseUrl: string) {}

  private enqueue<T>(task: () => Promise<T>): Promise<T> {
    const next = this.queue.then(task, task);
    this.queue = next.catch(() => undefined); // keep the chain alive on errors
    return next;
  }

  createSession(body: {
    catalog?: string;
    basis?: unknown;
    n?: number;
    target?: string;
  }): Promise<CreateResponse> {
    return this.enqueue(() => request<CreateResponse>(`${this.baseUrl}/sessions`, "POST", body));
  }

  getState(sessionId: string): Promise<ServerState> {
    return this.enqueue(() =>
      request<ServerState>(`${this.baseUrl}/sessions/${sessionId}`, "GET"),
    );
  }

  applyMove(sessionId: string, token: string): Promise<MoveResponse> {
    return this.enqueue(() =>
      request<MoveResponse>(`${this.baseUrl}/sessions/${sessionId}/moves`, "POST", { token }),
    );
  }

  undo(sessionId: string): Promise<ServerState> {
    return this.enqueue(() =>
      request<ServerState>(`${this.baseUrl}/sessions/${sessionId}/undo`, "POST"),
    );
  }
}
