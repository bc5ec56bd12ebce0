import type {
  BeliefsPayload,
  FeedbackResult,
  HistoryPayload,
  SessionInfo,
  StepPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail =
      typeof body === "object" && body !== null && "detail" in body
        ? String((body as { detail: unknown }).detail)
        : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

/** Thin typed client for the teaching-session service. */
export class SessionClient {
  constructor(
    private readonly baseUrl: string,
    public sessionId: string | null = null,
  ) {}

  async createSession(
    strategy = "full",
    mode: "simulated" | "human" = "human",
    seed?: number,
  ): Promise<SessionInfo> {
    const info = await request<SessionInfo>(`${this.baseUrl}/sessions`, {
      method: "POST",
      body: JSON.stringify({ strategy, mode, seed }),
    });
    this.sessionId = info.id;
    return info;
  }

  private session(): string {
    if (this.sessionId === null) {
      throw new Error("no active session");
    }
    return this.sessionId;
  }

  step(): Promise<StepPayload> {
    return request<StepPayload>(
      `${this.baseUrl}/sessions/${this.session()}/step`,
      { method: "POST" },
    );
  }

  sendFeedback(utterance: string): Promise<FeedbackResult> {
    return request<FeedbackResult>(
      `${this.baseUrl}/sessions/${this.session()}/feedback`,
      { method: "POST", body: JSON.stringify({ utterance }) },
    );
  }

  beliefs(): Promise<BeliefsPayload> {
    return request<BeliefsPayload>(
      `${this.baseUrl}/sessions/${this.session()}/beliefs`,
    );
  }

  history(): Promise<HistoryPayload> {
    return request<HistoryPayload>(
      `${this.baseUrl}/sessions/${this.session()}/history`,
    );
  }
}
