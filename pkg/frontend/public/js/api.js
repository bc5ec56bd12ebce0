export class ApiError extends Error {
    constructor(status, detail) {
        super(`HTTP ${status}: ${detail}`);
        this.status = status;
        this.detail = detail;
    }
}
async function request(url, init) {
    const response = await fetch(url, {
        headers: { "Content-Type": "application/json" },
        ...init,
    });
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
        const detail = typeof body === "object" && body !== null && "detail" in body
            ? String(body.detail)
            : response.statusText;
        throw new ApiError(response.status, detail);
    }
    return body;
}
/** Thin typed client for the teaching-session service. */
export class SessionClient {
    constructor(baseUrl, sessionId = null) {
        this.baseUrl = baseUrl;
        this.sessionId = sessionId;
    }
    async createSession(strategy = "full", mode = "human", seed) {
        const info = await request(`${this.baseUrl}/sessions`, {
            method: "POST",
            body: JSON.stringify({ strategy, mode, seed }),
        });
        this.sessionId = info.id;
        return info;
    }
    session() {
        if (this.sessionId === null) {
            throw new Error("no active session");
        }
        return this.sessionId;
    }
    step() {
        return request(`${this.baseUrl}/sessions/${this.session()}/step`, { method: "POST" });
    }
    sendFeedback(utterance) {
        return request(`${this.baseUrl}/sessions/${this.session()}/feedback`, { method: "POST", body: JSON.stringify({ utterance }) });
    }
    beliefs() {
        return request(`${this.baseUrl}/sessions/${this.session()}/beliefs`);
    }
    history() {
        return request(`${this.baseUrl}/sessions/${this.session()}/history`);
    }
}
