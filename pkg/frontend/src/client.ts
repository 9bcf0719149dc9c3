import type {
    Command,
    CommandResult,
    ErrorEnvelope,
    LoadResult,
    SessionInfo,
    StateDocument,
    TableDocument,
} from "./protocol.js";

export class ApiError extends Error {
    public readonly kind: string;
    public readonly status: number;
    public readonly expected?: number;

    public constructor(status: number, envelope: ErrorEnvelope) {
        super(envelope.message);
        this.name = "ApiError";
        this.kind = envelope.kind;
        this.status = status;
        this.expected = envelope.expected;
    }
}

async function readError(response: Response): Promise<ApiError> {
    let envelope: ErrorEnvelope = { kind: "http_error", message: response.statusText };
    try {
        const body = await response.json();
        if (body && typeof body === "object" && "error" in body) {
            envelope = (body as { error: ErrorEnvelope }).error;
        } else if (body && typeof body === "object" && "detail" in body) {
            // FastAPI validation errors (422) come in this shape instead.
            envelope = { kind: "validation_error", message: JSON.stringify(body.detail) };
        }
    } catch {
        // Non-JSON error body; keep the status text.
    }
    return new ApiError(response.status, envelope);
}

// Thin typed wrapper over the REST interface.
//
// Commands are funnelled through a single promise chain so their sequence
// numbers hit the server strictly in order even when callers fire several
// without awaiting. If the counter ever drifts (say, after a resend), the
// out_of_order answer tells us the expected value and we retry once.
export class GateboardClient {
    private readonly base: string;
    private session: string | null = null;
    private seq = 0;
    private chain: Promise<unknown> = Promise.resolve();

    public constructor(base = "") {
        this.base = base.replace(/\/$/, "");
    }

    public get sessionId(): string | null {
        return this.session;
    }

    public async open(): Promise<SessionInfo> {
        const info = await this.request<SessionInfo>("POST", "/session");
        this.session = info.session;
        this.seq = info.seq;
        return info;
    }

    public send(command: Command): Promise<CommandResult> {
        const result = this.chain.then(() => this.dispatch(command));
        // Keep the chain alive past failures; the caller still sees them.
        this.chain = result.catch(() => undefined);
        return result;
    }

    // Resolves when every command queued so far has been answered.
    public async settled(): Promise<void> {
        let tail;
        do {
            tail = this.chain;
            await tail.catch(() => undefined);
        } while (tail !== this.chain);
    }

    public async state(): Promise<SessionInfo> {
        return this.request<SessionInfo>("GET", `/session/${this.need()}/state`);
    }

    public async circuitText(): Promise<string> {
        const response = await fetch(`${this.base}/session/${this.need()}/circuit`);
        if (!response.ok) {
            throw await readError(response);
        }
        return response.text();
    }

    public async loadCircuitText(text: string): Promise<LoadResult> {
        const response = await fetch(`${this.base}/session/${this.need()}/circuit`, {
            method: "PUT",
            headers: { "content-type": "text/plain; charset=utf-8" },
            body: text,
        });
        if (!response.ok) {
            throw await readError(response);
        }
        return (await response.json()) as LoadResult;
    }

    public async saveNamed(name: string): Promise<void> {
        await this.request("POST", `/session/${this.need()}/circuit/save`, { name });
    }

    public async loadNamed(name: string): Promise<LoadResult> {
        return this.request<LoadResult>("POST", `/session/${this.need()}/circuit/load`, { name });
    }

    public async listCircuits(): Promise<string[]> {
        const body = await this.request<{ circuits: string[] }>("GET", "/circuits");
        return body.circuits;
    }

    public async table(): Promise<TableDocument> {
        return this.request<TableDocument>("GET", `/session/${this.need()}/table`);
    }

    public async close(): Promise<void> {
        if (this.session === null) {
            return;
        }
        const sid = this.session;
        this.session = null;
        const response = await fetch(`${this.base}/session/${sid}`, { method: "DELETE" });
        if (!response.ok && response.status !== 404) {
            throw await readError(response);
        }
    }

    private need(): string {
        if (this.session === null) {
            throw new Error("no session open");
        }
        return this.session;
    }

    private async dispatch(command: Command): Promise<CommandResult> {
        const sid = this.need();
        try {
            return await this.post(sid, this.seq + 1, command);
        } catch (err) {
            if (err instanceof ApiError && err.kind === "out_of_order" && err.expected !== undefined) {
                this.seq = err.expected - 1;
                return this.post(sid, err.expected, command);
            }
            throw err;
        }
    }

    private async post(sid: string, seq: number, command: Command): Promise<CommandResult> {
        const result = await this.request<CommandResult>(
            "POST",
            `/session/${sid}/command`,
            { seq, command },
        );
        this.seq = result.seq;
        return result;
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const init: RequestInit = { method };
        if (body !== undefined) {
            init.headers = { "content-type": "application/json" };
            init.body = JSON.stringify(body);
        }
        const response = await fetch(this.base + path, init);
        if (!response.ok) {
            throw await readError(response);
        }
        if (response.status === 204) {
            return undefined as T;
        }
        return (await response.json()) as T;
    }
}

export type { StateDocument };
