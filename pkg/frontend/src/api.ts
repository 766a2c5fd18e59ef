import {
    ApiErrorBody,
    CreateResponse,
    QueryResponse,
    SessionConfig,
    StateSummary,
} from "./types.js";

/** Error carrying the service's {code, message} body and HTTP status. */
export class ServiceError extends Error {
    readonly status: number;
    readonly code: string;

    constructor(status: number, code: string, message: string) {
        super(message);
        this.name = "ServiceError";
        this.status = status;
        this.code = code;
    }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(path, init);
    if (!response.ok) {
        let body: ApiErrorBody = { code: "unknown", message: response.statusText };
        try {
            body = (await response.json()) as ApiErrorBody;
        } catch {
            // non-JSON error body; keep the status text
        }
        throw new ServiceError(response.status, body.code, body.message);
    }
    return (await response.json()) as T;
}

export function createSession(config: SessionConfig): Promise<CreateResponse> {
    return request<CreateResponse>("/sessions", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(config),
    });
}

export function fetchQuery(id: string): Promise<QueryResponse> {
    return request<QueryResponse>(`/sessions/${id}/query`);
}

export function submitJudgment(id: string, accept: boolean): Promise<StateSummary> {
    return request<StateSummary>(`/sessions/${id}/judgment`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ accept }),
    });
}

export function fetchState(id: string): Promise<StateSummary> {
    return request<StateSummary>(`/sessions/${id}/state`);
}

export interface ExportedTranscript {
    filename: string;
    text: string;
}

const FILENAME_RE = /filename="([^"]+)"/;

export async function fetchExport(id: string): Promise<ExportedTranscript> {
    const response = await fetch(`/sessions/${id}/export`);
    if (!response.ok) {
        const body = (await response.json()) as ApiErrorBody;
        throw new ServiceError(response.status, body.code, body.message);
    }
    const disposition = response.headers.get("Content-Disposition") ?? "";
    const match = FILENAME_RE.exec(disposition);
    return {
        filename: match ? match[1] : `session_${id}.json`,
        text: await response.text(),
    };
}
