/** Service client with stale-response discard.
 *
 * Only one query is logically in flight: every submission takes a sequence
 * number and a response is delivered only if no newer submission happened
 * while it was pending.
 */

import type { QueryRequest, QueryResponse } from "./types.js";

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export interface QueryOutcome {
    stale: boolean;
    response?: QueryResponse;
    error?: string;
    status?: number;
}

export class SearchClient {
    private seq = 0;

    constructor(
        readonly baseUrl: string,
        private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
    ) {}

    async query(request: QueryRequest): Promise<QueryOutcome> {
        const mySeq = ++this.seq;
        let response: Response;
        try {
            response = await this.fetchImpl(`${this.baseUrl}/query`, {
                method: "POST",
                headers: { "Content-Type": "application/json" },
                body: JSON.stringify(request),
            });
        } catch (err) {
            if (mySeq !== this.seq) {
                return { stale: true };
            }
            return { stale: false, error: `service unreachable: ${String(err)}` };
        }
        if (mySeq !== this.seq) {
            return { stale: true };
        }
        if (!response.ok) {
            let detail = `HTTP ${response.status}`;
            try {
                const body = (await response.json()) as { error?: string };
                if (body.error) {
                    detail = body.error;
                }
            } catch {
                // body was not JSON; keep the status line
            }
            return { stale: false, error: detail, status: response.status };
        }
        const payload = (await response.json()) as QueryResponse;
        if (mySeq !== this.seq) {
            return { stale: true };
        }
        return { stale: false, response: payload };
    }
}
