import { describe, expect, it } from "vitest";

import { SearchClient } from "../src/api.js";
import type { QueryResponse } from "../src/types.js";
import baseFixture from "./fixtures/query_base.json";

const base = baseFixture as QueryResponse;

function jsonResponse(payload: unknown, status = 200): Response {
    return new Response(JSON.stringify(payload), {
        status,
        headers: { "Content-Type": "application/json" },
    });
}

describe("SearchClient", () => {
    it("delivers a successful response", async () => {
        const client = new SearchClient("http://svc", async () => jsonResponse(base));
        const outcome = await client.query({ query: "camera with a lens" });
        expect(outcome.stale).toBe(false);
        expect(outcome.response?.results.length).toBe(5);
    });

    it("discards responses superseded by a newer submission", async () => {
        const resolvers: ((r: Response) => void)[] = [];
        const client = new SearchClient(
            "http://svc",
            () => new Promise<Response>((resolve) => resolvers.push(resolve)),
        );
        const first = client.query({ query: "old" });
        const second = client.query({ query: "new" });
        // the slow first response arrives after the second was issued
        resolvers[1]!(jsonResponse(base));
        resolvers[0]!(jsonResponse({ ...base, results: [] }));
        expect((await first).stale).toBe(true);
        const current = await second;
        expect(current.stale).toBe(false);
        expect(current.response?.results.length).toBe(5);
    });

    it("maps service errors to messages with status", async () => {
        const client = new SearchClient(
            "http://svc",
            async () => jsonResponse({ error: "empty query" }, 422),
        );
        const outcome = await client.query({ query: " " });
        expect(outcome.stale).toBe(false);
        expect(outcome.status).toBe(422);
        expect(outcome.error).toBe("empty query");
    });

    it("reports network failures as retriable errors", async () => {
        const client = new SearchClient("http://svc", async () => {
            throw new Error("connection refused");
        });
        const outcome = await client.query({ query: "camera" });
        expect(outcome.stale).toBe(false);
        expect(outcome.error).toContain("unreachable");
    });

    it("sends exclude_contexts through the request body", async () => {
        let body = "";
        const client = new SearchClient("http://svc", async (_url, init) => {
            body = String(init.body);
            return jsonResponse(base);
        });
        await client.query({
            query: "camera with a lens",
            exclude_contexts: [["camera", "on a white surface"]],
        });
        expect(JSON.parse(body).exclude_contexts).toEqual([
            ["camera", "on a white surface"],
        ]);
    });
});
