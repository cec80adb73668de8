/** DOM wiring: query box, result list, facet panel, error/retry affordance. */

import { SearchClient } from "./api.js";
import { FacetState } from "./facets.js";
import { renderFacets, renderResults } from "./view.js";
import type { QueryResponse } from "./types.js";

declare global {
    interface Window {
        ANVIL_SERVICE_URL?: string;
    }
}

const serviceUrl = window.ANVIL_SERVICE_URL ?? "http://127.0.0.1:8000";
const client = new SearchClient(serviceUrl);
const facets = new FacetState();

const form = document.getElementById("search-form") as HTMLFormElement;
const input = document.getElementById("search-input") as HTMLInputElement;
const resultsEl = document.getElementById("results") as HTMLElement;
const facetsEl = document.getElementById("facets") as HTMLElement;
const statusEl = document.getElementById("status") as HTMLElement;
const clearBtn = document.getElementById("clear-facets") as HTMLButtonElement;

let lastQuery = "";

function setStatus(text: string, withRetry = false): void {
    statusEl.textContent = text;
    if (withRetry) {
        const retry = document.createElement("button");
        retry.textContent = "retry";
        retry.addEventListener("click", () => void submit(lastQuery));
        statusEl.append(" ", retry);
    }
}

function renderResponse(response: QueryResponse): void {
    facets.rebuild(response.groups);
    resultsEl.innerHTML = renderResults(response.results);
    facetsEl.innerHTML = renderFacets(facets.entries());
    clearBtn.hidden = !facets.hasExclusions();
    setStatus(
        `${response.results.length} results in ${response.timing_ms.toFixed(1)} ms`,
    );
}

async function submit(query: string): Promise<void> {
    if (!query.trim()) {
        setStatus("Type a query first.");
        return;
    }
    lastQuery = query;
    setStatus("Searching…");
    const outcome = await client.query({
        query,
        limit: 10,
        exclude_contexts: facets.hasExclusions() ? facets.excludePairs() : undefined,
    });
    if (outcome.stale) {
        return; // a newer submission owns the screen
    }
    if (outcome.error !== undefined || outcome.response === undefined) {
        setStatus(`Error: ${outcome.error ?? "empty response"}`, true);
        return;
    }
    renderResponse(outcome.response);
}

form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit(input.value);
});

facetsEl.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const anchor = target.dataset.anchor;
    const context = target.dataset.context;
    if (anchor === undefined || context === undefined) {
        return;
    }
    if (facets.toggle(anchor, context)) {
        void submit(lastQuery || input.value);
    }
});

clearBtn.addEventListener("click", () => {
    facets.clear();
    void submit(lastQuery || input.value);
});

setStatus("Ready.");
