/** Pure rendering: service records -> view models -> HTML strings.
 *
 * Scores and contexts pass through untouched from the service; the only
 * transformation is display formatting.  Keeping this DOM-free makes the
 * contract tests runnable without a browser.
 */

import type { FacetEntry } from "./facets.js";
import type { ResultRecord } from "./types.js";

export interface ResultViewModel {
    id: string;
    caption: string;
    scoreDisplay: string;
    chips: { anchor: string; text: string }[];
    thumbnail: string | null;
}

/** Two-decimal score display, trailing zeros trimmed: 0.588 -> "0.59",
 * 1 -> "1", 0.5 -> "0.5". */
export function formatScore(score: number): string {
    const fixed = score.toFixed(2);
    const trimmed = fixed.replace(/0+$/, "").replace(/\.$/, "");
    return trimmed === "" ? "0" : trimmed;
}

export function toViewModel(record: ResultRecord): ResultViewModel {
    return {
        id: record.id,
        caption: record.caption,
        scoreDisplay: formatScore(record.combined_score),
        chips: record.contexts.map((c) => ({ anchor: c.anchor, text: c.text })),
        thumbnail: record.image_uri ?? null,
    };
}

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

export function renderResults(records: ResultRecord[]): string {
    if (records.length === 0) {
        return '<p class="empty">No results.</p>';
    }
    const cards = records.map((record) => {
        const vm = toViewModel(record);
        const thumb = vm.thumbnail
            ? `<img class="thumb" src="${escapeHtml(vm.thumbnail)}" alt="">`
            : '<div class="thumb placeholder"></div>';
        const chips = vm.chips
            .map(
                (chip) =>
                    `<span class="chip">${escapeHtml(chip.anchor)}: ${escapeHtml(chip.text)}</span>`,
            )
            .join("");
        return (
            `<div class="result" data-id="${escapeHtml(vm.id)}">` +
            thumb +
            `<div class="body"><span class="score">${vm.scoreDisplay}</span> ` +
            `<span class="caption">${escapeHtml(vm.caption)}</span>` +
            `<div class="chips">${chips}</div></div></div>`
        );
    });
    return cards.join("\n");
}

export function renderFacets(entries: FacetEntry[]): string {
    if (entries.length === 0) {
        return "";
    }
    const byAnchor = new Map<string, FacetEntry[]>();
    for (const entry of entries) {
        const bucket = byAnchor.get(entry.anchor) ?? [];
        bucket.push(entry);
        byAnchor.set(entry.anchor, bucket);
    }
    const sections: string[] = [];
    for (const [anchor, bucket] of byAnchor) {
        const chips = bucket
            .map(
                (e) =>
                    `<button class="facet${e.state === "excluded" ? " excluded" : ""}"` +
                    ` data-anchor="${escapeHtml(e.anchor)}"` +
                    ` data-context="${escapeHtml(e.context)}">` +
                    `${escapeHtml(e.context)} (${e.count})</button>`,
            )
            .join("");
        sections.push(
            `<div class="facet-group"><h3>${escapeHtml(anchor)}</h3>${chips}</div>`,
        );
    }
    return sections.join("\n");
}
