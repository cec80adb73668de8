/** Wire types for the retrieval service JSON API. */

export interface ContextRef {
    anchor: string;
    text: string;
    category: string;
}

export interface ResultRecord {
    id: string;
    caption: string;
    image_uri?: string;
    combined_score: number;
    phrase_score: number;
    simple_score: number;
    contexts: ContextRef[];
}

export interface ContextGroupRecord {
    anchor: string;
    context: string;
    count: number;
    ids: string[];
}

export interface QueryResponse {
    results: ResultRecord[];
    groups: ContextGroupRecord[];
    timing_ms: number;
}

export interface QueryRequest {
    query: string;
    limit?: number;
    alpha?: number;
    exclude_contexts?: [string, string][];
}
