"""Retrieval evaluation: interpolated precision-recall and summary metrics.

Interpolated precision at recall r is the maximum precision over all
ranking cutoffs whose recall reaches r; the report carries the standard
11-point curve (recall 0.0 to 1.0 in steps of 0.1), precision at 10% recall,
precision at 5 documents and R-precision.  Relevance is binary and unjudged
documents count as non-relevant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import AnvilError, NoRelevant
from .index import Index, RetrievalParams, retrieve
from .matcher import SimilarityProvider

RECALL_POINTS = tuple(i / 10 for i in range(11))


@dataclass(frozen=True)
class QueryMetrics:
    curve: tuple[float, ...]  # 11 interpolated precision points
    p_at_10pct_recall: float
    p_at_5: float
    r_precision: float


@dataclass(frozen=True)
class EvalReport:
    per_query: dict[str, QueryMetrics]
    mean: QueryMetrics
    skipped: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def interpolated_pr(ranking, relevant) -> tuple[float, ...]:
    """11-point interpolated precision curve for one ranking."""
    relevant = set(relevant)
    if not relevant:
        raise NoRelevant("no relevant documents for this query")
    total = len(relevant)
    points = []  # (recall, precision) at each cutoff
    hits = 0
    for i, doc_id in enumerate(ranking, start=1):
        if doc_id in relevant:
            hits += 1
        points.append((hits / total, hits / i))
    curve = []
    for r in RECALL_POINTS:
        precisions = [p for recall, p in points if recall >= r]
        curve.append(max(precisions) if precisions else 0.0)
    return tuple(curve)


def metrics(ranking, relevant) -> QueryMetrics:
    """Summary metrics for one ranking against a binary relevant set."""
    relevant = set(relevant)
    curve = interpolated_pr(ranking, relevant)
    top5 = ranking[:5]
    p_at_5 = sum(1 for d in top5 if d in relevant) / 5
    r = len(relevant)
    top_r = ranking[:r]
    r_precision = sum(1 for d in top_r if d in relevant) / r
    return QueryMetrics(
        curve=curve,
        p_at_10pct_recall=curve[1],
        p_at_5=p_at_5,
        r_precision=r_precision,
    )


def _mean_metrics(per_query: dict[str, QueryMetrics]) -> QueryMetrics:
    n = len(per_query)
    if n == 0:
        return QueryMetrics(tuple(0.0 for _ in RECALL_POINTS), 0.0, 0.0, 0.0)
    curve = tuple(
        sum(m.curve[i] for m in per_query.values()) / n for i in range(len(RECALL_POINTS))
    )
    return QueryMetrics(
        curve=curve,
        p_at_10pct_recall=sum(m.p_at_10pct_recall for m in per_query.values()) / n,
        p_at_5=sum(m.p_at_5 for m in per_query.values()) / n,
        r_precision=sum(m.r_precision for m in per_query.values()) / n,
    )


def run_eval(index: Index, ruleset, context_rules, queries, qrels,
             params: RetrievalParams | None = None,
             sim: SimilarityProvider | None = None) -> EvalReport:
    """Evaluate `queries` ([(id, text)]) against `qrels` ({id: relevant ids}).

    Each query is ranked to the full candidate depth (k_candidates); queries
    with no judged relevant documents are skipped with a note, and retrieval
    errors skip the query without aborting the batch.
    """
    params = params if params is not None else RetrievalParams()
    per_query: dict[str, QueryMetrics] = {}
    skipped: list[tuple[str, str]] = []
    warnings: list[str] = []
    query_ids = {qid for qid, _ in queries}
    for qid in sorted(qrels):
        if qid not in query_ids:
            warnings.append(f"qrels entry {qid!r} has no query text; ignored")
    depth_params = RetrievalParams(
        k_candidates=params.k_candidates,
        limit=params.k_candidates,
        alpha=params.alpha,
        match_config=params.match_config,
    )
    for qid, text in queries:
        relevant = qrels.get(qid, set())
        if not relevant:
            skipped.append((qid, "no relevant documents judged"))
            continue
        try:
            results = retrieve(index, text, ruleset, context_rules, depth_params, sim)
        except AnvilError as exc:
            skipped.append((qid, f"retrieval failed: {exc}"))
            continue
        ranking = [r.id for r in results]
        per_query[qid] = metrics(ranking, relevant)
    return EvalReport(
        per_query=per_query,
        mean=_mean_metrics(per_query),
        skipped=skipped,
        warnings=warnings,
    )


# --- report serialization ---------------------------------------------------


def load_queries_tsv(text: str) -> list[tuple[str, str]]:
    """TSV: query_id <tab> query text."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        qid, _, query = line.partition("\t")
        if not query:
            raise ValueError(f"queries line {lineno}: expected 'id<TAB>text'")
        out.append((qid.strip(), query.strip()))
    return out


def load_qrels_tsv(text: str) -> dict[str, set[str]]:
    """TSV: query_id <tab> caption_id <tab> relevance (0/1)."""
    qrels: dict[str, set[str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"qrels line {lineno}: expected 3 tab-separated columns")
        qid, doc_id, rel = (p.strip() for p in parts)
        if rel not in ("0", "1"):
            raise ValueError(f"qrels line {lineno}: relevance must be 0 or 1")
        qrels.setdefault(qid, set())
        if rel == "1":
            qrels[qid].add(doc_id)
    return qrels


def _metrics_json(m: QueryMetrics) -> dict:
    return {
        "curve": [round(v, 6) for v in m.curve],
        "p_at_10pct_recall": round(m.p_at_10pct_recall, 6),
        "p_at_5": round(m.p_at_5, 6),
        "r_precision": round(m.r_precision, 6),
    }


def report_to_json(report: EvalReport) -> dict:
    return {
        "queries": {qid: _metrics_json(m) for qid, m in sorted(report.per_query.items())},
        "mean": _metrics_json(report.mean),
        "skipped": [list(s) for s in report.skipped],
        "warnings": list(report.warnings),
    }


def render_report(report: EvalReport) -> str:
    """Aligned-column text table, one row per query plus the macro mean."""
    header = ("Query", "P@10%R", "P@5", "R-prec")
    rows = [header]
    for qid, m in sorted(report.per_query.items()):
        rows.append((qid, f"{m.p_at_10pct_recall:.3f}", f"{m.p_at_5:.3f}",
                     f"{m.r_precision:.3f}"))
    m = report.mean
    rows.append(("mean", f"{m.p_at_10pct_recall:.3f}", f"{m.p_at_5:.3f}",
                 f"{m.r_precision:.3f}"))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    for qid, reason in report.skipped:
        lines.append(f"skipped {qid}: {reason}")
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def report_dumps(report: EvalReport) -> str:
    return json.dumps(report_to_json(report), indent=2, sort_keys=True)
