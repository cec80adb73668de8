"""Caption index: persisted analyzed records, tf-idf candidate retrieval,
and the full query pipeline (candidate search, phrase rescoring, score
combination, context extraction).

An Index is an immutable snapshot: reads are safe from any number of
threads.  Mutation happens by building a new snapshot (`extend_index`) and
swapping it in whole.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from collections import Counter
from dataclasses import dataclass, field

from .analysis import Lexicon, ParseOutput, PhraseNode, analyze
from .contexts import ContextGroup, ContextPair, extract_contexts, group_by_context
from .deps import DependencyStructure, Token
from .errors import (
    DuplicateId,
    EmptyCaption,
    EmptyQuery,
    FormatVersionMismatch,
    IndexEmpty,
)
from .matcher import MatchConfig, SimilarityProvider, match_phrases
from .rules import ContextRule, RuleSet

FORMAT_VERSION = 1

DEFAULT_ALPHA = 0.8
DEFAULT_K_CANDIDATES = 100
DEFAULT_LIMIT = 10


@dataclass(frozen=True)
class CaptionRecord:
    id: str
    caption: str
    image_uri: str | None
    parse: ParseOutput


@dataclass(frozen=True)
class Index:
    records: dict[str, CaptionRecord]
    postings: dict[str, tuple[tuple[str, int], ...]]
    doc_count: int
    doc_norms: dict[str, float]
    lexicon: Lexicon

    def idf(self, term: str) -> float:
        df = len(self.postings.get(term, ()))
        if df == 0:
            return 0.0
        return math.log(1.0 + self.doc_count / df)


@dataclass(frozen=True)
class RetrievalParams:
    k_candidates: int = DEFAULT_K_CANDIDATES
    limit: int = DEFAULT_LIMIT
    alpha: float = DEFAULT_ALPHA
    match_config: MatchConfig = field(default_factory=MatchConfig)


@dataclass(frozen=True)
class QueryResult:
    id: str
    caption: str
    image_uri: str | None
    combined_score: float
    phrase_score: float
    simple_score: float
    contexts: tuple[ContextPair, ...]
    anchors: tuple[str, ...]  # matched caption lemmas, for {none} grouping


def build_index(corpus, lexicon: Lexicon) -> Index:
    """Analyze a corpus of (id, caption[, image_uri]) inputs into an Index.

    `corpus` yields mappings with keys id, caption and optional image_uri.
    Postings cover content-word lemmas; document norms are tf-idf norms.
    """
    records: dict[str, CaptionRecord] = {}
    for item in corpus:
        record_id = item["id"]
        caption = item["caption"]
        image_uri = item.get("image_uri")
        if record_id in records:
            raise DuplicateId(record_id)
        if not caption or not caption.strip():
            raise EmptyCaption(record_id)
        records[record_id] = CaptionRecord(
            id=record_id,
            caption=caption,
            image_uri=image_uri,
            parse=analyze(caption, lexicon),
        )
    return _finish_index(records, lexicon)


def _finish_index(records: dict[str, CaptionRecord], lexicon: Lexicon) -> Index:
    postings: dict[str, list[tuple[str, int]]] = {}
    for record in records.values():
        for lemma, tf in sorted(Counter(record.parse.content_lemmas()).items()):
            postings.setdefault(lemma, []).append((record.id, tf))
    for entry in postings.values():
        entry.sort(key=lambda e: e[0])
    doc_count = len(records)

    def idf(term: str) -> float:
        df = len(postings.get(term, ()))
        return math.log(1.0 + doc_count / df) if df else 0.0

    norms = {}
    for record in records.values():
        tf = Counter(record.parse.content_lemmas())
        norms[record.id] = math.sqrt(
            sum((count * idf(term)) ** 2 for term, count in tf.items())
        )
    return Index(
        records=dict(records),
        postings={t: tuple(e) for t, e in sorted(postings.items())},
        doc_count=doc_count,
        doc_norms=norms,
        lexicon=lexicon,
    )


def extend_index(index: Index, corpus) -> Index:
    """New snapshot with extra records; norms and postings are recomputed,
    so the result equals a fresh build over the combined corpus."""
    records = dict(index.records)
    for item in corpus:
        record_id = item["id"]
        caption = item["caption"]
        if record_id in records:
            raise DuplicateId(record_id)
        if not caption or not caption.strip():
            raise EmptyCaption(record_id)
        records[record_id] = CaptionRecord(
            id=record_id,
            caption=caption,
            image_uri=item.get("image_uri"),
            parse=analyze(caption, index.lexicon),
        )
    return _finish_index(records, index.lexicon)


def simple_match(index: Index, query_terms, k: int) -> list[tuple[str, float]]:
    """tf-idf cosine similarity between the query term multiset and captions.

    idf(t) = ln(1 + N / df(t)); unknown terms are dropped from the query
    vector.  Returns the top-k (id, score) by descending score, ties broken
    by id.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    terms = list(query_terms)
    if not terms:
        raise EmptyQuery("no query terms")
    query_tf = Counter(t for t in terms if t in index.postings)
    if not query_tf:
        return []
    query_weights = {t: tf * index.idf(t) for t, tf in query_tf.items()}
    query_norm = math.sqrt(sum(w * w for w in query_weights.values()))
    dot: dict[str, float] = {}
    for term, qw in query_weights.items():
        idf = index.idf(term)
        for doc_id, tf in index.postings[term]:
            dot[doc_id] = dot.get(doc_id, 0.0) + qw * tf * idf
    scored = [
        (doc_id, value / (query_norm * index.doc_norms[doc_id]))
        for doc_id, value in dot.items()
        if index.doc_norms[doc_id] > 0
    ]
    scored.sort(key=lambda e: (-e[1], e[0]))
    return scored[:k]


def retrieve(index: Index, query_text: str, ruleset: RuleSet,
             context_rules: list[ContextRule],
             params: RetrievalParams | None = None,
             sim: SimilarityProvider | None = None) -> list[QueryResult]:
    """Run the full pipeline for one query.

    Candidates come from simple matching (top k_candidates); each candidate
    is rescored by phrase matching and the scores combine as
    alpha * phrase + (1 - alpha) * simple.  When the query parse has no
    usable structure the simple score stands alone (alpha treated as 0).
    Results sort by combined score descending, ties by id; contexts are
    extracted for returned results only.
    """
    params = params if params is not None else RetrievalParams()
    sim = sim if sim is not None else SimilarityProvider()
    if index.doc_count == 0:
        raise IndexEmpty("index has no records")
    query_parse = analyze(query_text, index.lexicon)
    terms = query_parse.content_lemmas()
    if not terms:
        raise EmptyQuery("query has no content words")
    candidates = simple_match(index, terms, params.k_candidates)

    alpha = params.alpha
    if not query_parse.structure.heads:
        alpha = 0.0

    scored = []
    for doc_id, simple_score in candidates:
        record = index.records[doc_id]
        if alpha > 0:
            match = match_phrases(query_parse, record.parse, ruleset, sim,
                                  params.match_config)
            phrase_score = match.overall
        else:
            match = None
            phrase_score = 0.0
        combined = alpha * phrase_score + (1.0 - alpha) * simple_score
        scored.append((combined, phrase_score, simple_score, doc_id, match))
    scored.sort(key=lambda e: (-e[0], e[3]))

    results: list[QueryResult] = []
    for combined, phrase_score, simple_score, doc_id, match in scored[: params.limit]:
        record = index.records[doc_id]
        if match is None:
            match = match_phrases(query_parse, record.parse, ruleset, sim,
                                  params.match_config)
        pairs = extract_contexts(match, record.parse, context_rules)
        anchors = tuple(sorted({
            record.parse.tokens[r.caption_pos].lemma
            for r in match.rows
            if r.caption_pos is not None and r.query_pos is not None
        }))
        results.append(QueryResult(
            id=doc_id,
            caption=record.caption,
            image_uri=record.image_uri,
            combined_score=combined,
            phrase_score=phrase_score,
            simple_score=simple_score,
            contexts=tuple(pairs),
            anchors=anchors,
        ))
    return results


def group_results(results) -> list[ContextGroup]:
    """Context groups over a list of QueryResults."""
    return group_by_context(
        [(r.id, list(r.anchors), list(r.contexts)) for r in results]
    )


# --- persistence ------------------------------------------------------------


def _parse_to_json(parse: ParseOutput) -> dict:
    return {
        "tokens": [[t.surface, t.lemma, t.pos] for t in parse.tokens],
        "heads": sorted(parse.structure.heads),
        "vars": {k: [list(e) for e in v] for k, v in sorted(parse.structure.vars.items())},
        "bracketing": [_node_to_json(b) for b in parse.bracketing],
        "unattached": list(parse.unattached),
        "notes": list(parse.notes),
    }


def _node_to_json(node: PhraseNode) -> dict:
    return {
        "category": node.category,
        "span": [node.start, node.end],
        "children": [_node_to_json(c) for c in node.children],
    }


def _node_from_json(data: dict) -> PhraseNode:
    return PhraseNode(
        category=data["category"],
        start=data["span"][0],
        end=data["span"][1],
        children=tuple(_node_from_json(c) for c in data["children"]),
    )


def _parse_from_json(data: dict) -> ParseOutput:
    tokens = tuple(
        Token(surface, lemma, pos, i)
        for i, (surface, lemma, pos) in enumerate(data["tokens"])
    )
    structure = DependencyStructure(
        tokens=tokens,
        heads=frozenset(data["heads"]),
        vars={k: tuple(tuple(e) for e in v) for k, v in data["vars"].items()},
    )
    return ParseOutput(
        tokens=tokens,
        structure=structure,
        bracketing=tuple(_node_from_json(b) for b in data["bracketing"]),
        unattached=tuple(data["unattached"]),
        notes=tuple(data["notes"]),
    )


def save_index(index: Index, directory, *, lexicon_text: str,
               metadata: dict | None = None) -> None:
    """Write an index directory: manifest.json, records.jsonl, postings.txt,
    norms.txt, lexicon.tsv.  The lexicon travels with the index so a load is
    self-contained."""
    os.makedirs(directory, exist_ok=True)
    manifest = {
        "format_version": FORMAT_VERSION,
        "documents": index.doc_count,
        "terms": len(index.postings),
        "alpha_default": DEFAULT_ALPHA,
        "lexicon_sha256": hashlib.sha256(lexicon_text.encode("utf-8")).hexdigest(),
    }
    if metadata:
        manifest.update(metadata)
    with open(os.path.join(directory, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(os.path.join(directory, "records.jsonl"), "w", encoding="utf-8") as fh:
        for record_id in sorted(index.records):
            record = index.records[record_id]
            fh.write(json.dumps({
                "id": record.id,
                "caption": record.caption,
                "image_uri": record.image_uri,
                "parse": _parse_to_json(record.parse),
            }, ensure_ascii=False) + "\n")
    with open(os.path.join(directory, "postings.txt"), "w", encoding="utf-8") as fh:
        for term, entries in index.postings.items():
            cells = " ".join(f"{doc_id}:{tf}" for doc_id, tf in entries)
            fh.write(f"{term}\t{cells}\n")
    with open(os.path.join(directory, "norms.txt"), "w", encoding="utf-8") as fh:
        for doc_id in sorted(index.doc_norms):
            fh.write(f"{doc_id}\t{index.doc_norms[doc_id]!r}\n")
    with open(os.path.join(directory, "lexicon.tsv"), "w", encoding="utf-8") as fh:
        fh.write(lexicon_text)


def load_index(directory) -> Index:
    manifest_path = os.path.join(directory, "manifest.json")
    if not os.path.exists(manifest_path):
        raise FormatVersionMismatch(f"no manifest.json in {directory}")
    with open(manifest_path, encoding="utf-8") as fh:
        manifest = json.load(fh)
    if manifest.get("format_version") != FORMAT_VERSION:
        raise FormatVersionMismatch(
            f"format_version {manifest.get('format_version')!r}, expected {FORMAT_VERSION}"
        )
    lexicon = Lexicon.from_file(os.path.join(directory, "lexicon.tsv"))
    records: dict[str, CaptionRecord] = {}
    with open(os.path.join(directory, "records.jsonl"), encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            data = json.loads(line)
            records[data["id"]] = CaptionRecord(
                id=data["id"],
                caption=data["caption"],
                image_uri=data.get("image_uri"),
                parse=_parse_from_json(data["parse"]),
            )
    postings: dict[str, tuple[tuple[str, int], ...]] = {}
    with open(os.path.join(directory, "postings.txt"), encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            term, _, cells = line.partition("\t")
            entries = []
            for cell in cells.split():
                doc_id, _, tf = cell.rpartition(":")
                entries.append((doc_id, int(tf)))
            postings[term] = tuple(entries)
    norms: dict[str, float] = {}
    with open(os.path.join(directory, "norms.txt"), encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            doc_id, _, value = line.partition("\t")
            norms[doc_id] = float(value)
    return Index(
        records=records,
        postings=postings,
        doc_count=len(records),
        doc_norms=norms,
        lexicon=lexicon,
    )
