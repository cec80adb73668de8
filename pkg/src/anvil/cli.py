"""Command-line entry point.

Subcommands: parse, match, index, query, eval, serve.  Exit codes: 0 on
success, 1 on usage errors, 2 on data errors.  The lexicon resolves from
--lexicon, then the ANVIL_LEXICON environment variable, then the packaged
default.  Output is plain text (respects NO_COLOR trivially: nothing is
ever colorized) or JSON with --format json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import data as packaged
from .analysis import Lexicon, analyze
from .deps import render_structure
from .errors import AnvilError
from .evaluation import (
    load_qrels_tsv,
    load_queries_tsv,
    render_report,
    report_dumps,
    run_eval,
)
from .index import (
    DEFAULT_ALPHA,
    DEFAULT_K_CANDIDATES,
    DEFAULT_LIMIT,
    RetrievalParams,
    build_index,
    group_results,
    load_index,
    retrieve,
    save_index,
)
from .matcher import MatchConfig, SimilarityProvider, match_phrases, render_trace
from .rules import parse_context_rules_file, parse_rules_file

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; we reserve 2 for data errors
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _sha256_file(path: str) -> str:
    import hashlib

    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_lexicon(args) -> tuple[Lexicon, str]:
    path = getattr(args, "lexicon", None) or os.environ.get("ANVIL_LEXICON")
    if path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        return Lexicon.from_text(text), text
    return packaged.default_lexicon(), packaged.default_lexicon_text()


def _load_rules(args):
    path = getattr(args, "rules", None)
    if path:
        return parse_rules_file(path)
    return packaged.default_ruleset()


def _load_context_rules(args):
    path = getattr(args, "context_rules", None)
    if path:
        return parse_context_rules_file(path)
    return packaged.default_context_rules()


def _load_similarity(args) -> SimilarityProvider:
    path = getattr(args, "synonyms", None)
    if path:
        return SimilarityProvider.from_file(path)
    return SimilarityProvider()


def _params(args) -> RetrievalParams:
    return RetrievalParams(
        k_candidates=getattr(args, "k_candidates", DEFAULT_K_CANDIDATES),
        limit=getattr(args, "limit", DEFAULT_LIMIT),
        alpha=getattr(args, "alpha", DEFAULT_ALPHA),
        match_config=MatchConfig(),
    )


def _result_json(result) -> dict:
    out = {
        "id": result.id,
        "caption": result.caption,
        "combined_score": result.combined_score,
        "phrase_score": result.phrase_score,
        "simple_score": result.simple_score,
        "contexts": [
            {"anchor": c.anchor_lemma, "text": c.text, "category": c.category}
            for c in result.contexts
        ],
    }
    if result.image_uri is not None:
        out["image_uri"] = result.image_uri
    return out


def _print_results(results, groups, args) -> None:
    if args.format == "json":
        payload = {
            "query": args.text,
            "alpha": args.alpha,
            "k_candidates": args.k_candidates,
            "limit": args.limit,
            "results": [_result_json(r) for r in results],
            "groups": [
                {
                    "anchor": g.anchor_lemma,
                    "context": g.context_text,
                    "count": g.count,
                    "ids": list(g.caption_ids),
                }
                for g in groups
            ],
        }
        print(json.dumps(payload, indent=2, ensure_ascii=False))
        return
    print(f"{len(results)} results:")
    print("SCORE  CAPTION")
    for r in results:
        print(f"{_fmt_score(r.combined_score)}  {r.caption}")
        by_anchor: dict[str, list[str]] = {}
        for c in r.contexts:
            by_anchor.setdefault(c.anchor_surface, []).append(c.text)
        for anchor, texts in by_anchor.items():
            print(f"       * {anchor}: {', '.join(texts)}")
    if groups:
        print()
        print("Captions gathered by context")
        for g in groups:
            print(f"  {g.anchor_lemma}: {g.context_text} ({g.count})")


def _fmt_score(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return s or "0"


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="anvil", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", help="lexicon TSV path (default: ANVIL_LEXICON or packaged)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p_parse = sub.add_parser("parse", parents=[common], help="analyze a phrase")
    p_parse.add_argument("text")

    p_match = sub.add_parser("match", parents=[common], help="match a query against a caption")
    p_match.add_argument("--rules", help="match-rule file (.mr)")
    p_match.add_argument("--synonyms", help="synonym TSV (lemma, lemma, similarity)")
    p_match.add_argument("query")
    p_match.add_argument("caption")

    p_index = sub.add_parser("index", parents=[common], help="build an index directory")
    p_index.add_argument("--captions", required=True, help="corpus JSONL file")
    p_index.add_argument("--out", required=True, help="output directory")
    p_index.add_argument("--rules", help="match-rule file recorded in the manifest")
    p_index.add_argument("--context-rules", help="context-rule file recorded in the manifest")
    p_index.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)

    p_query = sub.add_parser("query", parents=[common], help="query an index")
    p_query.add_argument("--index", required=True, help="index directory")
    p_query.add_argument("--rules")
    p_query.add_argument("--context-rules", dest="context_rules")
    p_query.add_argument("--synonyms")
    p_query.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    p_query.add_argument("--k-candidates", type=int, default=DEFAULT_K_CANDIDATES)
    p_query.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p_query.add_argument("text")

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a query set")
    p_eval.add_argument("--index", required=True)
    p_eval.add_argument("--queries", required=True, help="TSV: id <TAB> text")
    p_eval.add_argument("--qrels", required=True, help="TSV: id <TAB> caption id <TAB> 0/1")
    p_eval.add_argument("--rules")
    p_eval.add_argument("--context-rules", dest="context_rules")
    p_eval.add_argument("--synonyms")
    p_eval.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    p_eval.add_argument("--k-candidates", type=int, default=DEFAULT_K_CANDIDATES)

    p_serve = sub.add_parser("serve", parents=[common], help="serve an index over HTTP")
    p_serve.add_argument("--index", required=True)
    p_serve.add_argument("--rules")
    p_serve.add_argument("--context-rules", dest="context_rules")
    p_serve.add_argument("--synonyms")
    p_serve.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


def _cmd_parse(args) -> int:
    lexicon, _ = _load_lexicon(args)
    parse = analyze(args.text, lexicon)
    rendering = render_structure(parse.structure)
    if args.format == "json":
        print(json.dumps({
            "text": args.text,
            "tokens": [
                {"surface": t.surface, "lemma": t.lemma, "pos": t.pos}
                for t in parse.tokens
            ],
            "heads": sorted(parse.structure.heads),
            "dependencies": [
                {"var": name, "anchor": a, "dependent": d}
                for name in sorted(parse.structure.vars)
                for a, d in parse.structure.vars[name]
            ],
            "unattached": list(parse.unattached),
            "rendering": rendering,
        }, indent=2, ensure_ascii=False))
    else:
        print(rendering)
    return 0


def _cmd_match(args) -> int:
    lexicon, _ = _load_lexicon(args)
    ruleset = _load_rules(args)
    sim = _load_similarity(args)
    query = analyze(args.query, lexicon)
    caption = analyze(args.caption, lexicon)
    result = match_phrases(query, caption, ruleset, sim)
    if args.format == "json":
        print(json.dumps({
            "query": args.query,
            "caption": args.caption,
            "rows": [
                {
                    "query_word": query.tokens[r.query_pos].surface
                    if r.query_pos is not None else None,
                    "caption_word": caption.tokens[r.caption_pos].surface
                    if r.caption_pos is not None else None,
                    "group": r.group,
                    "comparison": r.comparison,
                    "score": r.score,
                    "weight": r.weight,
                }
                for r in result.rows
            ],
            "overall": result.overall,
        }, indent=2, ensure_ascii=False))
    else:
        print(render_trace(result))
    return 0


def _cmd_index(args) -> int:
    lexicon, lexicon_text = _load_lexicon(args)
    with open(args.captions, encoding="utf-8") as fh:
        corpus = [json.loads(line) for line in fh if line.strip()]
    index = build_index(corpus, lexicon)
    metadata = {"alpha_default": args.alpha}
    if args.rules:
        metadata["rules_sha256"] = _sha256_file(args.rules)
    if getattr(args, "context_rules", None):
        metadata["context_rules_sha256"] = _sha256_file(args.context_rules)
    save_index(index, args.out, lexicon_text=lexicon_text, metadata=metadata)
    payload = {"documents": index.doc_count, "terms": len(index.postings), "out": args.out}
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"indexed {index.doc_count} captions ({len(index.postings)} terms) -> {args.out}")
    return 0


def _cmd_query(args) -> int:
    index = load_index(args.index)
    ruleset = _load_rules(args)
    context_rules = _load_context_rules(args)
    sim = _load_similarity(args)
    results = retrieve(index, args.text, ruleset, context_rules, _params(args), sim)
    groups = group_results(results)
    _print_results(results, groups, args)
    return 0


def _cmd_eval(args) -> int:
    index = load_index(args.index)
    ruleset = _load_rules(args)
    context_rules = _load_context_rules(args)
    sim = _load_similarity(args)
    with open(args.queries, encoding="utf-8") as fh:
        queries = load_queries_tsv(fh.read())
    with open(args.qrels, encoding="utf-8") as fh:
        qrels = load_qrels_tsv(fh.read())
    params = RetrievalParams(
        k_candidates=args.k_candidates, limit=args.k_candidates, alpha=args.alpha,
    )
    report = run_eval(index, ruleset, context_rules, queries, qrels, params, sim)
    if args.format == "json":
        print(report_dumps(report))
    else:
        print(render_report(report))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    index = load_index(args.index)
    app = create_app(
        index,
        ruleset=_load_rules(args),
        context_rules=_load_context_rules(args),
        sim=_load_similarity(args),
        alpha=args.alpha,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "parse": _cmd_parse,
    "match": _cmd_match,
    "index": _cmd_index,
    "query": _cmd_query,
    "eval": _cmd_eval,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except AnvilError as exc:
        print(f"anvil {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"anvil {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
