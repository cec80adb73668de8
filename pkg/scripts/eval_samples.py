#!/usr/bin/env python3
"""Run the bundled 20-query suite over the sample corpus and print the report."""

import argparse
import os

from anvil import build_index, run_eval
from anvil.data import (
    default_context_rules,
    default_lexicon,
    default_ruleset,
    sample_corpus,
)
from anvil.evaluation import load_qrels_tsv, load_queries_tsv, render_report, report_dumps
from anvil.index import RetrievalParams

TESTS_DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", type=float, default=0.8)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    index = build_index(sample_corpus(), default_lexicon())
    with open(os.path.join(TESTS_DATA, "sample_queries.tsv"), encoding="utf-8") as fh:
        queries = load_queries_tsv(fh.read())
    with open(os.path.join(TESTS_DATA, "sample_qrels.tsv"), encoding="utf-8") as fh:
        qrels = load_qrels_tsv(fh.read())
    report = run_eval(
        index, default_ruleset(), default_context_rules(), queries, qrels,
        RetrievalParams(alpha=args.alpha, limit=index.doc_count),
    )
    print(report_dumps(report) if args.json else render_report(report))


if __name__ == "__main__":
    main()
