#!/usr/bin/env python3
"""Index the five-caption demo corpus and print the classic query output:
ranked captions with their extracted contexts, then the context groups."""

import argparse

from anvil import build_index, retrieve, RetrievalParams
from anvil.data import (
    default_context_rules,
    default_lexicon,
    default_ruleset,
    figure_corpus,
)
from anvil.index import group_results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--query", default="camera with a lens.")
    parser.add_argument("--alpha", type=float, default=1.0)
    args = parser.parse_args()

    index = build_index(figure_corpus(), default_lexicon())
    results = retrieve(
        index, args.query, default_ruleset(), default_context_rules(),
        RetrievalParams(alpha=args.alpha),
    )
    print(f"Query = {args.query!r}")
    print(f"{len(results)} results:")
    print("SCORE  CAPTION")
    for r in results:
        print(f"{r.combined_score:<6.3g} {r.caption}")
        by_anchor: dict[str, list[str]] = {}
        for c in r.contexts:
            by_anchor.setdefault(c.anchor_surface, []).append(c.text)
        for anchor, texts in by_anchor.items():
            print(f"       * {anchor}: {', '.join(texts)}")
    print()
    print("Captions gathered by context")
    print("----------------------------")
    for g in group_results(results):
        print(f"  {g.anchor_lemma}: {g.context_text:<22} ({g.count})")


if __name__ == "__main__":
    main()
