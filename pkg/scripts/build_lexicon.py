#!/usr/bin/env python3
"""Regenerate src/anvil/data/lexicon.tsv from the word tables in anvil.vocab."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from anvil.vocab import lexicon_rows  # noqa: E402


def main() -> None:
    out_path = os.path.join(
        os.path.dirname(__file__), "..", "src", "anvil", "data", "lexicon.tsv"
    )
    seen = set()
    lines = [
        "# Starter lexicon: surface <TAB> lemma <TAB> pos",
        "# Generated by scripts/build_lexicon.py; edit anvil/vocab.py instead.",
    ]
    for surface, lemma, pos in lexicon_rows():
        if surface in seen:
            continue
        seen.add(surface)
        lines.append(f"{surface}\t{lemma}\t{pos}")
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(seen)} entries to {os.path.normpath(out_path)}")


if __name__ == "__main__":
    main()
