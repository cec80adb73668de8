#!/usr/bin/env python3
"""Write a synthetic caption corpus as JSONL (for scale experiments)."""

import argparse
import json

from anvil.synth import generate_corpus


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True)
    args = parser.parse_args()
    records = generate_corpus(args.count, seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} captions to {args.out}")


if __name__ == "__main__":
    main()
