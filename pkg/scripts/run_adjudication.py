#!/usr/bin/env python3
"""Run the claim-adjudication suite and archive the machine-readable report.

Usage:
    python scripts/run_adjudication.py [--max-n N] [--seed S] [--family-cap K] [--out PATH]

Prints the human-readable verdict table; writes the JSON report (the
byte-stable artifact) next to it. Re-running with identical arguments must
reproduce the JSON byte for byte; this script asserts that by rebuilding
the corpus once.
"""

import argparse
from pathlib import Path

from iasi.harness import generate_corpus, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--family-cap", type=int, default=None)
    parser.add_argument("--out", default="adjudication.json")
    args = parser.parse_args()

    corpus = generate_corpus(n_max=args.max_n, seed=args.seed, family_cap=args.family_cap)
    suite = run_suite(corpus)
    print(suite.to_text(), end="")

    rerun = run_suite(
        generate_corpus(n_max=args.max_n, seed=args.seed, family_cap=args.family_cap)
    )
    assert suite.to_json_text() == rerun.to_json_text(), "report is not reproducible"

    out = Path(args.out)
    out.write_text(suite.to_json_text(), encoding="utf-8")
    print(f"\nwrote {out} ({len(suite.counterexamples())} minimal counterexamples recorded)")
    return 1 if suite.errored else 0


if __name__ == "__main__":
    raise SystemExit(main())
