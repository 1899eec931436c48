#!/usr/bin/env python3
"""Tabulate minimal ground-set cardinalities against the pigeonhole floors.

Usage:
    python scripts/minimal_grounds.py [--max-n N] [--modes iasi,weak,strong] [--exact-cap C]

For every connected graph up to the requested size, climbs the prefix
ladder {0..m-1} per mode and prints the minimal cardinality next to the
log2 floor. With --exact-cap, also searches arbitrary m-subsets of
{0..C} to show how often the prefix convention is already optimal.
"""

import argparse

from iasi.harness import connected_graph_representatives
from iasi.search import ground_set_lower_bound, minimal_ground_set


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--modes", default="iasi,weak,strong")
    parser.add_argument("--exact-cap", type=int, default=None)
    args = parser.parse_args()
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]

    header = f"{'graph':>8} {'n':>2} {'m':>2} {'floor':>5}"
    for mode in modes:
        print(f"== mode {mode} ==")
        print(header + ("  exact" if args.exact_cap is not None else ""))
        for n in range(2, args.max_n + 1):
            for i, g in enumerate(connected_graph_representatives(n), start=1):
                floor = ground_set_lower_bound(n)
                m, outcome = minimal_ground_set(g, mode)
                assert outcome.found and m >= floor
                row = f"{f'g{n}.{i}':>8} {n:>2} {m:>2} {floor:>5}"
                if args.exact_cap is not None:
                    m_exact, exact_outcome = minimal_ground_set(
                        g, mode, exact_cap=args.exact_cap
                    )
                    assert exact_outcome.found and m_exact <= m
                    row += f"  {m_exact:>5}"
                print(row)
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
