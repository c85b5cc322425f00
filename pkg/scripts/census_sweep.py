#!/usr/bin/env python3
"""Sweep the mod-p divisibility census over a range of table sizes.

Emits one CSV row per n with the divisible-entry count, the table size, and
the exact and float ratios; the data is plot-ready for the ratio-vs-n trend.

    python scripts/census_sweep.py --p 2 --max-n 20 --jobs 2 --out census_p2.csv
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from snchar.census import table_census


@dataclass(frozen=True)
class SweepConfig:
    p: int
    min_n: int
    max_n: int
    jobs: int
    cache_dir: str | None
    out: str | None


def parse_config(argv=None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=2)
    parser.add_argument("--min-n", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=18)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--out", default=None, help="CSV path (default: stdout)")
    args = parser.parse_args(argv)
    return SweepConfig(args.p, args.min_n, args.max_n, args.jobs, args.cache_dir, args.out)


def run(config: SweepConfig, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["n", "p", "divisible", "table_size", "ratio", "ratio_float", "seconds"])
    for n in range(config.min_n, config.max_n + 1):
        start = time.monotonic()
        record = table_census(n, config.p, jobs=config.jobs, cache_dir=config.cache_dir).record
        elapsed = time.monotonic() - start
        writer.writerow(
            [
                n,
                config.p,
                record.divisible_count,
                record.table_size,
                f"{record.ratio.numerator}/{record.ratio.denominator}",
                f"{float(record.ratio):.12g}",
                f"{elapsed:.3f}",
            ]
        )
        print(f"n={n}: ratio={float(record.ratio):.6f} ({elapsed:.2f}s)", file=sys.stderr)


def main(argv=None) -> int:
    config = parse_config(argv)
    if config.out:
        with open(config.out, "w", newline="") as handle:
            run(config, handle)
    else:
        run(config, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
