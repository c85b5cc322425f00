#!/usr/bin/env python3
"""Diagnostic sweeps behind the counting bounds: growth-envelope ratios for
the partition function and the decay ratio (k+1) p(n-k)/p(n) along k.

Two CSV blocks are written to separate files:

  envelope: m, p(m), p(m)*m/exp(pi*sqrt(2m/3))  (its min/max bracket the
            growth constants empirically)
  decay:    n, k, ratio_float for k from 1 to n at each requested n

    python scripts/bound_diagnostics.py --max-m 300 --decay-n 40 60 --out-prefix diag
"""

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from snchar.bounds import growth_envelope_report
from snchar.partitions import partition_count


@dataclass(frozen=True)
class DiagnosticsConfig:
    max_m: int
    decay_n: tuple[int, ...]
    out_prefix: str | None


def parse_config(argv=None) -> DiagnosticsConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=200)
    parser.add_argument("--decay-n", type=int, nargs="*", default=[40, 60])
    parser.add_argument("--out-prefix", default=None,
                        help="write <prefix>_envelope.csv and <prefix>_decay.csv")
    args = parser.parse_args(argv)
    return DiagnosticsConfig(args.max_m, tuple(args.decay_n), args.out_prefix)


def write_envelope(config: DiagnosticsConfig, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["m", "count", "ratio"])
    ratios = []
    for m in range(1, config.max_m + 1):
        report = growth_envelope_report(m)
        ratios.append(report.ratio)
        writer.writerow([report.m, report.count, f"{report.ratio:.12g}"])
    print(
        f"envelope over m <= {config.max_m}: min={min(ratios):.6f} max={max(ratios):.6f}",
        file=sys.stderr,
    )


def write_decay(config: DiagnosticsConfig, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["n", "k", "ratio_float"])
    for n in config.decay_n:
        pn = partition_count(n)
        for k in range(1, n + 1):
            ratio = Fraction((k + 1) * partition_count(n - k), pn)
            writer.writerow([n, k, f"{float(ratio):.12g}"])


def main(argv=None) -> int:
    config = parse_config(argv)
    if config.out_prefix:
        with open(f"{config.out_prefix}_envelope.csv", "w", newline="") as handle:
            write_envelope(config, handle)
        with open(f"{config.out_prefix}_decay.csv", "w", newline="") as handle:
            write_decay(config, handle)
    else:
        write_envelope(config, sys.stdout)
        write_decay(config, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
