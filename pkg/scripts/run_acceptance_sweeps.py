#!/usr/bin/env python3
"""Run the full acceptance grids as sweeps and write their reports.

This reproduces the heavy part of tests/test_acceptance.py as standalone
report files (useful for eyeballing records or diffing runs on different
machines).  Writes JSONL files under reports/ and prints one summary line
per grid.
"""

import argparse
import sys
from pathlib import Path

from qcong.sweep import build_config, format_summary, run_sweep

GRIDS = {
    "symmetric": {
        "theorems": ["1.1", "1.2"],
        "n": ["2..12"],
        "d": ["1..6"],
        "r": ["-5..5"],
        "families": ["ones", "delta:0", "delta:1", "monomial_q:1",
                     "random_poly:1:3", "random_poly:2:3", "random_poly:3:3"],
    },
    "integer_parameter": {
        "theorems": ["2.1"],
        "n": ["2..10"],
        "s": ["-3..3"],
        "families": ["ones", "delta:1", "random_poly:1:3", "random_poly:2:3"],
    },
    "bivariate_and_rational": {
        "theorems": ["guo_zeng", "sun_p"],
        "n": ["2..8"],
        "d": ["1..4"],
        "r": ["-3..3"],
    },
    "lemmas": {
        "theorems": ["lemmas"],
        "n": ["2..12"],
        "s": ["-3..-1", "1..3"],
    },
    "classical": {
        "theorems": ["classical"],
        "n": ["3", "5", "7", "11"],
        "alphas": ["2", "1/2", "-1/3", "5/2"],
        "classical_seeds": ["10"],
    },
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out-dir", default="reports")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    any_failed = False
    for name, raw in GRIDS.items():
        raw = dict(raw, output=[str(out_dir / f"{name}.jsonl")])
        if args.workers is not None:
            raw["workers"] = [str(args.workers)]
        summary = run_sweep(build_config(raw))
        print(f"{name:24s} {format_summary(summary)}")
        any_failed = any_failed or summary.failed > 0
    return 1 if any_failed else 0


if __name__ == "__main__":
    sys.exit(main())
