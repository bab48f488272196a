"""Command-line entry point for the verification suites.

Usage:
    verify commutators --config fixtures/singular_n3.json
    verify gamma       --config fixtures/singular_n3.json --json report.json
    verify formulas    --config fixtures/singular_n3.json --seed 7
    verify n3          --config fixtures/all_equal_n3.json --window 4

Exit status is 0 iff every check in the suite passed.
"""

from __future__ import annotations

import argparse
import sys

from .verify import SUITES, Config, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Exact verification suites for tableau modules of gl(n).")
    sub = parser.add_subparsers(dest="suite", required=True)
    help_lines = {
        "commutators": "defining relations on every window basis symbol",
        "gamma": "central family: eigenvalues, 2x2 blocks, multiplicities",
        "formulas": "coefficient identities, parity, poles, finite-dim regression",
        "n3": "ten-piece decomposition over the all-equal n=3 base",
    }
    for name in SUITES:
        p = sub.add_parser(name, help=help_lines[name])
        p.add_argument("--config", required=True, help="JSON config file")
        p.add_argument("--window", type=int, default=None,
                       help="override the window bound")
        p.add_argument("--seed", type=int, default=None,
                       help="override the RNG seed")
        p.add_argument("--json", default=None, metavar="OUT",
                       help="write the JSON report here")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = Config.from_file(args.config).with_overrides(
        window=args.window, seed=args.seed)
    report = run_suite(args.suite, cfg)
    print(report.summary())
    for ex in report.exemplars:
        print(f"  exemplar: {ex}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
