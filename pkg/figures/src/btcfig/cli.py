"""Command-line entry point: render one figure from an experiment directory.

Exit codes: 0 success, 1 missing or schema-violating input (message names
the file and column), 2 bad usage.  No output file is written on error.
"""

from __future__ import annotations

import argparse
import sys

from .io import InputError
from .plots import FIG_KINDS, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render comparison figures from experiment CSVs")
    parser.add_argument("--in", dest="in_dir", required=True,
                        metavar="DIR", help="experiment output directory")
    parser.add_argument("--fig", required=True, choices=FIG_KINDS)
    parser.add_argument("--out", required=True, metavar="PATH",
                        help="image path; format from the extension")
    parser.add_argument("--peers", type=int,
                        help="restrict CCDF/fork-gap data to one peer count")
    parser.add_argument("--tx-rate", type=float,
                        help="restrict CCDF/fork-gap data to one tx rate")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        render(args.fig, args.in_dir, args.out,
               peers=args.peers, tx_rate=args.tx_rate)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
