#!/usr/bin/env python3
"""Regenerate the PSL2(p) bound table.

Usage: python3 scripts/psl2_table.py [pmin] [pmax] [--computed] [--out FILE]

Defaults to the closed-form (paper-formula) mode over 7 <= p <= 199,
matching the published values: maxn = 2, 3, 4 at p = 7, 11, 13 and
maxn = p - 1 for every prime p >= 167.
"""

import argparse
import sys

from edcert.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("pmin", type=int, nargs="?", default=7)
    parser.add_argument("pmax", type=int, nargs="?", default=199)
    parser.add_argument("--computed", action="store_true", help="strict computed mode instead")
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    argv = [
        "table", "--family", "PSL2",
        "--pmin", str(args.pmin), "--pmax", str(args.pmax),
        "--mode", "computed" if args.computed else "paper-formula",
        "--csv",
    ]
    if args.out:
        argv += ["--out", args.out]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
