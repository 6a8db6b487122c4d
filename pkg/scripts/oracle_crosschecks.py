#!/usr/bin/env python3
"""Confront the closed-form counting with brute force on every group the
oracle can afford: matrix censuses over tiny fields, wreath-product class
counts, and the multipartition enumeration grid.

Usage:
  python scripts/oracle_crosschecks.py   # full battery, a few seconds
"""

from __future__ import annotations

import sys

from blockcensus import cli

GL_CASES = [
    "1,4,3",
    "2,2,3",
    "2,4,3",
    "2,4,5",
    "2,5,3",
    "2,8,3",
    "2,9,5",
    "3,2,7",
    "3,3,13",
    "3,4,3",
    "3,5,3",
]

GMPN_CASES = ["2,1,2", "2,2,2", "3,1,1", "4,1,2", "4,2,1", "6,2,2", "2,2,3"]


def main() -> int:
    argv = ["oracle"]
    for case in GL_CASES:
        argv.extend(["--gl", case])
    for case in GMPN_CASES:
        argv.extend(["--gmpn", case])
    argv.extend(["--multi", "8,12"])
    return cli.main(argv)


if __name__ == "__main__":
    sys.exit(main())
