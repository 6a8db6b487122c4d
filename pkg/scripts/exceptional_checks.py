#!/usr/bin/env python3
"""Run the static-table verification and the auxiliary bound sweeps in one
go. Exit code is the worst of the two (0 all clear, 2 something failed).

Usage:
  python scripts/exceptional_checks.py
  python scripts/exceptional_checks.py --wmax 5000   # the full bound range
"""

from __future__ import annotations

import argparse
import sys

from blockcensus import cli


def main() -> int:
    ap = argparse.ArgumentParser(description="table checks plus bound sweeps")
    ap.add_argument("--wmax", type=int, default=1000)
    ap.add_argument("--nmax", type=int, default=40)
    ap.add_argument("--data-dir", default=None)
    args = ap.parse_args()

    verify_argv = ["verify-exceptional"]
    if args.data_dir:
        verify_argv.extend(["--data-dir", args.data_dir])
    code_verify = cli.main(verify_argv)

    code_bounds = cli.main(
        ["bounds", "--wmax", str(args.wmax), "--nmax", str(args.nmax)]
    )
    return max(code_verify, code_bounds)


if __name__ == "__main__":
    sys.exit(main())
