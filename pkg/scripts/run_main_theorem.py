"""Exhaustive arc-deletion check at order 8, optionally across worker processes.

    python scripts/run_main_theorem.py --workers 4 --json main8.json
"""

import argparse
import sys

from tourpaths.verify import verify_main_theorem


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--no-corollaries", action="store_true")
    ap.add_argument("--json")
    args = ap.parse_args()
    rep = verify_main_theorem(args.order, workers=args.workers, with_corollaries=not args.no_corollaries)
    print(rep.to_text())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.to_json() + "\n")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
