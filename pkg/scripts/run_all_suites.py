"""Run every verification suite at its default order and write one JSON report each.

    python scripts/run_all_suites.py --out reports/
"""

import argparse
import pathlib
import time

from tourpaths.verify import SUITES, run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--skip", nargs="*", default=[])
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    for suite in SUITES:
        if suite in args.skip:
            continue
        rep = run_suite(suite, workers=args.workers)
        (out / f"{suite}.json").write_text(rep.to_json() + "\n")
        print(rep.to_text().splitlines()[0])
    print(f"total {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
