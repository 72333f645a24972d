#!/usr/bin/env python3
"""Run every verification suite and write JSON and Markdown reports.

    python scripts/verify_all.py --out reports --oracle-limit 8 --jobs 4
"""

import argparse
import time
from pathlib import Path

from genturan.oracle import ResultCache
from genturan.verify import SUITES, verify


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--oracle-limit", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cache", help="oracle result cache (JSON lines)")
    ap.add_argument("--suite", action="append", choices=SUITES, help="default: all suites")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cache = ResultCache(args.cache) if args.cache else None
    md = []
    for suite in args.suite or SUITES:
        start = time.perf_counter()
        report = verify(suite, oracle_max_n=args.oracle_limit, jobs=args.jobs, cache=cache)
        (out / f"{suite}.json").write_text(report.to_json() + "\n")
        md.append(report.to_markdown())
        print(f"{suite:8s} {report.summary()}  ({time.perf_counter() - start:.1f}s)")
    (out / "summary.md").write_text("\n".join(md))


if __name__ == "__main__":
    main()
