#!/usr/bin/env python3
"""Smallest n from which the oracle agrees with each predicted construction.

The theorems are asymptotic; this scans n upward for a handful of cases and
prints where the exhaustive value first matches the construction value (and
stays matched up to the oracle limit).
"""

import argparse

from genturan.formulas import CaseId, TheoremCase, prediction
from genturan.oracle import ex_oracle_many

CASES = [
    ("thm1i k=2 r=3", dict(id=CaseId.THM1_I, k=2, r=3)),
    ("thm1ii k=3 r=3", dict(id=CaseId.THM1_II, k=3, r=3)),
    ("thm1ii k=4 r=3", dict(id=CaseId.THM1_II, k=4, r=3)),
    ("thm3 k=2 r=4", dict(id=CaseId.THM3, k=2, r=4)),
    ("thm3 k=3 r=4", dict(id=CaseId.THM3, k=3, r=4)),
    ("thm2lower r=4 s=1 t=1", dict(id=CaseId.THM2_LOWER, r=4, s=1, t=1)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for name, params in CASES:
        cells = []
        for n in range(4, args.max_n + 1):
            try:
                p = prediction(TheoremCase(n=n, **params))
            except ValueError:
                continue
            oracle = ex_oracle_many(n, p.pattern, [p.target], witnesses=1, jobs=args.jobs, limit=n)[0]
            cells.append((n, p.value, oracle.value))
        row = "  ".join(f"n={n}:{pv}/{ov}" for n, pv, ov in cells)
        matched = [n for n, pv, ov in cells if pv == ov]
        tail = next((n for n, _, _ in cells if all(pv == ov for m, pv, ov in cells if m >= n)), None)
        print(f"{name:24s} {row}")
        print(f"{'':24s} predicted/oracle; equal at {matched}; equal from n={tail}")


if __name__ == "__main__":
    main()
