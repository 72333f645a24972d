"""Theorem verification grids.

Each suite walks a parameter grid.  At every point the predicted extremal
construction is built, checked to avoid its forbidden pattern, counted, and
(when n is within the oracle limit) compared with the exhaustive value:

* ``oracle < predicted`` for a free construction is impossible, because
  the construction is one of the graphs the oracle maximises over; it is
  raised as a :class:`ConsistencyError` with a reproduction bundle;
* otherwise the relation (equal or oracle_greater) is recorded.

The theorems hold "for n large enough", so equality is recorded rather than
required here; :mod:`tests.test_acceptance` pins the cases where it must hold.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import graph6
from .errors import ArgumentError, ConsistencyError
from .formulas import CaseId, TheoremCase, f_value, prediction
from .freeness import contains
from .oracle import ResultCache, cache_key, ex_oracle_many, oracle_limit

SUITES = ("zykov", "thm1", "thm2", "thm3", "thm4", "krr1", "f_props")


@dataclass
class Row:
    case: str
    params: dict
    predicted: int
    oracle: Optional[int]
    relation: str
    construction: str = ""
    construction_free: bool = True
    witnesses: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["predicted"] = str(self.predicted)
        d["oracle"] = None if self.oracle is None else str(self.oracle)
        return d


@dataclass
class VerifyReport:
    suite: str
    config: dict
    rows: list[Row]

    def summary(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for row in self.rows:
            out[row.relation] = out.get(row.relation, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "config": self.config,
                "summary": self.summary(),
                "rows": [r.to_dict() for r in self.rows],
            },
            indent=2,
            sort_keys=True,
        )

    def to_markdown(self) -> str:
        lines = [
            f"### {self.suite}",
            "",
            "| case | predicted | oracle | relation |",
            "|---|---:|---:|---|",
        ]
        for r in self.rows:
            oracle = "" if r.oracle is None else str(r.oracle)
            lines.append(f"| {r.case} | {r.predicted} | {oracle} | {r.relation} |")
        lines.append("")
        lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in self.summary().items()))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case", "predicted", "oracle", "relation", "witness"])
        for r in self.rows:
            writer.writerow([r.case, r.predicted, "" if r.oracle is None else r.oracle, r.relation,
                             r.witnesses[0] if r.witnesses else ""])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "md":
            return self.to_markdown()
        if fmt == "csv":
            return self.to_csv()
        raise ArgumentError(f"unknown format {fmt!r}")


# -- grids ------------------------------------------------------------------------------------


def _rng(grid: dict, key: str, default: Iterable[int]) -> list[int]:
    value = grid.get(key, default)
    if isinstance(value, int):
        return [value]
    return list(value)


def suite_cases(suite: str, grid: Optional[dict] = None) -> list[TheoremCase]:
    """Theorem cases of a suite, in deterministic grid order."""
    grid = grid or {}
    cases: list[TheoremCase] = []
    if suite == "zykov":
        for r in _rng(grid, "r", range(3, 6)):
            for k in _rng(grid, "k", range(2, r)):
                if 2 <= k < r:
                    for n in _rng(grid, "n", range(5, 9)):
                        cases.append(TheoremCase(CaseId.ZYKOV, n=n, k=k, r=r))
    elif suite == "thm1":
        for r in _rng(grid, "r", range(2, 4)):
            for k in _rng(grid, "k", range(1, 2 * r)):
                cid = CaseId.THM1_I if k < r else CaseId.THM1_II
                if k >= 2 * r:
                    continue
                for n in _rng(grid, "n", range(2 * r, 8)):
                    cases.append(TheoremCase(cid, n=n, k=k, r=r))
    elif suite == "thm2":
        for r in _rng(grid, "r", range(4, 6)):
            for s in _rng(grid, "s", range(1, r)):
                for t in _rng(grid, "t", range(1, r)):
                    if not r > s + t + 1:
                        continue
                    cid = CaseId.THM2_III if s == 1 and t + 3 < r else CaseId.THM2_LOWER
                    for n in _rng(grid, "n", range(s + 2 * t + 2, min(s + 2 * t + 5, 9))):
                        cases.append(TheoremCase(cid, n=n, r=r, s=s, t=t))
    elif suite == "thm3":
        for r in _rng(grid, "r", [3, 4]):
            for k in _rng(grid, "k", range(2, r)):
                if 1 <= k < r:
                    for n in _rng(grid, "n", range(5, 9)):
                        cases.append(TheoremCase(CaseId.THM3, n=n, k=k, r=r))
    elif suite == "thm4":
        for a, b in grid.get("ab", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]):
            for n in _rng(grid, "n", range(5, 9)):
                if n >= a + b:
                    cases.append(TheoremCase(CaseId.THM4, n=n, a=a, b=b))
    elif suite == "krr1":
        for r in _rng(grid, "r", [3]):
            for n in _rng(grid, "n", range(6, 9)):
                cases.append(TheoremCase(CaseId.PROP_KRR1, n=n, r=r))
    else:
        raise ArgumentError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return cases


# -- running -------------------------------------------------------------------------------


def _f_props_rows(grid: dict) -> list[Row]:
    rows = []
    for r in _rng(grid, "r", range(2, 8)):
        for s in _rng(grid, "s", range(0, r)):
            for t in _rng(grid, "t", range(0, r)):
                if not r > s + t + 1:
                    continue
                lo = 2 * t + s + 2
                hi = max(_rng(grid, "n", [30]))
                for n1 in range(lo, hi + 1):
                    for n2 in range(n1, hi + 1):
                        lhs = f_value(n1, r, s, t) + f_value(n2, r, s, t)
                        rhs = f_value(n1 + n2, r, s, t)
                        rows.append(Row(
                            case=f"f_props(r={r},s={s},t={t},n1={n1},n2={n2})",
                            params={"r": r, "s": s, "t": t, "n1": n1, "n2": n2},
                            predicted=lhs,
                            oracle=rhs,
                            relation="holds" if lhs <= rhs else "violated",
                        ))
    return rows


def _oracle_group(args):
    n, pattern, families, witnesses = args
    return ex_oracle_many(n, pattern, families, witnesses=witnesses, limit=n)


def verify(
    suite: str,
    grid: Optional[dict] = None,
    oracle_max_n: Optional[int] = None,
    witnesses: int = 3,
    jobs: int = 1,
    cache: Optional[ResultCache] = None,
) -> VerifyReport:
    grid = dict(grid or {})
    limit = oracle_limit() if oracle_max_n is None else oracle_max_n
    config = {"grid": {k: list(v) if not isinstance(v, int) else v for k, v in grid.items()},
              "oracle_limit": limit}
    if suite == "f_props":
        return VerifyReport(suite, config, _f_props_rows(grid))

    preds = [prediction(case) for case in suite_cases(suite, grid)]
    for p in preds:
        if contains(p.graph, p.pattern):
            raise ConsistencyError(f"construction for {p.case.label()} contains {p.pattern}")

    # One enumeration per (n, pattern); every target family scored on it.
    groups: dict[tuple, list[int]] = {}
    for i, p in enumerate(preds):
        if p.case.n <= limit:
            groups.setdefault((p.case.n, str(p.pattern)), []).append(i)
    oracle_values: dict[int, tuple[int, list[str]]] = {}
    pending = []
    for (n, _), idxs in groups.items():
        pattern = preds[idxs[0]].pattern
        todo = []
        for i in idxs:
            hit = cache.get(cache_key(n, preds[i].target, pattern)) if cache else None
            if hit is not None:
                oracle_values[i] = (hit.value, hit.witnesses)
            else:
                todo.append(i)
        if todo:
            pending.append((todo, (n, pattern, [preds[i].target for i in todo], witnesses)))
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_oracle_group, [args for _, args in pending]))
    else:
        results = [_oracle_group(args) for _, args in pending]
    for (todo, (n, pattern, _, _)), res in zip(pending, results):
        for i, r in zip(todo, res):
            oracle_values[i] = (r.value, r.witnesses)
            if cache:
                cache.put(cache_key(n, preds[i].target, pattern), r)

    rows = []
    for i, p in enumerate(preds):
        row = Row(case=p.case.label(), params=p.case.params(), predicted=p.value, oracle=None,
                  relation="oracle_skipped", construction=graph6.encode(p.graph))
        if i in oracle_values:
            value, wit = oracle_values[i]
            row.oracle, row.witnesses = value, wit
            if value < p.value:
                bundle = json.dumps({"case": p.case.label(), "construction": row.construction,
                                     "pattern": str(p.pattern), "predicted": str(p.value),
                                     "oracle": str(value)})
                raise ConsistencyError(f"oracle below a free construction: {bundle}")
            row.relation = "equal" if value == p.value else "oracle_greater"
        rows.append(row)
    return VerifyReport(suite, config, rows)
