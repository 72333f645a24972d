"""Exhaustive generalized Turán numbers for small n.

F-free graphs are generated up to isomorphism by canonical augmentation:
a graph on n vertices is grown from one on n - 1 vertices by adding vertex
``n - 1`` with an arbitrary neighbourhood, and the child is kept only when
the new vertex lies in the canonical orbit of the child (the orbit of the
vertex of maximal invariant that receives the last canonical label).
Isomorphic siblings of the same parent are merged by canonical form.
Because subgraph containment is hereditary, an F-containing node is never
expanded.

A labelled brute-force generator (all ``2**C(n,2)`` graphs plus canonical
dedup) is kept as an independent cross-check for n <= 6.
"""

from __future__ import annotations

import json
import os
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .canon import canonical_form, canonical_labeling
from .counting import count_copies
from .errors import ArgumentError, CapacityError
from .freeness import Clique, ForbiddenPattern, Nothing, contains, find_clique
from .graph import Graph, all_labeled_graphs, empty_graph, popcount

DEFAULT_LIMIT = 10
LABELED_LIMIT = 6
LIMIT_ENV = "GENTURAN_ORACLE_LIMIT"


def oracle_limit() -> int:
    value = os.environ.get(LIMIT_ENV)
    return int(value) if value else DEFAULT_LIMIT


def _check_limit(n: int, limit: Optional[int]) -> None:
    if n < 0:
        raise ArgumentError("n must be non-negative")
    limit = oracle_limit() if limit is None else limit
    if n > limit:
        raise CapacityError(f"exhaustive search at n={n} exceeds the limit {limit}")


# -- canonical augmentation ------------------------------------------------------------


def _invariants(adj: Sequence[int]) -> list[tuple]:
    deg = [popcount(m) for m in adj]
    out = []
    for m in adj:
        nd = []
        while m:
            low = m & -m
            nd.append(deg[low.bit_length() - 1])
            m ^= low
        nd.sort()
        out.append((len(nd), tuple(nd)))
    return out


def _is_canonical_extension(child: Graph, x: int) -> bool:
    inv = _invariants(child.adj)
    best = max(inv)
    if inv[x] != best:
        return False
    tied = [v for v in range(child.n) if inv[v] == best]
    if len(tied) == 1:
        return True
    _, position = canonical_labeling(child)
    w = max(tied, key=position.__getitem__)
    if w == x:
        return True
    marks_x = [0 if v == x else 1 for v in range(child.n)]
    marks_w = [0 if v == w else 1 for v in range(child.n)]
    return canonical_form(child, marks_x) == canonical_form(child, marks_w)


def _new_vertex_free(child: Graph, f: ForbiddenPattern) -> bool:
    # The parent is f-free, so only copies through the new vertex matter.
    if isinstance(f, Nothing):
        return True
    if isinstance(f, Clique):
        x = child.n - 1
        return find_clique(child.adj, child.adj[x], f.r - 1) is None
    return not contains(child, f)


def children(parent: Graph, f: ForbiddenPattern) -> list[Graph]:
    """Accepted one-vertex extensions of ``parent``, one per isomorphism class."""
    n = parent.n
    x = n
    seen: set[str] = set()
    out: list[Graph] = []
    padj = parent.adj
    for nbhd in range(1 << n):
        adj = [m | ((nbhd >> v & 1) << x) for v, m in enumerate(padj)]
        adj.append(nbhd)
        child = Graph(n + 1, adj, check=False)
        if not _is_canonical_extension(child, x):
            continue
        if not _new_vertex_free(child, f):
            continue
        key = canonical_form(child)
        if key not in seen:
            seen.add(key)
            out.append(child)
    return out


def _grow(g: Graph, n: int, f: ForbiddenPattern) -> Iterator[Graph]:
    if g.n == n:
        yield g
        return
    for child in children(g, f):
        yield from _grow(child, n, f)


def enumerate_free(n: int, f: ForbiddenPattern, limit: Optional[int] = None) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of f-free graphs on n vertices."""
    _check_limit(n, limit)
    root = empty_graph(0)
    if contains(root, f):
        return
    yield from _grow(root, n, f)


def labeled_free_classes(n: int, f: ForbiddenPattern) -> dict[str, Graph]:
    """Brute force: canonical form -> first labelled f-free graph of that class."""
    if n > LABELED_LIMIT:
        raise CapacityError(f"labelled enumeration is limited to n <= {LABELED_LIMIT}")
    classes: dict[str, Graph] = {}
    for g in all_labeled_graphs(n):
        if contains(g, f):
            continue
        key = canonical_form(g)
        if key not in classes:
            classes[key] = g
    return classes


# -- oracle ------------------------------------------------------------------------------


@dataclass
class OracleResult:
    value: int
    witnesses: list[str] = field(default_factory=list)
    graphs_enumerated: int = 0
    elapsed: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "value": str(self.value),
            "witnesses": self.witnesses,
            "graphs_enumerated": self.graphs_enumerated,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


@dataclass
class _Partial:
    value: int
    keys: list[str]
    count: int


def _score_stream(graphs, families: Sequence[Sequence[Graph]], witnesses: int) -> list[_Partial]:
    best = [-1] * len(families)
    keys: list[list[str]] = [[] for _ in families]
    count = 0
    for g in graphs:
        count += 1
        key = None
        for i, hs in enumerate(families):
            value = sum(count_copies(g, h) for h in hs)
            if value < best[i]:
                continue
            if key is None:
                key = canonical_form(g)
            if value > best[i]:
                best[i] = value
                keys[i] = [key]
            else:
                keys[i].append(key)
                if len(keys[i]) > 4 * witnesses + 16:
                    keys[i] = sorted(keys[i])[:witnesses]
    return [_Partial(best[i], sorted(keys[i])[:witnesses], count) for i in range(len(families))]


def _score_subtree(args) -> list[_Partial]:
    root, n, f, families, witnesses = args
    return _score_stream(_grow(root, n, f), families, witnesses)


def ex_oracle_many(
    n: int,
    f: ForbiddenPattern,
    families: Sequence[Sequence[Graph]],
    witnesses: int = 10,
    jobs: int = 1,
    limit: Optional[int] = None,
) -> list[OracleResult]:
    """One enumeration of f-free graphs, scored against several target families."""
    if not families or any(not hs for hs in families):
        raise ArgumentError("target families must be non-empty")
    _check_limit(n, limit)
    start = time.perf_counter()
    if jobs <= 1 or n < 4:
        runs = [_score_stream(enumerate_free(n, f, limit), families, witnesses)]
    else:
        split = min(n - 1, 5)
        roots = list(enumerate_free(split, f, limit))
        tasks = [(root, n, f, [list(hs) for hs in families], witnesses) for root in roots]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            runs = list(pool.map(_score_subtree, tasks))
    total = sum(run[0].count for run in runs) if runs else 0
    if total == 0:
        raise ArgumentError(f"no {f}-free graph on {n} vertices")
    elapsed = time.perf_counter() - start
    results = []
    for i in range(len(families)):
        value = max(run[i].value for run in runs)
        keys = sorted(k for run in runs if run[i].value == value for k in run[i].keys)[:witnesses]
        results.append(OracleResult(value, keys, total, elapsed))
    return results


def ex_family_oracle(
    n: int,
    hs: Sequence[Graph],
    f: ForbiddenPattern,
    witnesses: int = 10,
    jobs: int = 1,
    limit: Optional[int] = None,
) -> OracleResult:
    """max over f-free n-vertex graphs G of the sum of N(h, G) over ``hs``."""
    if not hs:
        raise ArgumentError("target family must be non-empty")
    return ex_oracle_many(n, f, [hs], witnesses=witnesses, jobs=jobs, limit=limit)[0]


def ex_oracle(n: int, h: Graph, f: ForbiddenPattern, witnesses: int = 10, jobs: int = 1,
              limit: Optional[int] = None) -> OracleResult:
    """ex(n, h, f) by exhaustive search."""
    return ex_family_oracle(n, [h], f, witnesses=witnesses, jobs=jobs, limit=limit)


# -- result cache -----------------------------------------------------------------------------


def pattern_key(f: ForbiddenPattern) -> str:
    g = f.graph()
    return "none" if g is None else canonical_form(g)


def cache_key(n: int, hs: Sequence[Graph], f: ForbiddenPattern) -> str:
    return json.dumps({"n": n, "h": [canonical_form(h) for h in hs], "f": pattern_key(f)}, sort_keys=True)


class ResultCache:
    """Append-only JSON-lines log of oracle results."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def get(self, key: str) -> Optional[OracleResult]:
        if not self.path.exists():
            return None
        found = None
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                if entry.get("key") == key:
                    r = entry["result"]
                    found = OracleResult(int(r["value"]), r["witnesses"], r["graphs_enumerated"], 0.0)
        return found

    def put(self, key: str, result: OracleResult) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps({"key": key, "result": result.to_dict(timing=False)}, sort_keys=True) + "\n")


def cached_oracle(n: int, hs: Sequence[Graph], f: ForbiddenPattern, cache: Optional[ResultCache] = None,
                  **kwargs) -> OracleResult:
    if cache is None:
        return ex_family_oracle(n, hs, f, **kwargs)
    key = cache_key(n, hs, f)
    hit = cache.get(key)
    if hit is not None:
        return hit
    result = ex_family_oracle(n, hs, f, **kwargs)
    cache.put(key, result)
    return result
