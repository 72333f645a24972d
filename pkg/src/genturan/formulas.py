"""Predicted extremal values, computed by building the extremal graph.

Every theorem case maps to a construction, the pattern it avoids and the
quantity counted on it; :func:`predicted_ex` builds and counts.  The only
closed forms kept are :func:`cliques_in_turan` and :func:`f_value`, which
serve as independent cross-checks of the counting code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import prod
from typing import Optional

from . import constructions as C
from .counting import count_copies, count_family
from .errors import ArgumentError, InfeasibleError
from .freeness import Book, Clique, DisjointCliques, ForbiddenPattern, UnionPair
from .graph import Graph, complete_bipartite, complete_graph, disjoint_union, empty_graph, join


class CaseId(str, enum.Enum):
    THM1_I = "thm1i"
    THM1_II = "thm1ii"
    THM2_LOWER = "thm2lower"
    THM2_III = "thm2iii"
    THM3 = "thm3"
    THM4 = "thm4"
    ZYKOV = "zykov"
    MOON_EDGES = "moon"
    PROP_KRR1 = "krr1"
    B_R1_EDGES = "br1"


@dataclass(frozen=True)
class TheoremCase:
    id: CaseId
    n: int
    r: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None

    def params(self) -> dict:
        return {p: getattr(self, p) for p in ("n", "r", "s", "t", "k", "a", "b") if getattr(self, p) is not None}

    def label(self) -> str:
        return f"{self.id.value}(" + ",".join(f"{k}={v}" for k, v in self.params().items()) + ")"


@dataclass
class Prediction:
    """Extremal construction for a case together with what it is scored on."""

    case: TheoremCase
    graph: Graph
    pattern: ForbiddenPattern
    target: list[Graph]
    value: int
    note: str = ""
    extra: dict = field(default_factory=dict)


def cliques_in_turan(n: int, r: int, k: int) -> int:
    """N(K_k, T(n, r)) as the k-th elementary symmetric sum of the part sizes."""
    if r < 1:
        raise ArgumentError("Turán graph needs r >= 1")
    if k < 0:
        raise ArgumentError("clique size must be non-negative")
    sizes = C.turan_parts(n, r)
    if k > len(sizes):
        return 0
    # e_k by the standard recurrence, exact in integers.
    e = [1] + [0] * k
    for size in sizes:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * size
    return e[k]


def f_value(n: int, r: int, s: int, t: int) -> int:
    """f_{r,s,t}(n): product of the floors of (n - s - 2t - 1 + i) / (r - s - t - 1)."""
    if not r > s + t + 1:
        raise ArgumentError(f"f needs r > s + t + 1, got r={r}, s={s}, t={t}")
    if not n > 2 * t + s + 1:
        raise ArgumentError(f"f needs n > 2t + s + 1, got n={n}, s={s}, t={t}")
    if s < 0 or t < 0:
        raise ArgumentError("s and t must be non-negative")
    q = r - s - t - 1
    base = n - s - 2 * t - 1
    return prod((base + i) // q for i in range(q))


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ArgumentError(message)


def _get(case: TheoremCase, *names: str) -> list[int]:
    values = []
    for name in names:
        v = getattr(case, name)
        if v is None:
            raise ArgumentError(f"{case.id.value} requires parameter {name}")
        values.append(v)
    return values


def best_bipartite_plus_edge(n: int, a: int, b: int) -> tuple[int, int, int]:
    """Best K_{m,n-m} plus one edge for counting K_{a,b}.

    Scans ``m = 1..n-1`` and both sides for the extra edge (side 0 is the
    m-part).  Returns ``(m, value, side)`` for the first maximiser.
    """
    if not 1 <= a <= b:
        raise ArgumentError(f"need 1 <= a <= b, got a={a}, b={b}")
    if n < a + b:
        raise InfeasibleError(f"no copy of K_{{{a},{b}}} fits in {n} vertices")
    target = complete_bipartite(a, b)
    best: tuple[int, int, int] | None = None
    for m in range(1, n):
        for side in (0, 1):
            size = m if side == 0 else n - m
            if size < 2:
                continue
            value = count_copies(C.bipartite_plus_edge(m, n, side), target)
            if best is None or value > best[1]:
                best = (m, value, side)
    if best is None:
        raise InfeasibleError(f"no part of size two in any K_{{m,{n}-m}}")
    return best


def prediction(case: TheoremCase) -> Prediction:
    """Build the extremal construction named by ``case`` and score it."""
    cid = case.id
    n = case.n
    _need(n >= 0, "n must be non-negative")

    if cid is CaseId.THM1_I:
        n, k, r = _get(case, "n", "k", "r")
        _need(2 <= r and 1 <= k < r, f"THM1_I needs 1 <= k < r, got k={k}, r={r}")
        _need(n >= 1, "THM1_I needs n >= 1")
        g = join(complete_graph(1), C.turan(n - 1, r - 1))
        return Prediction(case, g, Book(r, 0), [complete_graph(k)], count_copies(g, complete_graph(k)))

    if cid is CaseId.THM1_II:
        n, k, r = _get(case, "n", "k", "r")
        _need(r >= 1 and r <= k < 2 * r, f"THM1_II needs r <= k < 2r, got k={k}, r={r}")
        apex = 2 * k - 2 * r + 1
        parts = 2 * r - k - 1
        _need(n >= apex, f"THM1_II needs n >= 2k - 2r + 1 = {apex}")
        if parts == 0:
            # k = 2r - 1: a single K_{2r-1} plus isolated vertices.
            g = disjoint_union(complete_graph(apex), empty_graph(n - apex))
        else:
            g = join(complete_graph(apex), C.turan(n - apex, parts))
        sizes = list(range(k, 2 * r))
        return Prediction(case, g, Book(r, 0), [complete_graph(j) for j in sizes], count_family(g, sizes))

    if cid in (CaseId.THM2_LOWER, CaseId.THM2_III):
        if cid is CaseId.THM2_III:
            n, r, t = _get(case, "n", "r", "t")
            s = 1
            _need(case.s in (None, 1), "THM2_III is the s = 1 case")
            _need(t >= 1 and t + 3 < r, f"THM2_III needs t >= 1 and t + 3 < r, got t={t}, r={r}")
        else:
            n, r, s, t = _get(case, "n", "r", "s", "t")
            _need(r >= 3 and s >= 1 and t >= 1, "THM2_LOWER needs r >= 3, s >= 1, t >= 1")
            _need(r > s + t + 1, f"THM2_LOWER needs r > s + t + 1, got r={r}, s={s}, t={t}")
        m = s + 2 * t + 1
        _need(n >= m, f"construction needs n >= s + 2t + 1 = {m}")
        g = C.clique_join_turan(m, r - s - t - 1, n)
        target = complete_graph(r + t)
        return Prediction(case, g, Book(r, s), [target], count_copies(g, target))

    if cid is CaseId.THM3:
        n, k, r = _get(case, "n", "k", "r")
        _need(r >= 2 and 1 <= k < r, f"THM3 needs 1 <= k < r, got k={k}, r={r}")
        g = C.turan_plus(n, r - 1)
        return Prediction(case, g, Book(r, 1), [complete_graph(k)], count_copies(g, complete_graph(k)))

    if cid is CaseId.THM4:
        n, a, b = _get(case, "n", "a", "b")
        m, value, side = best_bipartite_plus_edge(n, a, b)
        g = C.bipartite_plus_edge(m, n, side)
        return Prediction(case, g, Book(3, 1), [complete_bipartite(a, b)], value, extra={"m": m, "side": side})

    if cid is CaseId.ZYKOV:
        n, k, r = _get(case, "n", "k", "r")
        _need(2 <= k < r, f"ZYKOV needs 2 <= k < r, got k={k}, r={r}")
        g = C.turan(n, r - 1)
        return Prediction(case, g, Clique(r), [complete_graph(k)], count_copies(g, complete_graph(k)))

    if cid is CaseId.MOON_EDGES:
        n, k, r = _get(case, "n", "k", "r")
        _need(k >= 1 and r >= 2, f"MOON needs k >= 1, r >= 2, got k={k}, r={r}")
        _need(n >= k - 1, f"MOON needs n >= k - 1 = {k - 1}")
        g = join(complete_graph(k - 1), C.turan(n - k + 1, r - 1))
        return Prediction(case, g, DisjointCliques(k, r), [complete_graph(2)], g.num_edges())

    if cid is CaseId.PROP_KRR1:
        n, r = _get(case, "n", "r")
        _need(r >= 3, f"PROP_KRR1 needs r >= 3, got r={r}")
        g = C.turan(n, r - 1)
        target = complete_graph(r - 1)
        pattern = UnionPair(complete_graph(r), complete_graph(r - 1))
        return Prediction(case, g, pattern, [target], count_copies(g, target))

    if cid is CaseId.B_R1_EDGES:
        n, r = _get(case, "n", "r")
        _need(r >= 3, f"B_R1_EDGES needs r >= 3, got r={r}")
        g = C.turan_plus(n, r - 1)
        return Prediction(case, g, Book(r, 1), [complete_graph(2)], g.num_edges())

    raise ArgumentError(f"unknown theorem case {cid!r}")


def predicted_ex(case: TheoremCase) -> int:
    return prediction(case).value


def superadditivity_holds(r: int, s: int, t: int, n1: int, n2: int) -> bool:
    return f_value(n1, r, s, t) + f_value(n2, r, s, t) <= f_value(n1 + n2, r, s, t)

