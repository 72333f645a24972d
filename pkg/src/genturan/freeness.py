"""Subgraph containment for the forbidden patterns of the toolkit.

Patterns with clique structure (K_r, B_{r,s}, kK_r, K_r + K_{r'}) get
dedicated searches over neighbour masks; any other pattern falls back to a
backtracking embedding search.  Every search stops at the first witness.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

from .constructions import book, disjoint_cliques
from .counting import _search_order, clique_sets, is_complete
from .errors import ArgumentError
from .graph import Graph, bits, complete_graph, disjoint_union, popcount


@dataclass(frozen=True)
class Clique:
    r: int

    def graph(self) -> Graph:
        return complete_graph(self.r)

    def __str__(self) -> str:
        return f"clique:{self.r}"


@dataclass(frozen=True)
class Book:
    """B_{r,s}, two r-cliques sharing exactly s vertices."""

    r: int
    s: int

    def __post_init__(self):
        if not 0 <= self.s <= self.r:
            raise ArgumentError(f"book needs 0 <= s <= r, got r={self.r}, s={self.s}")

    def graph(self) -> Graph:
        return book(self.r, self.s)

    def __str__(self) -> str:
        return f"book:{self.r},{self.s}"


@dataclass(frozen=True)
class DisjointCliques:
    """kK_r."""

    k: int
    r: int

    def graph(self) -> Graph:
        return disjoint_cliques(self.k, self.r)

    def __str__(self) -> str:
        return f"kcliques:{self.k},{self.r}"


@dataclass(frozen=True)
class UnionPair:
    """G1 + G2, vertex-disjoint copies of two graphs."""

    first: Graph
    second: Graph

    def graph(self) -> Graph:
        return disjoint_union(self.first, self.second)

    def __str__(self) -> str:
        from . import graph6

        return f"union:{graph6.encode(self.first)},{graph6.encode(self.second)}"


@dataclass(frozen=True)
class Explicit:
    pattern: Graph

    def graph(self) -> Graph:
        return self.pattern

    def __str__(self) -> str:
        from . import graph6

        return f"g6:{graph6.encode(self.pattern)}"


@dataclass(frozen=True)
class Nothing:
    """A pattern no graph contains; every graph is free of it."""

    def graph(self) -> None:
        return None

    def __str__(self) -> str:
        return "none"


ForbiddenPattern = Union[Clique, Book, DisjointCliques, UnionPair, Explicit, Nothing]


# -- clique primitives -------------------------------------------------------------


def color_bound(adj: Sequence[int], cand: int) -> int:
    """Number of colours used by greedy colouring of ``cand``.

    An upper bound on the clique number of the induced subgraph.
    """
    colors = 0
    while cand:
        colors += 1
        avail = cand
        while avail:
            low = avail & -avail
            cand ^= low
            avail &= ~adj[low.bit_length() - 1] & ~low
    return colors


def find_clique(adj: Sequence[int], cand: int, k: int) -> Optional[int]:
    """Mask of some k-clique inside ``cand``, or None."""
    if k <= 0:
        return 0
    if popcount(cand) < k:
        return None
    if k == 1:
        return cand & -cand
    if color_bound(adj, cand) < k:
        return None
    while cand:
        if popcount(cand) < k:
            return None
        low = cand & -cand
        cand ^= low
        sub = adj[low.bit_length() - 1] & cand
        if popcount(sub) >= k - 1:
            found = find_clique(adj, sub, k - 1)
            if found is not None:
                return found | low
    return None


def find_disjoint_cliques(adj: Sequence[int], cand: int, sizes: Sequence[int]) -> Optional[list[int]]:
    """Pairwise disjoint cliques of the given sizes inside ``cand``.

    Backtracks over every choice of the first clique: a greedy first pick
    can block the others even when a valid family exists.
    """
    sizes = sorted((s for s in sizes if s > 0), reverse=True)
    if not sizes:
        return []
    if popcount(cand) < sum(sizes):
        return None
    if len(sizes) == 1:
        found = find_clique(adj, cand, sizes[0])
        return None if found is None else [found]
    first, rest = sizes[0], sizes[1:]
    uniform = all(s == first for s in rest)

    def grow(partial: int, pcand: int, need: int, lowest: int) -> Optional[list[int]]:
        # Whatever the first clique becomes, the next one must fit outside it.
        if find_clique(adj, cand & ~partial & lowest, rest[0]) is None:
            return None
        if need == 0:
            others = find_disjoint_cliques(adj, cand & ~partial & lowest, rest)
            return None if others is None else [partial] + others
        if popcount(pcand) < need or (need > 1 and color_bound(adj, pcand) < need):
            return None
        while pcand:
            low = pcand & -pcand
            pcand ^= low
            v = low.bit_length() - 1
            nxt_lowest = lowest
            if partial == 0 and uniform:
                # Later cliques have larger minimum vertex than the first.
                nxt_lowest = lowest & ~((low << 1) - 1)
            found = grow(partial | low, pcand & adj[v], need - 1, nxt_lowest)
            if found is not None:
                return found
        return None

    return grow(0, cand, first, -1)


# -- books ---------------------------------------------------------------------------


def find_book(g: Graph, r: int, s: int) -> Optional[int]:
    """Vertex mask of some copy of B_{r,s} in g, or None."""
    if not 0 <= s <= r:
        raise ArgumentError(f"book needs 0 <= s <= r, got r={r}, s={s}")
    adj = g.adj
    if s == r:
        return find_clique(adj, g.vertex_mask, r)
    page = r - s
    for root in clique_sets(adj, g.vertex_mask, s):
        common = g.vertex_mask & ~root
        for v in bits(root):
            common &= adj[v]
        if popcount(common) < 2 * page:
            continue
        pair = find_disjoint_cliques(adj, common, [page, page])
        if pair is not None:
            return root | pair[0] | pair[1]
    return None


def is_book_free(g: Graph, r: int, s: int) -> bool:
    if not 0 <= s < r:
        raise ArgumentError(f"is_book_free needs 0 <= s < r, got r={r}, s={s}")
    return find_book(g, r, s) is None


def is_rootlet(g: Graph, v: int, r: int, s: int) -> bool:
    """Whether v is one of the s shared vertices of some copy of B_{r,s}."""
    g.check_vertex(v)
    if not 1 <= s <= r:
        raise ArgumentError(f"is_rootlet needs 1 <= s <= r, got r={r}, s={s}")
    adj = g.adj
    page = r - s
    bit = 1 << v
    for rest in clique_sets(adj, adj[v], s - 1):
        root = rest | bit
        common = g.vertex_mask & ~root
        for u in bits(root):
            common &= adj[u]
        if page == 0:
            return True
        if popcount(common) >= 2 * page and find_disjoint_cliques(adj, common, [page, page]) is not None:
            return True
    return False


# -- generic -----------------------------------------------------------------------


def find_embedding(g: Graph, h: Graph) -> Optional[list[int]]:
    """Images of h's vertices under some embedding into g, or None."""
    if h.n > g.n:
        return None
    if h.n == 0:
        return []
    order = _search_order(h)
    pos = {x: i for i, x in enumerate(order)}
    back = [[pos[y] for y in bits(h.adj[x]) if pos[y] < i] for i, x in enumerate(order)]
    gdeg = g.degrees()
    hdeg = [h.degree(x) for x in order]
    images = [0] * h.n

    def rec(i: int, used: int) -> bool:
        if i == h.n:
            return True
        cand = g.vertex_mask & ~used
        for j in back[i]:
            cand &= g.adj[images[j]]
        for w in bits(cand):
            if gdeg[w] >= hdeg[i]:
                images[i] = w
                if rec(i + 1, used | 1 << w):
                    return True
        return False

    if not rec(0, 0):
        return None
    result = [0] * h.n
    for i, x in enumerate(order):
        result[x] = images[i]
    return result


def witness(g: Graph, f: ForbiddenPattern) -> Optional[int]:
    """Vertex mask of one copy of ``f`` in g, or None if g is f-free."""
    adj = g.adj
    if isinstance(f, Nothing):
        return None
    if isinstance(f, Clique):
        return find_clique(adj, g.vertex_mask, f.r)
    if isinstance(f, Book):
        return find_book(g, f.r, f.s)
    if isinstance(f, DisjointCliques):
        found = find_disjoint_cliques(adj, g.vertex_mask, [f.r] * f.k)
        return None if found is None else sum(found)
    if isinstance(f, UnionPair) and is_complete(f.first) and is_complete(f.second):
        found = find_disjoint_cliques(adj, g.vertex_mask, [f.first.n, f.second.n])
        return None if found is None else sum(found)
    if isinstance(f, (UnionPair, Explicit)):
        images = find_embedding(g, f.graph())
        return None if images is None else sum(1 << w for w in images)
    raise ArgumentError(f"unknown pattern {f!r}")


def contains(g: Graph, f: ForbiddenPattern) -> bool:
    return witness(g, f) is not None
