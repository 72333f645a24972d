"""Named graph families: Turán graphs, T+, generalized books and joins.

Vertex layout is fixed so tests can address vertices by index: parts of a
multipartite graph occupy consecutive blocks with larger parts first, and
the rootlets of ``book(r, s)`` are ``0..s-1``.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import ArgumentError, InfeasibleError
from .graph import Graph, complete_graph, disjoint_union, empty_graph, join

PartSizes = list


def turan_parts(n: int, r: int) -> list[int]:
    """Balanced part sizes of T(n, r), non-increasing, zeros dropped."""
    if r < 0 or n < 0:
        raise ArgumentError("n and r must be non-negative")
    if r == 0:
        if n > 0:
            raise ArgumentError("T(n, 0) is undefined for n > 0")
        return []
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return [s for s in sizes if s > 0]


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise ArgumentError("part sizes must be positive")
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        adj.extend([full & ~block] * size)
        start += size
    return Graph(n, adj, check=False)


def turan(n: int, r: int) -> Graph:
    """The Turán graph T(n, r); equals K_n when r >= n."""
    return complete_multipartite(turan_parts(n, r))


def turan_plus(n: int, r: int) -> Graph:
    """T(n, r) plus an edge between the two lowest vertices of its last part.

    When ``r < n < 2r`` the smallest parts are singletons; the edge then goes
    into the last part of size two.
    """
    sizes = turan_parts(n, r)
    hosts = [i for i, size in enumerate(sizes) if size >= 2]
    if not hosts:
        raise InfeasibleError(f"T({n},{r}) has no part with two vertices")
    first = sum(sizes[: hosts[-1]])
    return turan(n, r).with_edge(first, first + 1)


def book(r: int, s: int) -> Graph:
    """B_{r,s}: two r-cliques sharing exactly s vertices.

    Rootlets are ``0..s-1``, the first page ``s..r-1``, the second page
    ``r..2r-s-1``.
    """
    if not 0 <= s <= r:
        raise ArgumentError(f"book needs 0 <= s <= r, got r={r}, s={s}")
    n = 2 * r - s
    first = (1 << r) - 1
    second = ((1 << s) - 1) | (((1 << (r - s)) - 1) << r)
    adj = []
    for v in range(n):
        m = 0
        if first >> v & 1:
            m |= first
        if second >> v & 1:
            m |= second
        adj.append(m & ~(1 << v))
    return Graph(n, adj, check=False)


def disjoint_cliques(k: int, r: int) -> Graph:
    """kK_r."""
    g = empty_graph(0)
    for _ in range(k):
        g = disjoint_union(g, complete_graph(r))
    return g


def clique_join_turan(m: int, q: int, n: int) -> Graph:
    """K_m joined with T(n - m, q)."""
    if m < 0 or n < m:
        raise ArgumentError(f"need n >= m >= 0, got m={m}, n={n}")
    if q < 1:
        raise ArgumentError("the Turán part needs q >= 1")
    return join(complete_graph(m), turan(n - m, q))


def bipartite_plus_edge(m: int, n: int, side: int = 0) -> Graph:
    """K_{m, n-m} with one extra edge inside part ``side`` (0: the m-part)."""
    if not 0 < m < n:
        raise ArgumentError(f"need 0 < m < n, got m={m}, n={n}")
    if side not in (0, 1):
        raise ArgumentError(f"side must be 0 or 1, got {side}")
    size = m if side == 0 else n - m
    if size < 2:
        raise InfeasibleError(f"part {side} of K_{{{m},{n - m}}} has fewer than two vertices")
    first = 0 if side == 0 else m
    g = complete_multipartite([m, n - m])
    return g.with_edge(first, first + 1)
