"""Immutable simple graphs backed by per-vertex neighbour bit masks.

Vertex ``v`` of a :class:`Graph` on ``n`` vertices is the bit ``1 << v``;
``g.adj[v]`` is the mask of its neighbours.  Python integers are unbounded,
so the same representation serves both small graphs (where every mask fits
in a machine word) and the large constructions used by the formula module.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, CapacityError

MAX_VERTICES = 1 << 14


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_capacity(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every builder returns a fresh graph.  Equality
    is labelled equality (same ``n``, same edge set); use
    :func:`genturan.canon.canonical_form` for isomorphism.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, check: bool = True):
        if n < 0:
            raise ArgumentError("vertex count must be non-negative")
        _check_capacity(n)
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise ArgumentError(f"expected {n} neighbour masks, got {len(adj)}")
        if check:
            full = (1 << n) - 1
            for v, m in enumerate(adj):
                if m & ~full or m < 0:
                    raise ArgumentError(f"neighbour mask of {v} leaves the vertex range")
                if m >> v & 1:
                    raise ArgumentError(f"loop at vertex {v}")
                for w in bits(m):
                    if not adj[w] >> v & 1:
                        raise ArgumentError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_capacity(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    # -- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, m in enumerate(self.adj):
            for v in bits(m >> (u + 1)):
                yield u, u + 1 + v

    def num_edges(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ArgumentError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs ----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ArgumentError("relabelling must be a permutation of the vertices")
        adj = [0] * self.n
        for v, m in enumerate(self.adj):
            adj[perm[v]] = mask_of(perm[w] for w in bits(m))
        return Graph(self.n, adj, check=False)

    def with_edge(self, u: int, v: int) -> Graph:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise ArgumentError(f"loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, check=False)

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, [full & ~m & ~(1 << v) for v, m in enumerate(self.adj)], check=False)


def _rebuild(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, adj, check=False)


# -- builders ----------------------------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    Vertices of ``g1`` keep their labels; those of ``g2`` are shifted by
    ``g1.n``.
    """
    n1, n2 = g1.n, g2.n
    _check_capacity(n1 + n2)
    right = ((1 << n2) - 1) << n1
    left = (1 << n1) - 1
    adj = [m | right for m in g1.adj] + [(m << n1) | left for m in g2.adj]
    return Graph(n1 + n2, adj, check=False)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    _check_capacity(n1 + g2.n)
    return Graph(n1 + g2.n, list(g1.adj) + [m << n1 for m in g2.adj], check=False)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled preserving order."""
    vs = sorted(set(vertices))
    for v in vs:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(vs)}
    sel = mask_of(vs)
    adj = [mask_of(index[w] for w in bits(g.adj[v] & sel)) for v in vs]
    return Graph(len(vs), adj, check=False)


# -- small named graphs --------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, check=False)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], check=False)


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``P_3`` is the 3-vertex path)."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ArgumentError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2**C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if code >> i & 1))
