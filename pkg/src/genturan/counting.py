"""Exact counts of unlabelled copies N(H, G).

Three routes:

* cliques, by recursive candidate-mask intersection (or, for graphs with
  large twin classes, by enumerating cliques of the twin quotient);
* complete bipartite targets, by summing ``C(|N(A)|, b)`` over ``a``-sets;
* anything else, by counting injective edge-preserving maps and dividing
  by ``|Aut(H)|`` (itself the number of embeddings of H into H).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations
from math import comb

from .errors import ArgumentError, ConsistencyError
from .graph import Graph, bits, popcount

# -- cliques -------------------------------------------------------------------


def _cliques_in(adj: Sequence[int], cand: int, k: int) -> int:
    """Number of k-cliques inside the vertex mask ``cand``."""
    if k == 0:
        return 1
    if k == 1:
        return popcount(cand)
    total = 0
    if k == 2:
        while cand:
            low = cand & -cand
            cand ^= low
            total += popcount(adj[low.bit_length() - 1] & cand)
        return total
    while cand:
        if popcount(cand) < k:
            break
        low = cand & -cand
        cand ^= low
        sub = adj[low.bit_length() - 1] & cand
        if sub:
            total += _cliques_in(adj, sub, k - 1)
    return total


def twin_classes(g: Graph) -> list[tuple[list[int], bool]]:
    """Partition V(g) into twin classes.

    Returns ``(members, closed)`` pairs: members of an open class share the
    same neighbourhood (and are pairwise non-adjacent); members of a closed
    class share the same closed neighbourhood (and form a clique).
    Singletons are reported as open.
    """
    by_open: dict[int, list[int]] = {}
    for v, m in enumerate(g.adj):
        by_open.setdefault(m, []).append(v)
    classes: list[tuple[list[int], bool]] = []
    by_closed: dict[int, list[int]] = {}
    for members in by_open.values():
        if len(members) > 1:
            classes.append((members, False))
        else:
            v = members[0]
            by_closed.setdefault(g.adj[v] | 1 << v, []).append(v)
    for members in by_closed.values():
        classes.append((members, len(members) > 1))
    classes.sort(key=lambda c: c[0][0])
    return classes


def _cliques_by_twins(g: Graph, k: int) -> int:
    classes = twin_classes(g)
    reps = [members[0] for members, _ in classes]
    q = len(classes)
    qadj = [0] * q
    for i in range(q):
        for j in range(i + 1, q):
            if g.has_edge(reps[i], reps[j]):
                qadj[i] |= 1 << j
                qadj[j] |= 1 << i
    # Per-class generating polynomials, truncated at degree k.
    polys = []
    for members, closed in classes:
        size = len(members)
        if closed:
            polys.append([comb(size, j) for j in range(min(size, k) + 1)])
        else:
            polys.append([1, size])

    def extend(cand: int, poly: list[int]) -> int:
        total = poly[k] if len(poly) > k else 0
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            p = polys[i]
            new = [0] * min(len(poly) + len(p) - 1, k + 1)
            for a, ca in enumerate(poly):
                if ca:
                    for b in range(1, len(p)):
                        if a + b > k:
                            break
                        new[a + b] += ca * p[b]
            total += extend(cand & qadj[i], new)
        return total

    return extend((1 << q) - 1, [1])


def count_cliques(g: Graph, k: int) -> int:
    """N(K_k, g): the number of k-vertex subsets spanning a clique."""
    if k < 0:
        raise ArgumentError("clique size must be non-negative")
    if k <= 1:
        return 1 if k == 0 else g.n
    if g.n > 24 and len(twin_classes(g)) * 2 <= g.n:
        return _cliques_by_twins(g, k)
    return _cliques_in(g.adj, g.vertex_mask, k)


def clique_sets(adj: Sequence[int], cand: int, k: int) -> Iterable[int]:
    """Yield every k-clique inside ``cand`` as a vertex mask."""
    if k == 0:
        yield 0
        return
    while cand:
        if popcount(cand) < k:
            return
        low = cand & -cand
        cand ^= low
        for rest in clique_sets(adj, adj[low.bit_length() - 1] & cand, k - 1):
            yield rest | low


def count_family(g: Graph, sizes: Sequence[int]) -> int:
    """Sum of N(K_k, g) over the clique sizes in ``sizes``."""
    if not sizes:
        raise ArgumentError("family of clique sizes must be non-empty")
    return sum(count_cliques(g, k) for k in sizes)


# -- shape detection -------------------------------------------------------------


def is_complete(h: Graph) -> bool:
    return h.num_edges() == h.n * (h.n - 1) // 2


def biclique_sides(h: Graph) -> tuple[int, int] | None:
    """``(a, b)`` with ``a <= b`` if h is K_{a,b} (a, b >= 1), else None."""
    if h.n < 2 or any(m == 0 for m in h.adj):
        return None
    side = h.adj[0]
    a = h.n - popcount(side)
    b = popcount(side)
    if a * b != h.num_edges():
        return None
    other = h.vertex_mask & ~side
    for v in bits(other):
        if h.adj[v] != side:
            return None
    for v in bits(side):
        if h.adj[v] != other:
            return None
    return (a, b) if a <= b else (b, a)


def count_bicliques(g: Graph, a: int, b: int) -> int:
    """N(K_{a,b}, g) for a, b >= 1."""
    if a < 1 or b < 1:
        raise ArgumentError("biclique sides must be positive")
    if a > b:
        a, b = b, a
    adj = g.adj
    total = 0
    for left in combinations(range(g.n), a):
        common = g.vertex_mask
        for v in left:
            common &= adj[v]
            if not common:
                break
        else:
            total += comb(popcount(common), b)
    if a == b:
        # Each copy was counted once from either side.
        total //= 2
    return total


# -- generic embeddings -----------------------------------------------------------


def _search_order(h: Graph, first: int | None = None) -> list[int]:
    """Connected-first vertex order of h, greedily maximising back-degree."""
    n = h.n
    deg = h.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    if first is not None:
        order.append(first)
        placed |= 1 << first
        remaining.discard(first)
    while remaining:
        v = max(remaining, key=lambda x: (popcount(h.adj[x] & placed), deg[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def count_embeddings(g: Graph, h: Graph, fixed: tuple[int, int] | None = None) -> int:
    """Injective maps V(h) -> V(g) sending edges of h to edges of g.

    ``fixed=(x, v)`` restricts to maps sending x to v.
    """
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    order = _search_order(h, fixed[0] if fixed else None)
    pos = {x: i for i, x in enumerate(order)}
    back = [[pos[y] for y in bits(h.adj[x]) if pos[y] < i] for i, x in enumerate(order)]
    hdeg = [h.degree(x) for x in order]
    gadj = g.adj
    gdeg = g.degrees()
    full = g.vertex_mask
    ok_deg = [sum(1 << v for v in range(g.n) if gdeg[v] >= d) for d in range(max(hdeg) + 1)]
    images = [0] * h.n
    last = h.n - 1

    def rec(i: int, used: int) -> int:
        cand = ok_deg[hdeg[i]] & ~used
        for j in back[i]:
            cand &= gadj[images[j]]
        if i == last:
            return popcount(cand)
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            images[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
        return total

    if fixed:
        v = fixed[1]
        g.check_vertex(v)
        if gdeg[v] < hdeg[0]:
            return 0
        if h.n == 1:
            return 1
        images[0] = v
        return rec(1, 1 << v)
    return rec(0, full & 0)


def automorphism_count(h: Graph) -> int:
    return count_embeddings(h, h)


def count_copies(g: Graph, h: Graph, method: str = "auto") -> int:
    """N(h, g): number of subgraphs of g isomorphic to h.

    ``method="generic"`` forces the embedding/automorphism route.
    """
    if method not in ("auto", "generic"):
        raise ArgumentError(f"unknown counting method {method!r}")
    if method == "auto" and h.n > 0:
        if is_complete(h):
            return count_cliques(g, h.n)
        sides = biclique_sides(h)
        if sides is not None:
            return count_bicliques(g, *sides)
    emb = count_embeddings(g, h)
    aut = automorphism_count(h)
    q, rem = divmod(emb, aut)
    if rem:
        raise ConsistencyError(f"{emb} embeddings not divisible by |Aut(H)| = {aut}")
    return q


def copies_at_vertex(g: Graph, h: Graph, v: int) -> int:
    """d(h, v): number of copies of h in g whose vertex set contains v."""
    g.check_vertex(v)
    if h.n == 0:
        return 0
    if is_complete(h):
        return _cliques_in(g.adj, g.adj[v], h.n - 1)
    total = sum(count_embeddings(g, h, fixed=(x, v)) for x in range(h.n))
    aut = automorphism_count(h)
    q, rem = divmod(total, aut)
    if rem:
        raise ConsistencyError(f"{total} rooted embeddings not divisible by |Aut(H)| = {aut}")
    return q
