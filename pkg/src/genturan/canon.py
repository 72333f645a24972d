"""Canonical labelling by partition refinement and backtracking.

The canonical form of a graph is the graph6 string of the relabelling that
minimises the upper-triangle adjacency bit string, taken over all
labellings compatible with the equitable refinement of the (optionally
coloured) vertex partition.  Branches are pruned on bit-string prefixes
and by skipping vertices that are twins of an already explored vertex in
the same cell (swapping twins is an automorphism fixing the search node).

Keys for graphs with the same number of vertices compare in the same order
as their bit strings, so ``str`` ordering gives a total order on classes.
"""

from __future__ import annotations

from collections.abc import Sequence

from . import graph6
from .graph import Graph, mask_of, popcount

CanonicalForm = str


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [mask_of(c) for c in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                av = adj[v]
                key = tuple(popcount(av & m) for m in masks)
                groups.setdefault(key, []).append(v)
            new.extend(groups[k] for k in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _column_bits(adj: Sequence[int], order: Sequence[int], upto: int) -> int:
    """Bits of columns ``1..upto-1`` for the labelling ``order[pos] = vertex``."""
    acc = 0
    for j in range(1, upto):
        col = adj[order[j]]
        for i in range(j):
            acc = acc << 1 | (col >> order[i] & 1)
    return acc


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_bits: int | None = None
        self.best_order: list[int] | None = None

    def run(self, cells: list[list[int]]) -> None:
        cells = _refine(self.adj, cells)
        n = self.n
        prefix = 0
        while prefix < len(cells) and len(cells[prefix]) == 1:
            prefix += 1
        if self.best_bits is not None and prefix > 1:
            order = [c[0] for c in cells[:prefix]]
            mine = _column_bits(self.adj, order, prefix)
            drop = n * (n - 1) // 2 - prefix * (prefix - 1) // 2
            best = self.best_bits >> drop
            if mine > best:
                return
            if mine < best and prefix == n:
                self.best_bits, self.best_order = mine, order
                return
        if prefix == n:
            order = [c[0] for c in cells]
            key = _column_bits(self.adj, order, n)
            if self.best_bits is None or key < self.best_bits:
                self.best_bits, self.best_order = key, order
            return
        target = prefix
        while len(cells[target]) == 1:
            target += 1
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(((self.adj[u] ^ self.adj[v]) & ~(1 << u | 1 << v)) == 0 for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:])


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[CanonicalForm, list[int]]:
    """Return ``(key, position)`` where ``position[v]`` is v's canonical label.

    With ``colors`` the labelling respects the colour classes, ordered by
    colour value, and keys are only comparable between graphs whose colour
    multisets agree.
    """
    n = g.n
    if n == 0:
        return graph6.encode(g), []
    if colors is None:
        cells = [list(range(n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    search = _Search(g)
    search.run(cells)
    order = search.best_order
    position = [0] * n
    for pos, v in enumerate(order):
        position[v] = pos
    key = graph6.encode(g.relabel(position))
    if colors is not None:
        key += "|" + ",".join(str(colors[v]) for v in order)
    return key, position


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    return canonical_labeling(g, colors)[0]


def canonical_graph(g: Graph) -> Graph:
    _, position = canonical_labeling(g)
    return g.relabel(position)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
