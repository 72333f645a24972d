"""Zykov symmetrization and its rootlet-restricted variant.

Symmetrizing u to v (u, v non-adjacent) gives u the neighbourhood of v.
:func:`run` repeats this until every eligible non-adjacent pair already has
equal neighbourhoods, or a step cap is hit.  Direction follows copy counts:
the vertex lying in fewer copies of H takes the neighbourhood of the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .counting import copies_at_vertex, count_copies
from .errors import ArgumentError, ConsistencyError
from .freeness import Book, Clique, ForbiddenPattern, contains, is_rootlet
from .graph import Graph


def symmetrize(g: Graph, u: int, v: int) -> Graph:
    """Replace the neighbourhood of u by the neighbourhood of v."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ArgumentError("cannot symmetrize a vertex to itself")
    if g.has_edge(u, v):
        raise ArgumentError(f"vertices {u} and {v} are adjacent")
    bu = 1 << u
    target = g.adj[v]
    adj = list(g.adj)
    for w in range(g.n):
        if w != u:
            adj[w] = (adj[w] & ~bu) | (bu if target >> w & 1 else 0)
    adj[u] = target
    return Graph(g.n, adj, check=False)


def restricted_step_allowed(g: Graph, u: int, v: int, r: int, s: int) -> bool:
    """Whether symmetrizing u to v keeps every B_{r,s}-free graph B_{r,s}-free.

    Requires u, v non-adjacent and v not a rootlet of any B_{r,s+1}.
    """
    if u == v:
        raise ArgumentError("u and v must differ")
    if g.has_edge(u, v):
        return False
    return not is_rootlet(g, v, r, s + 1)


class Mode(enum.Enum):
    PLAIN = "plain"
    RESTRICTED = "restricted"


class Termination(str, enum.Enum):
    FIXED_POINT = "fixed_point"
    CAP_REACHED = "cap_reached"


@dataclass(frozen=True)
class Step:
    source: int
    target: int
    count_before: int
    count_after: int
    d_source: int
    d_target: int

    @property
    def follows_direction_rule(self) -> bool:
        return self.d_source <= self.d_target


@dataclass
class SymmetrizationTrace:
    steps: list[Step] = field(default_factory=list)
    final: Optional[Graph] = None
    terminated: Termination = Termination.FIXED_POINT


def _choose_direction(g: Graph, h: Graph, u: int, v: int, eligible: list[tuple[int, int]]) -> Optional[tuple[int, int, int, int]]:
    """Pick ``(source, target, d_source, d_target)`` for the pair u < v.

    Among eligible directions the target is the vertex in more copies of
    h; ties move the higher index to the lower.
    """
    if not eligible:
        return None
    d = {u: copies_at_vertex(g, h, u), v: copies_at_vertex(g, h, v)}
    if len(eligible) == 1:
        src, tgt = eligible[0]
    elif d[u] >= d[v]:
        src, tgt = v, u
    else:
        src, tgt = u, v
    return src, tgt, d[src], d[tgt]


def run(
    g: Graph,
    h: Graph,
    constraint: ForbiddenPattern,
    mode: Mode | str = Mode.PLAIN,
    cap: Optional[int] = None,
    book_params: Optional[tuple[int, int]] = None,
) -> SymmetrizationTrace:
    """Symmetrize to a fixed point, checking ``constraint`` after every step.

    In restricted mode ``book_params=(r, s)`` (defaulting to the constraint
    when it is a :class:`Book`) decides eligibility: a direction is allowed
    only if its target is not a rootlet of any B_{r,s+1}.  Pairs are scanned
    in lexicographic order and the first pair with differing neighbourhoods
    and an eligible direction is symmetrized.
    """
    mode = Mode(mode)
    if contains(g, constraint):
        raise ArgumentError(f"input graph contains the constraint pattern {constraint}")
    if mode is Mode.RESTRICTED:
        if book_params is None:
            if not isinstance(constraint, Book):
                raise ArgumentError("restricted mode needs book parameters (r, s)")
            book_params = (constraint.r, constraint.s)
        r, s = book_params
        if not 0 <= s < r:
            raise ArgumentError(f"restricted mode needs 0 <= s < r, got r={r}, s={s}")
    if cap is None:
        cap = 10 * g.n * g.n
    trace = SymmetrizationTrace(final=g)
    count = count_copies(g, h)
    current = g
    while True:
        step = None
        n = current.n
        adj = current.adj
        rootlet_cache: dict[int, bool] = {}

        def target_ok(x: int) -> bool:
            if mode is Mode.PLAIN:
                return True
            if x not in rootlet_cache:
                rootlet_cache[x] = not is_rootlet(current, x, r, s + 1)
            return rootlet_cache[x]

        for u in range(n):
            for v in range(u + 1, n):
                if adj[u] >> v & 1 or adj[u] == adj[v]:
                    continue
                eligible = [(src, tgt) for src, tgt in ((v, u), (u, v)) if target_ok(tgt)]
                step = _choose_direction(current, h, u, v, eligible)
                if step is not None:
                    break
            if step is not None:
                break
        if step is None:
            trace.terminated = Termination.FIXED_POINT
            break
        if len(trace.steps) >= cap:
            trace.terminated = Termination.CAP_REACHED
            break
        src, tgt, d_src, d_tgt = step
        nxt = symmetrize(current, src, tgt)
        if contains(nxt, constraint):
            raise ConsistencyError(
                f"symmetrizing {src} to {tgt} created {constraint} (mode {mode.value})"
            )
        new_count = count_copies(nxt, h)
        trace.steps.append(Step(src, tgt, count, new_count, d_src, d_tgt))
        current, count = nxt, new_count
    trace.final = current
    return trace


def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacent vertices all have identical neighbourhoods."""
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not adj[u] >> v & 1 and adj[u] != adj[v]:
                return False
    return True


def plain_constraint(r: int) -> ForbiddenPattern:
    return Clique(r)
