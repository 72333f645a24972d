"""Hypothesis strategies and deliberately naive reference implementations."""

from itertools import combinations, permutations

from hypothesis import strategies as st

from genturan.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def naive_copies(g: Graph, h: Graph) -> int:
    """Distinct images (vertex set, edge set) of edge-preserving injections h -> g."""
    images = set()
    hedges = list(h.edges())
    for image in permutations(range(g.n), h.n):
        if all(g.has_edge(image[a], image[b]) for a, b in hedges):
            edges = frozenset(frozenset((image[a], image[b])) for a, b in hedges)
            images.add((frozenset(image), edges))
    return len(images)


def naive_contains(g: Graph, h: Graph) -> bool:
    hedges = list(h.edges())
    return any(
        all(g.has_edge(image[a], image[b]) for a, b in hedges)
        for image in permutations(range(g.n), h.n)
    )


def naive_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    e2 = {frozenset(e) for e in g2.edges()}
    return any(
        {frozenset((p[a], p[b])) for a, b in g1.edges()} == e2
        for p in permutations(range(g1.n))
    )


def random_free_graph(rng, n: int, pattern, density: float = 0.6) -> Graph:
    """Random maximal-ish pattern-free graph: add shuffled edges while they keep it free."""
    from genturan.freeness import contains

    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    g = Graph(n)
    for u, v in pairs:
        if rng.random() > density:
            continue
        h = g.with_edge(u, v)
        if not contains(h, pattern):
            g = h
    return g


@st.composite
def free_graphs(draw, pattern, min_n=2, max_n=9):
    import random

    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.sampled_from([0.3, 0.6, 1.0]))
    return random_free_graph(random.Random(seed), n, pattern, density)
