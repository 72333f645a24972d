import pytest
from hypothesis import given
from hypothesis import strategies as st

from genturan.constructions import book, complete_multipartite, turan
from genturan.counting import (
    automorphism_count,
    copies_at_vertex,
    count_bicliques,
    count_cliques,
    count_copies,
    count_embeddings,
    count_family,
    twin_classes,
)
from genturan.errors import ArgumentError
from genturan.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
)
from strategies import graphs, naive_copies

BOWTIE = book(3, 1)
TARGETS = [complete_graph(3), complete_graph(4), path_graph(3), complete_bipartite(1, 3),
           complete_bipartite(2, 2), BOWTIE]


def test_clique_examples():
    assert count_cliques(complete_graph(5), 3) == 10
    assert count_cliques(turan(6, 3), 3) == 8
    assert count_cliques(cycle_graph(5), 3) == 0
    g = cycle_graph(6)
    assert count_cliques(g, 0) == 1 and count_cliques(g, 1) == 6


def test_embedding_examples():
    assert count_embeddings(complete_graph(3), complete_graph(3)) == 6
    assert count_embeddings(complete_graph(3), path_graph(3)) == 6
    assert count_embeddings(complete_bipartite(2, 2), complete_bipartite(2, 2)) == 8
    assert automorphism_count(BOWTIE) == 8


def test_copy_examples():
    assert count_copies(complete_graph(3), path_graph(3)) == 3
    assert count_copies(complete_bipartite(3, 3), complete_bipartite(2, 2)) == 9
    assert count_copies(cycle_graph(7), empty_graph(1)) == 7
    assert count_copies(complete_graph(3), complete_graph(5)) == 0


def test_copies_at_vertex_examples():
    assert copies_at_vertex(BOWTIE, complete_graph(3), 0) == 2
    assert all(copies_at_vertex(complete_graph(4), complete_graph(3), v) == 3 for v in range(4))
    assert all(copies_at_vertex(cycle_graph(5), complete_graph(2), v) == 2 for v in range(5))
    with pytest.raises(ArgumentError):
        copies_at_vertex(cycle_graph(5), complete_graph(2), 5)


def test_family_examples():
    assert count_family(complete_graph(4), [3, 4]) == 5
    assert count_family(join(complete_graph(1), turan(6, 2)), [3, 4, 5]) == 9


def test_large_counts_are_exact():
    # e_3 of 12 parts of size 100: C(12, 3) * 100**3
    g = turan(1200, 12)
    assert count_cliques(g, 3) == 220 * 10**6
    assert count_cliques(g, 12) == 100**12


def test_biclique_fast_path_matches_generic():
    g = complete_multipartite([3, 3, 2])
    for a, b in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        h = complete_bipartite(a, b)
        assert count_bicliques(g, a, b) == count_copies(g, h, method="generic")


def test_twin_classes_partition():
    classes = twin_classes(complete_multipartite([2, 3]))
    assert sorted(sorted(c) for c, _ in classes) == [[0, 1], [2, 3, 4]]


@given(graphs(max_n=8), st.sampled_from(TARGETS))
def test_matches_naive_image_enumeration(g, h):
    assert count_copies(g, h) == naive_copies(g, h)


@given(graphs(max_n=9), st.integers(0, 6))
def test_clique_paths_agree(g, k):
    assert count_cliques(g, k) == count_copies(g, complete_graph(k), method="generic")


@given(graphs(max_n=8), st.sampled_from(TARGETS + [complete_graph(2)]))
def test_handshake_identity(g, h):
    total = sum(copies_at_vertex(g, h, v) for v in range(g.n))
    assert total == h.n * count_copies(g, h)


@given(graphs(min_n=2, max_n=8), st.sampled_from(TARGETS), st.data())
def test_adding_an_edge_never_decreases_counts(g, h, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
    assert count_copies(g.with_edge(u, v), h) >= count_copies(g, h)


@given(graphs(max_n=7))
def test_embeddings_divisible_by_automorphisms(h):
    assert count_embeddings(h, h) == automorphism_count(h)
    assert count_copies(h, h) == 1


@given(st.lists(st.integers(1, 5), min_size=1, max_size=6), st.integers(1, 6))
def test_twin_quotient_on_multipartite(sizes, k):
    g = complete_multipartite(sizes)
    generic = count_copies(g, complete_graph(k), method="generic") if g.n <= 12 else None
    value = count_cliques(g, k)
    if generic is not None:
        assert value == generic
    # elementary symmetric function of the part sizes
    e = [1] + [0] * k
    for s in sizes:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * s
    assert value == e[k]


def test_twin_quotient_on_large_blowup():
    # a 30-vertex blow-up of C5: only the twin method sees it as 5 classes
    adj = []
    for v in range(30):
        part = v // 6
        nb = 0
        for w in range(30):
            if (w // 6 - part) % 5 in (1, 4):
                nb |= 1 << w
        adj.append(nb)
    g = Graph(30, adj)
    assert count_cliques(g, 2) == 5 * 36
    assert count_cliques(g, 3) == 0
