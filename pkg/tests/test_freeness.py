from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genturan.constructions import book, clique_join_turan, turan, turan_plus
from genturan.counting import count_copies
from genturan.errors import ArgumentError
from genturan.freeness import (
    Book,
    Clique,
    DisjointCliques,
    Explicit,
    Nothing,
    UnionPair,
    contains,
    find_book,
    is_book_free,
    is_rootlet,
    witness,
)
from genturan.graph import (
    bits,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced,
    path_graph,
)
from strategies import graphs, naive_contains

BOWTIE = book(3, 1)


def test_contains_examples():
    assert contains(complete_graph(5), Book(3, 1))
    assert not contains(turan(10, 2), Clique(3))
    assert contains(BOWTIE, Book(3, 1))
    assert not contains(complete_graph(9), Nothing())


def test_book_free_examples():
    assert is_book_free(turan_plus(7, 2), 3, 1)
    assert not is_book_free(complete_graph(6), 3, 1)
    assert is_book_free(clique_join_turan(4, 2, 12), 5, 1)
    with pytest.raises(ArgumentError):
        is_book_free(complete_graph(4), 3, 3)


def test_rootlet_examples():
    k4 = complete_graph(4)
    assert all(is_rootlet(k4, v, 3, 2) for v in range(4))
    assert not any(is_rootlet(cycle_graph(5), v, 3, 2) for v in range(5))
    assert not is_rootlet(BOWTIE, 0, 3, 2)
    assert is_rootlet(BOWTIE, 0, 3, 1)
    assert not is_rootlet(BOWTIE, 1, 3, 1)
    with pytest.raises(ArgumentError):
        is_rootlet(BOWTIE, 9, 3, 1)
    with pytest.raises(ArgumentError):
        is_rootlet(BOWTIE, 0, 3, 0)


def test_pattern_identities():
    g = disjoint_union(complete_graph(3), complete_graph(4))
    assert contains(g, Book(3, 0)) and contains(g, DisjointCliques(2, 3))
    assert not contains(g, Book(4, 0))
    assert contains(complete_graph(4), Book(4, 4)) == contains(complete_graph(4), Clique(4))


def test_witness_is_a_copy():
    g = turan_plus(9, 3)
    mask = witness(g, Clique(3))
    vs = list(bits(mask))
    assert len(vs) == 3 and all(g.has_edge(a, b) for a, b in combinations(vs, 2))
    mask = witness(complete_graph(6), Book(3, 1))
    assert bin(mask).count("1") == 5


def test_union_pair_generic_and_clique_paths():
    p = UnionPair(complete_graph(3), complete_graph(2))
    assert contains(disjoint_union(complete_graph(3), path_graph(2)), p)
    assert not contains(complete_graph(4), p)
    assert contains(complete_graph(5), p)
    q = UnionPair(path_graph(3), complete_graph(2))
    assert contains(path_graph(5), q)
    assert not contains(path_graph(4), q)


def test_explicit_pattern():
    assert contains(cycle_graph(6), Explicit(path_graph(6)))
    assert not contains(cycle_graph(6), Explicit(cycle_graph(5)))
    assert contains(empty_graph(3), Explicit(empty_graph(3)))
    assert not contains(empty_graph(2), Explicit(empty_graph(3)))


BOOKS = [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]


@given(graphs(max_n=8), st.sampled_from(BOOKS))
def test_book_detector_agrees_with_embedding_count(g, rs):
    r, s = rs
    assert contains(g, Book(r, s)) == (count_copies(g, book(r, s)) > 0)


@given(graphs(max_n=7), st.sampled_from([Clique(3), Book(3, 1), DisjointCliques(2, 2),
                                         UnionPair(complete_graph(3), complete_graph(2))]))
def test_detectors_agree_with_permutation_search(g, f):
    assert contains(g, f) == naive_contains(g, f.graph())


@given(graphs(max_n=8), st.integers(2, 4))
def test_zero_overlap_is_two_disjoint_cliques(g, r):
    assert is_book_free(g, r, 0) == (not contains(g, DisjointCliques(2, r)))


@given(graphs(max_n=8), st.sampled_from(BOOKS), st.data())
def test_book_freeness_is_hereditary(g, rs, data):
    r, s = rs
    if is_book_free(g, r, s):
        keep = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
        assert is_book_free(induced(g, keep), r, s)


@given(graphs(max_n=8), st.sampled_from([(r, s) for r, s in BOOKS if s >= 1]))
def test_no_rootlets_means_no_book(g, rs):
    r, s = rs
    has_rootlet = any(is_rootlet(g, v, r, s) for v in range(g.n))
    assert has_rootlet == (find_book(g, r, s) is not None)


@given(graphs(max_n=8))
def test_witness_mask_spans_a_copy(g):
    mask = witness(g, Book(3, 1))
    if mask is not None:
        assert contains(induced(g, bits(mask)), Book(3, 1))
