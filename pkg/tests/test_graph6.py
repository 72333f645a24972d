import io

import pytest
from hypothesis import given

from genturan import graph6
from genturan.errors import ParseError
from genturan.graph import Graph, all_labeled_graphs, complete_graph, empty_graph, path_graph
from strategies import graphs


def test_reference_encodings():
    assert graph6.encode(complete_graph(3)) == "Bw"
    assert graph6.encode(path_graph(3)) == "Bg"
    assert graph6.encode(empty_graph(1)) == "@"
    assert graph6.encode(empty_graph(0)) == "?"


def test_decode_accepts_header_and_bytes():
    assert graph6.decode(">>graph6<<Bw") == complete_graph(3)
    assert graph6.decode(b"Bg\n") == path_graph(3)


def test_long_header_round_trip():
    g = Graph.from_edges(70, [(i, (i * 7 + 3) % 70) for i in range(70) if i != (i * 7 + 3) % 70])
    text = graph6.encode(g)
    assert text[0] == "~"
    assert graph6.decode(text) == g


@pytest.mark.parametrize(
    "text, offset",
    [("B!", 1), ("", 0), ("Bww", 2), ("B", 1), ("Bx", 1), ("~??", 3)],
)
def test_malformed_input_reports_offset(text, offset):
    with pytest.raises(ParseError) as info:
        graph6.decode(text)
    assert info.value.offset == offset
    assert f"at byte {offset}" in str(info.value)


def test_every_labelled_graph_up_to_six_vertices_round_trips():
    for n in range(7):
        for g in all_labeled_graphs(n):
            text = graph6.encode(g)
            assert graph6.decode(text) == g
            assert graph6.encode(graph6.decode(text)) == text


def test_read_lines_skips_blank_lines():
    stream = io.StringIO("Bw\n\nBg\n")
    assert list(graph6.read_lines(stream)) == [complete_graph(3), path_graph(3)]


@given(graphs(max_n=20))
def test_round_trip_property(g):
    assert graph6.decode(graph6.encode(g)) == g
