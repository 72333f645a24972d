import json
import subprocess
import sys

import pytest

from genturan import graph6
from genturan.cli import main, parse_pattern, parse_target, split_family
from genturan.constructions import book, turan, turan_plus
from genturan.errors import ArgumentError
from genturan.freeness import Book, Clique, DisjointCliques, Nothing, UnionPair
from genturan.formulas import cliques_in_turan
from genturan.graph import Graph, complete_bipartite, complete_graph


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_prints_graph6(capsys):
    code, out, _ = run_cli(capsys, "construct", "turan-plus", "7", "2")
    assert code == 0 and graph6.decode(out.strip()) == turan_plus(7, 2)
    code, out, _ = run_cli(capsys, "construct", "multipartite", "2", "2", "2")
    assert graph6.decode(out.strip()) == turan(6, 3)
    code, out, _ = run_cli(capsys, "--format", "json", "construct", "book", "3", "1")
    assert json.loads(out) == {"graph6": graph6.encode(book(3, 1)), "n": 5, "edges": 6}


def test_count_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(graph6.encode(complete_bipartite(3, 3)) + "\n"))
    code, out, _ = run_cli(capsys, "count", "--h", "biclique:2,2")
    assert code == 0 and json.loads(out) == {"count": "9"}


def test_check_free_exit_codes(capsys):
    g = graph6.encode(turan_plus(7, 2))
    code, out, _ = run_cli(capsys, "check-free", g, "--f", "book:3,1")
    assert code == 0 and json.loads(out)["witness"] is None
    code, out, _ = run_cli(capsys, "check-free", g, "--f", "clique:3")
    data = json.loads(out)
    assert code == 1 and len(data["witness"]) == 3


def test_formula(capsys):
    code, out, _ = run_cli(capsys, "formula", "--case", "thm1i", "--n", "7", "--r", "3", "--k", "2")
    data = json.loads(out)
    assert code == 0 and data["value"] == "15"
    assert graph6.decode(data["graph6"]).num_edges() == 15


def test_symmetrize_json_lines(capsys):
    code, out, _ = run_cli(capsys, "symmetrize", "Cr", "--h", "clique:2", "--mode", "plain:3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[-1]["terminated"] == "fixed_point" and lines[-1]["steps"] == 0
    two_k2 = graph6.encode(Graph.from_edges(4, [(0, 1), (2, 3)]))
    code, out, _ = run_cli(capsys, "symmetrize", two_k2, "--h", "clique:2", "--mode", "restricted:3,1")
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["step"] == 0 and "final" in lines[-1]


def test_ex_and_family(capsys, tmp_path):
    cache = tmp_path / "c.jsonl"
    code, out, _ = run_cli(capsys, "ex", "--n", "6", "--h", "clique:2", "--f", "book:3,1", "--cache", str(cache))
    assert code == 0 and json.loads(out)["value"] == "10"
    code, out, _ = run_cli(capsys, "ex", "--n", "6", "--family", "clique:3,clique:4", "--f", "clique:5")
    expected = cliques_in_turan(6, 4, 3) + cliques_in_turan(6, 4, 4)
    assert json.loads(out)["value"] == str(expected)


def test_verify_markdown(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm3", "--grid", "r=3", "k=2", "n=5..6", "--format", "md")
    assert code == 0 and "| thm3(n=5,r=3,k=2) | 7 | 7 | equal |" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["count", "Bw", "--h", "star:3"], 2),
        (["count", "B!", "--h", "clique:2"], 2),
        (["construct", "turan", "3"], 2),
        (["construct", "turan-plus", "3", "3"], 2),
        (["ex", "--n", "12", "--h", "clique:2", "--f", "none"], 3),
        (["formula", "--case", "thm3", "--n", "7", "--r", "3", "--k", "3"], 2),
        (["verify", "nope"], 2),
        (["symmetrize", "Bw", "--h", "clique:2", "--mode", "plain:3"], 2),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_parsers():
    assert parse_pattern("none") == Nothing()
    assert parse_pattern("book:4,2") == Book(4, 2)
    assert parse_pattern("kcliques:3,2") == DisjointCliques(3, 2)
    assert parse_pattern("clique:5") == Clique(5)
    assert parse_pattern("union:Bw,A_") == UnionPair(complete_graph(3), complete_graph(2))
    assert parse_target("biclique:2,3") == complete_bipartite(2, 3)
    assert split_family("clique:3,biclique:2,2,g6:Bw") == ["clique:3", "biclique:2,2", "g6:Bw"]
    with pytest.raises(ArgumentError):
        parse_pattern("book:3")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "genturan", "count", "Bw", "--h", "clique:3"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == {"count": "1"}
