import importlib
import json

import pytest

from genturan.errors import ArgumentError, ConsistencyError
from genturan.formulas import CaseId, TheoremCase
from genturan.oracle import ResultCache
from genturan.verify import suite_cases, verify

verify_mod = importlib.import_module("genturan.verify")


def test_thm3_rows_equal():
    report = verify("thm3", {"r": [3], "k": [2], "n": range(5, 8)}, oracle_max_n=8)
    assert [r.relation for r in report.rows] == ["equal"] * 3
    assert [r.oracle for r in report.rows] == [n * n // 4 + 1 for n in range(5, 8)]


def test_json_is_byte_identical_across_runs(tmp_path):
    grid = {"n": [5, 6]}
    a = verify("thm4", grid, oracle_max_n=6).to_json()
    b = verify("thm4", grid, oracle_max_n=6, jobs=2).to_json()
    cache = ResultCache(tmp_path / "c.jsonl")
    c = verify("thm4", grid, oracle_max_n=6, cache=cache).to_json()
    d = verify("thm4", grid, oracle_max_n=6, cache=cache).to_json()
    assert a == b == c == d
    assert json.loads(a)["summary"] == {"equal": 10}


def test_oracle_skipped_beyond_limit():
    report = verify("zykov", {"r": [4], "k": [2], "n": [5, 9]}, oracle_max_n=5)
    assert [r.relation for r in report.rows] == ["equal", "oracle_skipped"]
    assert report.rows[1].oracle is None


def test_small_n_gaps_are_recorded_not_raised():
    report = verify("thm1", {"r": [3], "k": [3], "n": [7]}, oracle_max_n=7)
    (row,) = report.rows
    assert row.relation == "oracle_greater" and row.oracle > row.predicted


def test_f_props_rows_hold():
    report = verify("f_props", {"r": [5], "s": [1], "t": [1], "n": [12]})
    assert report.rows and all(r.relation == "holds" for r in report.rows)


def test_formats():
    report = verify("krr1", {"n": [6]}, oracle_max_n=6)
    assert report.render("md").startswith("### krr1")
    assert report.render("csv").splitlines()[0] == "case,predicted,oracle,relation,witness"
    with pytest.raises(ArgumentError):
        report.render("xml")


def test_unknown_suite():
    with pytest.raises(ArgumentError):
        suite_cases("thm9")


def test_oracle_below_construction_is_a_consistency_error(monkeypatch):
    from genturan.oracle import OracleResult

    def fake(args):
        n, pattern, families, witnesses = args
        return [OracleResult(0, [], 1) for _ in families]

    monkeypatch.setattr(verify_mod, "_oracle_group", fake)
    with pytest.raises(ConsistencyError, match="oracle below"):
        verify("thm3", {"r": [3], "k": [2], "n": [5]}, oracle_max_n=5)


def test_grid_cases_respect_constraints():
    for suite in ("zykov", "thm1", "thm2", "thm3", "thm4", "krr1"):
        cases = suite_cases(suite)
        assert cases and all(isinstance(c, TheoremCase) for c in cases)
    assert {c.id for c in suite_cases("thm2")} == {CaseId.THM2_LOWER, CaseId.THM2_III}
