"""Bench harness: task extraction, condensation rows, mining, CSV bytes."""

import pytest

from dlproof.bench import (
    CSV_HEADER, extract_tasks, mine_patterns, run_condensation,
    run_fbp_comparison,
)
from dlproof.errors import FragmentError
from dlproof.parsing import parse_axiom, parse_ontology
from dlproof.syntax import Signature, sig

CHAIN = parse_ontology("SubClassOf(A B)\nSubClassOf(B C)")


def fake_clock():
    state = {"t": 0.0}

    def clock():
        state["t"] += 1.0
        return state["t"]
    return clock


def test_extract_tasks_closure():
    tasks = extract_tasks(CHAIN, None, min_symbols=0, sample_size=10, seed=0)
    assert sorted(t.goal.key() for t in tasks) == [
        "SubClassOf(A B)", "SubClassOf(A C)", "SubClassOf(B C)"]
    assert [t.task_id for t in tasks] == ["t0000", "t0001", "t0002"]


def test_extract_tasks_deterministic_sampling():
    t1 = extract_tasks(CHAIN, None, min_symbols=0, sample_size=2, seed=1)
    t2 = extract_tasks(CHAIN, None, min_symbols=0, sample_size=2, seed=1)
    assert [x.goal for x in t1] == [x.goal for x in t2]
    t3 = extract_tasks(CHAIN, None, min_symbols=0, sample_size=2, seed=2)
    assert len(t3) == 2


def test_extract_tasks_min_symbols_unreachable():
    tasks = extract_tasks(CHAIN, sig(["A"]), min_symbols=5, sample_size=10, seed=0)
    assert tasks == []


def test_extract_tasks_fragment_error():
    alch = parse_ontology("SubClassOf(A ObjectComplementOf(B))")
    with pytest.raises(FragmentError):
        extract_tasks(alch, None, min_symbols=0, sample_size=5, seed=0)


def test_condensation_rows(tmp_path):
    tasks = extract_tasks(CHAIN, None, min_symbols=0, sample_size=10, seed=0)
    s = sig(["A", "B", "C"])
    out = tmp_path / "condense.csv"
    rows = run_condensation(CHAIN, tasks, s, out_csv=out, clock=fake_clock())
    by_goal = {r.task_id: r for r in rows}
    chain_row = [r for t, r in zip(tasks, rows)
                 if t.goal == parse_axiom("SubClassOf(A C)")][0]
    assert chain_row.original_size == 3
    assert chain_row.condensed_size == 1
    assert chain_row.size_ratio == pytest.approx(1 / 3)
    assert chain_row.coverage_pct == pytest.approx(100.0)
    for r in rows:
        assert r.condensed_size <= r.original_size
        assert r.status == "ok"
    text = out.read_text(encoding="utf-8")
    assert text.splitlines()[0] == CSV_HEADER


def test_condensation_empty_signature_ratio_one():
    tasks = extract_tasks(CHAIN, None, min_symbols=0, sample_size=10, seed=0)
    rows = run_condensation(CHAIN, tasks, Signature.EMPTY, clock=fake_clock())
    for r in rows:
        assert r.size_ratio == pytest.approx(1.0)
        assert r.condensed_size == r.original_size


def test_condensation_disjoint_signature_ratio_one():
    tasks = extract_tasks(CHAIN, None, min_symbols=0, sample_size=10, seed=0)
    rows = run_condensation(CHAIN, tasks, sig(["Z1", "Z2"]), clock=fake_clock())
    for r in rows:
        assert r.size_ratio == pytest.approx(1.0)


def test_csv_bytes_deterministic(tmp_path):
    tasks = extract_tasks(CHAIN, None, min_symbols=0, sample_size=10, seed=3)
    s = sig(["A", "B"])
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    run_condensation(CHAIN, tasks, s, out_csv=out1, clock=fake_clock())
    run_condensation(CHAIN, tasks, s, out_csv=out2, clock=fake_clock())
    assert out1.read_bytes() == out2.read_bytes()
    assert b"\r" not in out1.read_bytes()


def test_mine_patterns_groups_renamings():
    o = parse_ontology(
        "SubClassOf(A X)\nSubClassOf(X B)\n"
        "SubClassOf(C Y)\nSubClassOf(Y D)")
    mined = mine_patterns(o)
    chains = [m for m in mined if m.frequency == 2 and m.pattern.axioms == 2]
    assert chains, [m.frequency for m in mined]


def test_mine_patterns_non_elh_filter():
    o = parse_ontology("SubClassOf(A X)\nSubClassOf(X B)")
    assert mine_patterns(o, non_elh_only=True) == []
    o2 = parse_ontology(
        "SubClassOf(A ObjectUnionOf(B X))\nSubClassOf(X B)")
    mined = mine_patterns(o2, non_elh_only=True)
    assert mined and mined[0].goal == parse_axiom("SubClassOf(A B)")


def test_mine_patterns_empty_ontology():
    from dlproof.syntax import Ontology
    assert mine_patterns(Ontology([])) == []


def test_fbp_comparison_rows(tmp_path):
    o = parse_ontology("SubClassOf(A X)\nSubClassOf(X B)")
    mined = mine_patterns(o)
    out = tmp_path / "fbp.csv"
    rows = run_fbp_comparison(mined, ["heur", "size"], out_csv=out,
                              budget_ms=60_000, clock=fake_clock())
    assert {r.method for r in rows} == {"heur", "size"}
    for r in rows:
        assert r.status == "ok"
        assert r.original_size > 0
    sizes = {r.method: r.original_size for r in rows}
    assert sizes["size"] <= sizes["heur"]


def test_fbp_comparison_zero_budget_rows_are_timeouts(tmp_path):
    o = parse_ontology("SubClassOf(A X)\nSubClassOf(X B)")
    mined = mine_patterns(o)
    rows = run_fbp_comparison(mined, ["heur"], budget_ms=0, clock=fake_clock())
    assert rows
    for r in rows:
        assert r.status == "timeout"
        assert r.original_size == 0


def test_fbp_comparison_empty_patterns(tmp_path):
    out = tmp_path / "empty.csv"
    rows = run_fbp_comparison([], ["heur"], out_csv=out, clock=fake_clock())
    assert rows == []
    assert out.read_text(encoding="utf-8") == CSV_HEADER + "\n"


def test_no_row_ok_with_size_zero(tmp_path):
    o = parse_ontology("SubClassOf(A X)\nSubClassOf(X B)")
    mined = mine_patterns(o)
    rows = run_fbp_comparison(mined, ["heur", "symb", "size"],
                              budget_ms=60_000, clock=fake_clock())
    tasks = extract_tasks(CHAIN, None, min_symbols=0, sample_size=10, seed=0)
    rows += run_condensation(CHAIN, tasks, sig(["A"]), clock=fake_clock())
    for r in rows:
        assert not (r.status == "ok" and (r.original_size or 0) == 0)
