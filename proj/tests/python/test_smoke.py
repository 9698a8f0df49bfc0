"""Smoke tests for the python bindings."""

import math

import pytest

import ncfsym as ns

EXAMPLE2 = "x1: 1 -> 0\nx2: 1 -> 1\nx3: 0 -> 1\ndefault: 0\n"
EXAMPLE4 = (
    "x1: 1 -> 0\nx2: 0 -> 0\nx3: 0 -> 0\n"
    "x4: 1 -> 1\nx5: 1 -> 1\nx6: 1 -> 0\ndefault: 1\n"
)


def test_truth_table_round_trip():
    table = ns.TruthTable.from_hex(3, "45")
    assert table.to_hex() == "45"
    assert ns.format_truth_table(table) == "n=3 tt=45"
    assert ns.parse_truth_table("n=3 tt=45") == table
    assert ns.evaluate(table, 6)
    assert not ns.evaluate(table, 1)


def test_parse_and_normalize():
    ncf = ns.parse_ncf(EXAMPLE4)
    assert ns.to_truth_table(ns.parse_ncf(EXAMPLE2)).to_hex() == "45"

    normalized = ns.normalize(ncf)
    assert ns.render_ncf(normalized).splitlines()[-2:] == ["x6: 0 -> 1", "default: 0"]
    assert ns.is_default_normalized(normalized)
    assert ns.to_truth_table(normalized) == ns.to_truth_table(ncf)

    assert len(ns.layers(ncf)) == 3
    assert len(ns.layers(normalized)) == 2


def test_symmetry_structure():
    normalized = ns.normalize(ns.parse_ncf(EXAMPLE4))
    assert ns.symmetry_partition_ncf(normalized) == [[1], [2, 3], [4, 5], [6]]
    assert ns.symmetry_level_ncf(normalized) == 4
    assert ns.symmetric_pair(normalized, 2, 3)
    assert not ns.symmetric_pair(normalized, 1, 2)
    assert not ns.is_strongly_asymmetric_ncf(normalized)

    f6 = ns.normalize(ns.make_fn_example(6))
    assert ns.symmetry_level_ncf(f6) == 6
    assert ns.is_strongly_asymmetric_ncf(f6)

    with pytest.raises(ValueError):
        ns.symmetric_pair(ns.parse_ncf(EXAMPLE4), 1, 2)


def test_oracle_agreement():
    normalized = ns.normalize(ns.parse_ncf(EXAMPLE4))
    table = ns.to_truth_table(normalized)
    assert ns.symmetry_partition_bf(table) == ns.symmetry_partition_ncf(normalized)

    quad = ns.TruthTable.from_hex(4, "6AD2")
    assert len(ns.symmetry_partition_bf(quad)) == 4
    assert ns.find_invariant_permutation(quad) == [3, 4, 1, 2]
    assert ns.is_ncf_bf(quad) is None

    found = ns.is_ncf_bf(ns.TruthTable.from_hex(3, "45"))
    assert found is not None
    assert ns.to_truth_table(found).to_hex() == "45"


def test_recognizer_round_trip():
    normalized = ns.normalize(ns.parse_ncf(EXAMPLE4))
    table = ns.to_truth_table(normalized)
    groups = ns.symmetry_partition_ncf(normalized)
    st = ns.sym_table_from_truth_table(table, groups)
    recovered, reason = ns.recognize_ncf(st, 6, groups)
    assert reason == ""
    assert ns.to_truth_table(recovered) == table

    majority = ns.parse_sym_table("groups: 3\n0: 0\n1: 0\n2: 1\n3: 1\n")
    rejected, reason = ns.recognize_ncf(majority, 3, [[1, 2, 3]])
    assert rejected is None
    assert "canalyzing" in reason


def test_counting():
    report = ns.enumerate_ncfs(3)
    assert report.distinct_ncf_count == 64
    assert report.strongly_asymmetric_count == 24
    assert report.level_histogram == {1: 4, 2: 36, 3: 24}
    assert ns.count_strongly_asymmetric(3) == 24
    assert ns.count_strongly_asymmetric(30) == math.factorial(30) << 29

    # the simple closed form undercounts from n=4 on; the composition
    # sum matches enumeration
    assert ns.enumerate_ncfs(4).strongly_asymmetric_count == 240
    assert ns.count_strongly_asymmetric_exact(4) == 240
    assert ns.count_strongly_asymmetric_exact(3) == 24


def test_reduction():
    g = ns.parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")
    inst = ns.reduce_to_symmetry_gap(g, 1)
    assert inst.result.num_vars == 5
    verdict = ns.verify_claims(inst)
    assert not verdict.g_satisfiable
    assert verdict.level_of_f == 1
    assert verdict.claims_hold
    assert verdict.machine_line() == "sat=0 level=1 rho=1 ok=1"

    sat = ns.verify_claims(ns.reduce_to_symmetry_gap(ns.parse_dimacs("p cnf 1 1\n1 0\n"), 1))
    assert sat.level_of_f >= 2
    assert sat.claims_hold
