import json
from fractions import Fraction

import pytest

from ospbi.bannai_ito import (
    bi_relation_sides,
    bi_residual,
    conjugated_bi1_residual,
    structure_report,
    subset_pairs,
    verify_bi,
)
from ospbi.casimir import SubsetIndex, intermediate_casimir, subset


def C(n, *e):
    return intermediate_casimir(subset(n, *e))


def test_bi1_written_out():
    lhs = C(3, 1, 2).anticommutator(C(3, 2, 3))
    rhs = 2 * (-C(3, 1, 3) + C(3, 1) * C(3, 3) + C(3, 2) * C(3, 1, 2, 3))
    assert lhs == rhs
    assert bi_residual(subset(3, 1, 2), subset(3, 2, 3)).is_zero


def test_disjoint_singletons():
    lhs, rhs = bi_relation_sides(subset(3, 1), subset(3, 2))
    assert lhs == rhs == 2 * C(3, 1) * C(3, 2)


def test_equal_subsets():
    A = subset(4, 1, 3)
    lhs, rhs = bi_relation_sides(A, A)
    assert lhs == rhs == 2 * C(4, 1, 3) * C(4, 1, 3)


def test_arity_mismatch():
    with pytest.raises(ValueError):
        bi_residual(subset(3, 1), subset(4, 1))


@pytest.mark.parametrize("n, pairs", [(2, 6), (3, 28), (4, 120)])
def test_verify_bi(n, pairs):
    report = verify_bi(n)
    assert len(report) == len(subset_pairs(n)) == pairs
    assert report.ok, report.format()


def test_verify_bi_with_empty_subset():
    report = verify_bi(3, include_empty=True)
    assert len(report) == 36 and report.ok


def test_verify_bi_parallel_matches_serial():
    serial = verify_bi(3, jobs=1)
    parallel = verify_bi(3, jobs=2)
    assert [c.name for c in serial.checks] == [c.name for c in parallel.checks]
    assert parallel.ok


def test_verify_bi_needs_two_legs():
    with pytest.raises(ValueError):
        verify_bi(1)


def test_wrong_normalisation_fails():
    A, B = subset(3, 1, 2), subset(3, 2, 3)
    assert not bi_residual(A, B, scale=Fraction(-1, 2)).is_zero
    assert not bi_residual(A, B, scale=2).is_zero
    assert bi_residual(A, B, scale=1).is_zero


def test_conjugated_relation():
    assert conjugated_bi1_residual().is_zero
    # the image is the relation for the pair ({1,3}, {1,2})
    assert bi_residual(subset(3, 1, 2), subset(3, 1, 3)).is_zero


@pytest.mark.parametrize("n, casimirs, pairs", [(3, 7, 28), (4, 15, 120)])
def test_structure_report_counts(n, casimirs, pairs):
    doc = structure_report(n)
    assert doc["ok"]
    assert len(doc["casimirs"]) == casimirs
    assert len(doc["relations"]) == pairs
    assert all(r["status"] == "pass" and r["residual_terms"] == 0 for r in doc["relations"])
    assert "timings" not in doc["meta"]


def test_structure_report_is_stable():
    a = json.dumps(structure_report(3, diagnostics=True))
    b = json.dumps(structure_report(3, diagnostics=True))
    assert a == b


def test_structure_report_casimir_entries():
    doc = structure_report(3)
    first = doc["casimirs"][0]
    assert first == {"subset": [1], "terms": 3, "parity_profile": {"000": 3}}
    c13 = next(e for e in doc["casimirs"] if e["subset"] == [1, 3])
    assert c13["terms"] == 7


def test_structure_report_diagnostics():
    doc = structure_report(3, diagnostics=True, timings=True)
    (diag,) = doc["diagnostics"]
    assert diag["element"] == "Cbar_13" and not diag["centralizing"]
    assert diag["residual_terms"]["[Delta^(2)(Fp), X]"] > 0
    assert set(doc["meta"]["timings"]) == {"casimirs_s", "relations_s"}


def test_empty_generator_convention():
    empty = SubsetIndex(3)
    assert bi_residual(empty, subset(3, 1, 3)).is_zero
