import math

import pytest
from pydantic import ValidationError

from floor_diagram_utils.errors import BelowMinimumDegreeError, InsufficientTangencyError
from floor_diagram_utils.core.sequences import TangencySequence, SupportMatrix
from floor_diagram_utils.core.polynomials import MultiPoly
from floor_diagram_utils.core.extended_templates import (ExtendedTemplate, enumerate_extended_templates,
                                                        ext_invariants, short_counts, marking_poset,
                                                        Q_count, q_poly)
from floor_diagram_utils.utils.golden import golden_extended_templates


@pytest.fixture
def worked_example():
    return ExtendedTemplate(lam=[(0, 3, 1), (1, 2, 2), (1, 2, 3), (2, 3, 2)], length=3,
                            A={(1, 1): 1, (2, 1): 1}, B={(1, 2): 1})


def test_worked_example(worked_example):
    assert worked_example.kappa == (1, 6, 3)
    assert worked_example.lambda_cogenus == 6
    assert worked_example.cogenus == 11
    assert worked_example._d_min_terms() == [4, 9, 8]
    invariants = ext_invariants(worked_example)
    assert (invariants.d_min, invariants.i0, invariants.s) == (9, 2, 2)
    assert short_counts(worked_example, 9) == [5, 0, 1]


def test_json(worked_example):
    data = worked_example.to_json()
    assert data["A"] == [[1], [1]]
    assert data["B"] == [[0, 1]]
    assert ExtendedTemplate.from_json(data) == worked_example


@pytest.mark.parametrize("delta, count", [(0, 1), (1, 2), (2, 11)])
def test_counts(delta, count):
    found = enumerate_extended_templates(delta)
    assert len(found) == count
    assert len(set(found)) == count
    assert all(ext.cogenus == delta for ext in found)


def test_trivial_extended_template():
    (trivial,) = enumerate_extended_templates(0)
    assert trivial.length == 0
    assert trivial.d_min == 1
    assert q_poly(trivial) == MultiPoly(1)


@pytest.mark.parametrize("row", golden_extended_templates(), ids=lambda row: f"{row['lambda']}-{row['A']}-{row['B']}")
def test_reference_rows(row):
    ext = ExtendedTemplate.from_json(row)
    assert ext in enumerate_extended_templates(row["cogenus"])
    assert ext.d_min == row["d_min"]
    assert ext.s == row["s"]
    assert q_poly(ext) == MultiPoly(row["q"])


def _cases(ext, extra=3):
    # (alpha, beta) with the matrices' columns available, |beta| >= delta(B) and d >= d_min
    alpha = ext.A.column_sums()
    base = ext.B.column_sums()
    lowest = max(ext.d_min, alpha.weighted + base.weighted)
    for d in range(lowest, lowest + extra):
        residual = d - alpha.weighted - base.weighted
        splits = [TangencySequence({1: residual})]
        if residual >= 2:
            splits.append(TangencySequence({1: residual - 2, 2: 1}))
        for split in splits:
            beta = base + split
            if beta.norm >= ext.B.cogenus:
                yield alpha, beta


@pytest.mark.parametrize("delta", [0, 1, 2])
def test_counts_agree_with_q(delta):
    checked = 0
    for ext in enumerate_extended_templates(delta):
        q = q_poly(ext)
        for alpha, beta in _cases(ext):
            values = {"D": alpha.weighted + beta.weighted, "S": beta.norm}
            values |= {name: beta[int(name[1:])] for name in q.variables if name[0] == "b"}
            expected = math.factorial(beta.norm - ext.B.cogenus) * q.evaluate(values) / beta.factorial
            assert Q_count(ext, alpha, beta) == expected
            checked += 1
    assert checked


def test_marking_poset_matches_exhaustive_count():
    ext = ExtendedTemplate(lam=[], length=1, B=[[1]])
    poset = marking_poset(ext, "1,1", 4)
    assert poset.count_extensions() == 5
    assert poset.count_extensions() == poset.count_extensions_exhaustive()


@pytest.mark.parametrize("delta", [1, 2, 3])
def test_q_vanishes_just_below_d_min(delta):
    for ext in enumerate_extended_templates(delta):
        q = q_poly(ext)
        for d in range(ext.d_min - ext.s, ext.d_min):
            assert q.subs({"D": d}).is_zero


@pytest.mark.parametrize("delta", [0, 1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_d_min_bound(delta):
    for ext in enumerate_extended_templates(delta):
        assert ext.d_min - ext.s <= delta + 1


def test_defect_filter():
    small = enumerate_extended_templates(2, max_defect=1)
    assert set(small) <= set(enumerate_extended_templates(2))
    assert all(ext.defect <= 1 for ext in small)
    assert ExtendedTemplate(lam=[], length=1, A=[[2]]) not in small


def test_below_minimum_degree(worked_example):
    with pytest.raises(BelowMinimumDegreeError):
        marking_poset(worked_example, "0,1", 8)


def test_missing_tangencies(worked_example):
    with pytest.raises(InsufficientTangencyError):
        Q_count(worked_example, "1", "0,1,0,3")
    with pytest.raises(InsufficientTangencyError):
        marking_poset(worked_example, "5", 9)


def test_invalid_extended_templates():
    with pytest.raises(ValidationError):
        ExtendedTemplate(lam=[], length=1, A=[[0], [1]])
    with pytest.raises(ValidationError):
        ExtendedTemplate(lam=[(0, 1, 2), (2, 3, 2)], length=3)
    with pytest.raises(ValidationError):
        ExtendedTemplate(lam=[(0, 1, 1)], length=1)
    assert ExtendedTemplate(A=SupportMatrix([[0], [1]])).length == 2
