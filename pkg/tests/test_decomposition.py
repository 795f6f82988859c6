import math

import pytest

from floor_diagram_utils.errors import PlacementError, BelowMinimumDegreeError, InsufficientTangencyError
from floor_diagram_utils.core.sequences import TangencySequence, SupportMatrix, seq_multinomial, tangency_pairs
from floor_diagram_utils.core.floor_diagrams import (enumerate_floor_diagrams, enumerate_compatible_pairs,
                                                    count_markings_for_pair)
from floor_diagram_utils.core.templates import Template, gamma_k_extensions
from floor_diagram_utils.core.extended_templates import ExtendedTemplate, Q_count
from floor_diagram_utils.core.decomposition import decompose, recompose


def _marked_diagrams(d, delta):
    for diagram in enumerate_floor_diagrams(d, delta):
        for alpha, beta in tangency_pairs(d):
            for pair in enumerate_compatible_pairs(diagram, alpha, beta):
                yield diagram, pair, alpha, beta


@pytest.fixture
def reconstruction_parts():
    templates = [(Template([(0, 1, 2)]), 2), (Template([(0, 2, 1), (1, 2, 3)]), 3)]
    ext = ExtendedTemplate(lam=[(1, 2, 2), (1, 3, 1)], length=3,
                           A=[[1, 1], [1]], B={(2, 1): 1, (3, 2): 1})
    return templates, ext


def test_example_decomposition(example_diagram, example_pair):
    templates, ext = decompose(example_diagram, example_pair)
    assert templates == [(Template([(0, 1, 2)]), 2)]
    assert ext == ExtendedTemplate(lam=[], length=1, B=[[1]])
    assert recompose((templates, ext), "1", "1,1") == (example_diagram, example_pair)


def test_reconstruction(reconstruction_parts):
    diagram, pair = recompose(reconstruction_parts, "3,2", "3,2")
    assert diagram.d == 14
    counts = diagram.edge_counts()
    assert counts[(10, 11, 1)] == 10
    assert counts[(11, 12, 1)] == 9
    assert counts[(12, 13, 1)] == 5
    assert counts[(13, 14, 1)] == 5
    assert counts[(12, 13, 2)] == 1
    assert counts[(12, 14, 1)] == 1
    assert pair.alpha(14) == TangencySequence("1,1")
    assert pair.beta(14) == TangencySequence("2,1")
    assert pair.beta(11) == TangencySequence("0,1")
    assert decompose(diagram, pair) == reconstruction_parts


def test_template_below_k_min(reconstruction_parts):
    templates, ext = reconstruction_parts
    moved = [(templates[0][0], 1), templates[1]]
    with pytest.raises(PlacementError):
        recompose((moved, ext), "3,2", "3,2")


def test_overlapping_templates(reconstruction_parts):
    templates, ext = reconstruction_parts
    moved = [(templates[0][0], 3), (templates[1][0], 3)]
    with pytest.raises(PlacementError):
        recompose((moved, ext), "3,2", "3,2")


def test_template_beyond_the_extended_template(reconstruction_parts):
    templates, ext = reconstruction_parts
    with pytest.raises(PlacementError):
        recompose(([(Template([(0, 1, 2)]), 11)], ext), "3,2", "3,2")


def test_matrices_need_tangencies(reconstruction_parts):
    with pytest.raises(InsufficientTangencyError):
        recompose(reconstruction_parts, "1,2", "3,2,0,1")


def test_degree_below_d_min():
    ext = ExtendedTemplate(lam=[(0, 1, 2)], length=1, A=[[1]])
    with pytest.raises(BelowMinimumDegreeError):
        recompose(([], ext), "1", "2")
    with pytest.raises(BelowMinimumDegreeError):
        recompose(([], ExtendedTemplate(lam=[], length=3, A=[[0], [0], [1]])), "1", "")


@pytest.mark.parametrize("d, delta", [(d, delta) for d in range(1, 6) for delta in range(3)])
def test_round_trip_and_cogenus(d, delta):
    for diagram, pair, alpha, beta in _marked_diagrams(d, delta):
        templates, ext = decompose(diagram, pair)
        assert sum(t.cogenus for t, _ in templates) + ext.cogenus == diagram.cogenus
        assert recompose((templates, ext), alpha, beta) == (diagram, pair)


@pytest.mark.parametrize("d, delta", [(3, 1), (4, 1), (4, 2), (5, 2)])
def test_marking_counts_factor(d, delta):
    for diagram, pair, alpha, beta in _marked_diagrams(d, delta):
        templates, ext = decompose(diagram, pair)
        placed = math.prod(gamma_k_extensions(t, k) for t, k in templates)
        rows = list(ext.A.rows().values())
        expected = placed * seq_multinomial(alpha, rows) * Q_count(ext, alpha, beta)
        assert count_markings_for_pair(diagram, pair) == expected
        assert diagram.multiplicity == math.prod(t.multiplicity for t, _ in templates) * ext.multiplicity


def test_rows_follow_the_last_vertices(example_diagram, example_pair):
    _, ext = decompose(example_diagram, example_pair)
    assert ext.A == SupportMatrix()
    assert ext.B.row(1) == example_pair.beta(3)
