import itertools

import pytest
from pydantic import ValidationError

from floor_diagram_utils.errors import PlacementError
from floor_diagram_utils.core.polynomials import MultiPoly
from floor_diagram_utils.core.templates import (Template, enumerate_templates, template_invariants,
                                               template_poset, gamma_k_extensions, template_poly)
from floor_diagram_utils.utils.golden import golden_templates


def test_cogenus_one():
    assert enumerate_templates(1) == (Template([(0, 1, 2)]), Template([(0, 2, 1)]))


def test_cogenus_two_count():
    assert len(enumerate_templates(2)) == 7


@pytest.mark.parametrize("row", golden_templates(), ids=lambda row: str(row["edges"]))
def test_reference_rows(row):
    template = Template(row["edges"])
    assert template in enumerate_templates(row["cogenus"])
    assert template.cogenus == row["cogenus"]
    assert template.length == row["l"]
    assert template.multiplicity == row["multiplicity"]
    assert list(template.kappa) == row["kappa"]
    assert template.k_min == row["k_min"]
    assert template.s == row["s"]
    assert template_poly(template) == MultiPoly(row["P"])


def test_invariants_of_a_two_edge_template():
    template = Template([(1, 2, 2), (0, 2, 1)])
    assert template.edges == ((0, 2, 1), (1, 2, 2))
    invariants = template_invariants(template)
    assert invariants.kappa == (1, 3)
    assert invariants.k_min == 2
    assert invariants.s == 1
    assert template.j0 == 2
    assert template.defect == 1


def _brute_templates(delta):
    # Every edge costs at least 1, so at most delta edges on at most delta + 1 gaps
    candidates = [(i, j, w) for j in range(1, delta + 2) for i in range(j) for w in range(1, delta + 2)
                  if 1 <= (j - i) * w - 1 <= delta]
    found = set()
    for size in range(1, delta + 1):
        for edges in itertools.combinations_with_replacement(candidates, size):
            if sum((j - i) * w - 1 for i, j, w in edges) != delta:
                continue
            try:
                found.add(Template(list(edges)))
            except ValidationError:
                continue
    return found


@pytest.mark.parametrize("delta", [1, 2, 3])
def test_enumeration_matches_brute_force(delta):
    found = enumerate_templates(delta)
    assert len(set(found)) == len(found)
    assert set(found) == _brute_templates(delta)


@pytest.mark.parametrize("delta", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_position_bound(delta):
    # (0,1,2),(0,2,1) has k_min 3, l 2 and s 1, one past delta + 1 at cogenus 2
    for template in enumerate_templates(delta):
        assert template.k_min + template.length - template.s <= delta + 2


def test_position_bound_is_reached_above_delta_plus_one():
    template = Template([(0, 1, 2), (0, 2, 1)])
    assert template.cogenus == 2
    assert (template.k_min, template.length, template.s) == (3, 2, 1)


@pytest.mark.parametrize("delta", [1, 2])
def test_polynomial_counts_every_position(delta):
    for template in enumerate_templates(delta):
        poly = template_poly(template)
        assert poly.degree("k") <= len(template.edges)
        for k in range(template.k_min, template.k_min + 6):
            assert poly.evaluate({"k": k}) == gamma_k_extensions(template, k)


def test_poset_of_a_placed_template():
    poset = template_poset(Template([(0, 2, 1)]), 3)
    assert poset.backbone == 3
    assert poset.count_extensions() == 7
    assert poset.count_extensions() == poset.count_extensions_exhaustive()


def test_position_below_k_min():
    with pytest.raises(PlacementError):
        template_poset(Template([(0, 1, 3)]), 2)


@pytest.mark.parametrize("edges", [
    [],
    [(0, 1, 1)],
    [(1, 3, 1)],
    [(0, 1, 2), (2, 3, 2)],
])
def test_invalid_templates(edges):
    with pytest.raises(ValidationError):
        Template(edges)


def test_length_must_match():
    with pytest.raises(ValidationError):
        Template([(0, 2, 1)], length=3)


def test_json():
    template = Template.from_json({"l": 2, "edges": [[0, 2, 1]]})
    data = template.to_json(with_invariants=True)
    assert data["invariants"]["k_min"] == 1
    assert MultiPoly.from_json(data["P"]) == MultiPoly("2*k + 1")
    with pytest.raises(ValueError):
        enumerate_templates(0)
