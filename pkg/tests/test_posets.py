import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from floor_diagram_utils.core.posets import ElementClass, MarkingPoset


@st.composite
def posets(draw):
    backbone = draw(st.integers(min_value=1, max_value=3))
    classes = []
    for index in range(draw(st.integers(min_value=0, max_value=3))):
        first = draw(st.integers(min_value=1, max_value=backbone))
        last = draw(st.integers(min_value=first, max_value=backbone))
        classes.append(ElementClass(("c", index), draw(st.integers(min_value=0, max_value=2)), first, last))
    return MarkingPoset(backbone, classes)


@given(posets())
def test_gap_recursion_matches_topological_sorts(poset):
    assert poset.count_extensions() == poset.count_extensions_exhaustive()


def test_small_counts():
    # One free element above or below the single inner backbone vertex
    assert MarkingPoset(2, [ElementClass("m", 1, 1, 2)]).count_extensions() == 2
    # Three short edges and one midpoint in the same gap
    assert MarkingPoset(1, [ElementClass("short", 3, 1, 1), ElementClass("m", 1, 1, 1)]).count_extensions() == 4
    assert MarkingPoset(3, []).count_extensions() == 1


def test_placements_cover_every_gap_choice():
    poset = MarkingPoset(3, [ElementClass("m", 2, 2, 3), ElementClass("n", 1, 1, 1)])
    placements = list(poset.placements())
    assert len(placements) == 3
    assert {"n": 1} == placements[0][1]
    assert poset.size == 6


def test_graph_and_representative():
    poset = MarkingPoset(2, [ElementClass("m", 1, 1, 1)])
    graph = poset.to_graph()
    assert graph.number_of_nodes() == 3
    assert graph.has_edge(("backbone", 0), ("m", 0))
    assert graph.has_edge(("m", 0), ("backbone", 1))
    assert len(poset.representative()) == 3


def test_empty_classes_are_dropped():
    poset = MarkingPoset(2, [ElementClass("m", 0, 1, 2)])
    assert poset.classes == ()


@pytest.mark.parametrize("backbone, cls", [
    (2, ElementClass("m", 1, 1, 3)),
    (2, ElementClass("m", 1, 2, 1)),
    (0, ElementClass("m", 1, 1, 1)),
])
def test_invalid_posets(backbone, cls):
    with pytest.raises(ValidationError):
        MarkingPoset(backbone, [cls])


def test_duplicate_labels():
    with pytest.raises(ValidationError):
        MarkingPoset(2, [ElementClass("m", 1, 1, 1), ElementClass("m", 1, 2, 2)])


@given(posets())
def test_trusted_construction_counts_the_same(poset):
    rebuilt = MarkingPoset._trusted(poset.backbone, list(poset.classes))
    assert rebuilt.count_extensions() == poset.count_extensions()


def test_trusted_construction_drops_empty_classes():
    poset = MarkingPoset._trusted(2, [ElementClass(("m",), 0, 1, 2), ElementClass(("m", 1), 1, 1, 2)])
    assert len(poset.classes) == 1
