import pytest
from hypothesis import settings

from floor_diagram_utils import config
from floor_diagram_utils.core.floor_diagrams import FloorDiagram, CompatiblePair

# Exact rational arithmetic is slow on the first call of each cached helper
settings.register_profile("floor", deadline=None, max_examples=60)
settings.load_profile("floor")


@pytest.fixture(autouse=True)
def _single_process(monkeypatch):
    # Tests opt into worker pools explicitly with jobs=
    monkeypatch.setattr(config, "DEFAULT_JOBS", 1)


@pytest.fixture
def example_diagram():
    """Degree 4, divergences 1, 1, 0, -2, one cycle."""
    return FloorDiagram(4, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (3, 4, 1)])


@pytest.fixture
def example_pair():
    # alpha = (1), beta = (1, 1): beta_1 at vertex 3, alpha_1 and beta_2 at vertex 4
    return CompatiblePair(alpha_parts=["", "", "", "1"], beta_parts=["", "", "1", "0,1"])


def brute_first_factor(templates, d, l_ext=0):
    """Nested sum over template positions of the product of extension counts and multiplicities."""
    from floor_diagram_utils.core.templates import gamma_k_extensions

    def _place(index, earliest):
        if index == len(templates):
            return 1
        template = templates[index]
        total = 0
        k = max(earliest, template.k_min)
        while k + template.length <= d - l_ext:
            total += (template.multiplicity * gamma_k_extensions(template, k)
                      * _place(index + 1, k + template.length))
            k += 1
        return total

    return _place(0, 1)
