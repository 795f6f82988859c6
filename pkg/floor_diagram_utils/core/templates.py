############################################################
# templates.py contains the template building blocks of
# floor diagrams: their generation by cogenus, their numeric
# invariants and their polynomials P(k)
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
import logging
import functools
# The types we use in this script
from typing import NamedTuple
# The information contained in our helper scripts (validation)
from ..errors import PlacementError
from ..validation import templates as tpv
from ..validation.shared import _kappa, _edge_cogenus, _uncovered
from .posets import ElementClass, MarkingPoset
from .polynomials import MultiPoly, interpolate

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["Template", "TemplateInvariants", "enumerate_templates",
           "template_invariants", "gamma_k_extensions", "template_poly"]

logger = logging.getLogger(__name__)

### CLASSES ###

class TemplateInvariants(NamedTuple):
    length: int
    multiplicity: int
    cogenus: int
    kappa: tuple
    k_min: int
    s: int

class Template:
    """
    A short-edge-free weighted graph on the vertices 0..l covering every interior vertex.

    Equality is equality of the sorted edge multisets.
    """

    ## INITIALIZATION ##
    def __init__(self, edges: list, length: int = None):
        validated = tpv.TemplateModel(edges=edges, length=length)
        self._edges = tuple(validated.edges)

    @classmethod
    def _trusted(cls, edges):
        template = cls.__new__(cls)
        template._edges = tuple(sorted(edges))
        return template

    @classmethod
    def from_json(cls, data: dict) -> "Template":
        return cls(edges=data["edges"], length=data.get("l"))

    ## INTERNAL PROPERTIES ##
    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def length(self) -> int:
        return max(j for _, j, _ in self._edges)

    @property
    def multiplicity(self) -> int:
        return math.prod(w * w for _, _, w in self._edges)

    @property
    def cogenus(self) -> int:
        return _edge_cogenus(self._edges)

    @property
    def kappa(self) -> tuple:
        return _kappa(self._edges, self.length)

    @property
    def k_min(self) -> int:
        return max(kappa - j + 1 for j, kappa in enumerate(self.kappa, start=1))

    @property
    def j0(self) -> int:
        # Smallest j attaining k_min
        values = [kappa - j + 1 for j, kappa in enumerate(self.kappa, start=1)]
        return values.index(max(values)) + 1

    @property
    def s(self) -> int:
        j0 = self.j0
        return sum(1 for i, j, _ in self._edges if i == j0 - 1 and j == j0)

    @property
    def defect(self) -> int:
        return self.cogenus - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Template):
            return NotImplemented
        return self._edges == other._edges

    def __hash__(self):
        return hash(self._edges)

    def __lt__(self, other: "Template") -> bool:
        return (self.length, self._edges) < (other.length, other._edges)

    ## OUTPUT ##
    def to_json(self, with_invariants: bool = False) -> dict:
        data = {"l": self.length, "edges": [list(edge) for edge in self._edges]}
        if with_invariants:
            data["invariants"] = template_invariants(self)._asdict()
            data["invariants"]["kappa"] = list(data["invariants"]["kappa"])
            data["P"] = template_poly(self).to_json()
        return data

    def __repr__(self):
        return f"Template({list(self._edges)})"

### FUNCTIONS ###

def template_invariants(template: Template) -> TemplateInvariants:
    return TemplateInvariants(length=template.length, multiplicity=template.multiplicity,
                              cogenus=template.cogenus, kappa=template.kappa,
                              k_min=template.k_min, s=template.s)

def template_poset(template: Template, k: int) -> MarkingPoset:
    """
    The vertex poset of the template placed at position k.

    Gap i gets k + i - 1 - kappa_i extra short edges, and every edge is subdivided
    once: the midpoint of an edge (a, b) lies in one of the gaps a+1..b.
    """
    if k < template.k_min:
        raise PlacementError(f"position k={k} is below k_min={template.k_min} for {template}")
    classes = []
    for i, kappa in enumerate(template.kappa, start=1):
        classes.append(ElementClass(("short", i), k + i - 1 - kappa, i, i))
    counts = {}
    for edge in template.edges:
        counts[edge] = counts.get(edge, 0) + 1
    for (a, b, w), count in sorted(counts.items()):
        classes.append(ElementClass(("edge", a, b, w), count, a + 1, b))
    return MarkingPoset._trusted(template.length + 1, classes)

def gamma_k_extensions(template: Template, k: int) -> int:
    return template_poset(template, k).count_extensions()

@functools.lru_cache(maxsize=None)
def template_poly(template: Template) -> MultiPoly:
    """
    P(k), the polynomial counting extensions of the template placed at k >= k_min.

    Fitted through k_min .. k_min + #E and checked at one further point.
    """
    degree = len(template.edges)
    ks = range(template.k_min, template.k_min + degree + 2)
    return interpolate([(k, gamma_k_extensions(template, k)) for k in ks], degree, var="k")

@functools.lru_cache(maxsize=None)
def enumerate_templates(delta: int) -> tuple:
    """
    All templates of cogenus exactly delta, sorted by length and then edges.

    Every edge contributes (j - i) * w - 1 >= 1, so lengths and weights are at most
    delta + 1 and the search space is finite.
    """
    if delta < 1:
        raise ValueError(f"templates have cogenus at least 1, got {delta}")
    found = []
    for length in range(1, delta + 2):
        candidates = [(i, j, w)
                      for i in range(length) for j in range(i + 1, length + 1)
                      for w in range(1, delta + 2)
                      if 1 <= (j - i) * w - 1 <= delta]
        for edges in _edge_multisets(candidates, delta):
            if max(j for _, j, _ in edges) != length or min(i for i, _, _ in edges) != 0:
                continue
            if _uncovered(edges, length - 1):
                continue
            found.append(Template._trusted(edges))
    logger.debug("found %s templates of cogenus %s", len(found), delta)
    return tuple(sorted(found))

### HELPING FUNCTIONS ###

def _edge_multisets(candidates: list, budget: int, start: int = 0):
    # Multisets of candidate edges whose cogenus contributions sum to budget exactly
    if budget == 0:
        yield ()
        return
    for index in range(start, len(candidates)):
        i, j, w = candidates[index]
        cost = (j - i) * w - 1
        if cost > budget:
            continue
        for rest in _edge_multisets(candidates, budget - cost, index):
            yield (candidates[index],) + rest
