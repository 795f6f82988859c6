############################################################
# extended_templates.py contains the right-end building
# blocks (Lambda, A, B) of floor diagrams: their generation,
# invariants, marking posets, exact counts Q and polynomials q
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
import logging
import functools
from fractions import Fraction
# The types we use in this script
from typing import NamedTuple
# The information contained in our helper scripts (validation)
from ..errors import BelowMinimumDegreeError, InsufficientTangencyError
from ..validation import templates as tpv
from ..validation.shared import _kappa, _edge_cogenus, _uncovered
from .sequences import TangencySequence, SupportMatrix
from .posets import ElementClass, MarkingPoset
from .polynomials import MultiPoly, falling_product, rising_product
from .templates import _edge_multisets

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["ExtendedTemplate", "ExtendedInvariants", "enumerate_extended_templates",
           "ext_invariants", "short_counts", "marking_poset", "Q_count", "q_poly"]

logger = logging.getLogger(__name__)

### CLASSES ###

class ExtendedInvariants(NamedTuple):
    length: int
    cogenus: int
    kappa: tuple
    d_min: int
    i0: int
    s: int

class ExtendedTemplate:
    """
    A graph Lambda on the vertices 0..l together with the tangency matrices A and B.

    Row i of A and B describes the vertex l - i of Lambda; the last vertex l has no row.
    """

    ## INITIALIZATION ##
    def __init__(self, lam: list = None, length: int = None, A=None, B=None):
        A = A if isinstance(A, SupportMatrix) else SupportMatrix(A)
        B = B if isinstance(B, SupportMatrix) else SupportMatrix(B)
        if length is None:
            length = max([j for _, j, _ in lam or []] + [A.length, B.length])
        validated = tpv.ExtendedTemplateModel(lam=lam, length=length, A=dict(A.items()), B=dict(B.items()))
        self._lam = tuple(validated.lam)
        self._length = validated.length
        self._A = A
        self._B = B

    @classmethod
    def _trusted(cls, lam, length: int, A: SupportMatrix, B: SupportMatrix):
        template = cls.__new__(cls)
        template._lam = tuple(sorted(lam))
        template._length = length
        template._A = A
        template._B = B
        return template

    @classmethod
    def from_json(cls, data: dict) -> "ExtendedTemplate":
        return cls(lam=data["lambda"]["edges"], length=data["lambda"]["l"], A=data.get("A"), B=data.get("B"))

    ## INTERNAL PROPERTIES ##
    @property
    def lam(self) -> tuple:
        return self._lam

    @property
    def length(self) -> int:
        return self._length

    @property
    def A(self) -> SupportMatrix:
        return self._A

    @property
    def B(self) -> SupportMatrix:
        return self._B

    @property
    def matrix_length(self) -> int:
        return max(self._A.length, self._B.length)

    @property
    def lambda_cogenus(self) -> int:
        return _edge_cogenus(self._lam)

    @property
    def cogenus(self) -> int:
        return self.lambda_cogenus + self._A.cogenus + self._B.cogenus

    @property
    def multiplicity(self) -> int:
        return math.prod(w * w for _, _, w in self._lam)

    @property
    def kappa(self) -> tuple:
        return _kappa(self._lam, self._length)

    @property
    def defect(self) -> int:
        return self.lambda_cogenus + 2 * self._A.cogenus + 2 * self._B.cogenus - self._A.norm - self._B.norm

    def _d_min_terms(self) -> list:
        l = self._length
        return [l - i + 1 + kappa + self._A.wls(l + 1 - i) + self._B.wls(l + 1 - i)
                for i, kappa in enumerate(self.kappa, start=1)]

    @property
    def d_min(self) -> int:
        # A single vertex fits in any diagram of degree 1
        return max(self._d_min_terms(), default=1)

    @property
    def i0(self) -> int:
        terms = self._d_min_terms()
        return terms.index(max(terms)) + 1 if terms else 0

    @property
    def s(self) -> int:
        i0 = self.i0
        return sum(1 for i, j, _ in self._lam if i == i0 - 1 and j == i0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtendedTemplate):
            return NotImplemented
        return (self._length, self._lam, self._A, self._B) == (other._length, other._lam, other._A, other._B)

    def __hash__(self):
        return hash((self._length, self._lam, self._A, self._B))

    ## OUTPUT ##
    def to_json(self, with_invariants: bool = False) -> dict:
        data = {"lambda": {"l": self._length, "edges": [list(edge) for edge in self._lam]},
                "A": self._A.to_json(), "B": self._B.to_json()}
        if with_invariants:
            invariants = ext_invariants(self)._asdict()
            invariants["kappa"] = list(invariants["kappa"])
            invariants["multiplicity"] = self.multiplicity
            data["invariants"] = invariants
            data["q"] = q_poly(self).to_json()
        return data

    def __repr__(self):
        return f"ExtendedTemplate(lam={list(self._lam)}, length={self._length}, A={self._A.to_json()}, B={self._B.to_json()})"

### FUNCTIONS ###

def ext_invariants(template: ExtendedTemplate) -> ExtendedInvariants:
    return ExtendedInvariants(length=template.length, cogenus=template.cogenus, kappa=template.kappa,
                              d_min=template.d_min, i0=template.i0, s=template.s)

def short_counts(template: ExtendedTemplate, d: int) -> list:
    """Short edges per gap i = 1..l when the extended template ends a degree-d diagram."""
    l = template.length
    return [d - l + i - 1 - kappa - template.A.wls(l + 1 - i) - template.B.wls(l + 1 - i)
            for i, kappa in enumerate(template.kappa, start=1)]

def _placed_classes(template: ExtendedTemplate) -> list:
    # Midpoints of Lambda edges and of B edges; B row r leaves vertex l - r towards l + 1
    l = template.length
    counts = {}
    for edge in template.lam:
        counts[edge] = counts.get(edge, 0) + 1
    classes = [ElementClass(("edge", a, b, w), count, a + 1, b) for (a, b, w), count in sorted(counts.items())]
    for (r, j), count in template.B.items():
        classes.append(ElementClass(("B", r, j), count, l - r + 1, l + 1))
    return classes

def marking_poset(template: ExtendedTemplate, beta, d: int) -> MarkingPoset:
    """
    The poset of the extended template ending a degree-d diagram with tangencies beta.

    An extra top vertex l + 1 receives the B edges and the beta_j - sum_i b_ij
    residual edges of weight j from vertex l; every edge is subdivided.
    """
    beta = TangencySequence(beta)
    column_sums = template.B.column_sums()
    if not column_sums <= beta:
        raise InsufficientTangencyError(f"the columns of B sum to {column_sums}, which exceeds beta = {beta}")
    shorts = short_counts(template, d)
    if any(count < 0 for count in shorts):
        raise BelowMinimumDegreeError(f"degree {d} is below d_min = {template.d_min} for {template}")
    l = template.length
    classes = [ElementClass(("short", i), count, i, i) for i, count in enumerate(shorts, start=1)]
    classes += _placed_classes(template)
    for j, count in (beta - column_sums).items():
        classes.append(ElementClass(("beta", j), count, l + 1, l + 1))
    return MarkingPoset._trusted(l + 2, classes)

def Q_count(template: ExtendedTemplate, alpha, beta) -> int:
    """Linear extensions of the marking poset, up to equivalence, for d = sum i (alpha_i + beta_i)."""
    alpha, beta = TangencySequence(alpha), TangencySequence(beta)
    column_sums = template.A.column_sums()
    if not column_sums <= alpha:
        raise InsufficientTangencyError(f"the columns of A sum to {column_sums}, which exceeds alpha = {alpha}")
    return marking_poset(template, beta, alpha.weighted + beta.weighted).count_extensions()

@functools.lru_cache(maxsize=None)
def q_poly(template: ExtendedTemplate) -> MultiPoly:
    """
    The polynomial q in D, S and b_j with Q = (|beta| - delta(B))! / beta! * q.

    Sums over every way of dropping the Lambda and B midpoints into gaps: inside
    the template a gap holding n short edges and r midpoints contributes the
    rising product (n+1)...(n+r), and the last gap contributes the matching
    count against the residual beta edges.
    """
    l = template.length
    D, S = MultiPoly.var("D"), MultiPoly.var("S")
    shorts = [D + count for count in short_counts(template, 0)]
    slack = template.B.cogenus - template.B.norm
    classes = _placed_classes(template)
    total = MultiPoly(0)
    for placement in MarkingPoset._trusted(l + 2, classes).placements():
        term = MultiPoly(1)
        for gap in range(1, l + 2):
            entries = placement.get(gap, {})
            placed = sum(entries.values())
            base = shorts[gap - 1] if gap <= l else S - template.B.cogenus
            extra = placed if gap <= l else slack + placed
            weight = Fraction(1, math.prod(math.factorial(c) for c in entries.values()))
            term = term * rising_product(base, extra).scale(weight)
        total = total + term
    for j, count in template.B.column_sums().items():
        total = total * falling_product(f"b{j}", 0, count)
    return total

@functools.lru_cache(maxsize=None)
def enumerate_extended_templates(delta: int, max_defect: int = None) -> tuple:
    """
    All extended templates of cogenus exactly delta, optionally only those of small defect.

    For each pair of matrices the remaining cogenus e goes to Lambda, whose length is
    at most max(l(A), l(B)) + e since every covering edge of length L costs at least L - 1.
    """
    if delta < 0:
        raise ValueError(f"cogenus must be non-negative, got {delta}")
    found = []
    for A, B in _matrix_pairs(delta):
        rest = delta - A.cogenus - B.cogenus
        # The defect of every extended template built on (A, B) is fixed by rest
        if max_defect is not None and rest + 2 * (A.cogenus + B.cogenus) - A.norm - B.norm > max_defect:
            continue
        matrix_length = max(A.length, B.length)
        for length in range(matrix_length, matrix_length + rest + 1):
            candidates = [(i, j, w)
                          for i in range(length) for j in range(i + 1, length + 1)
                          for w in range(1, rest + 2)
                          if 1 <= (j - i) * w - 1 <= rest]
            for edges in _edge_multisets(candidates, rest):
                if _uncovered(edges, length - matrix_length):
                    continue
                found.append(ExtendedTemplate._trusted(edges, length, A, B))
    logger.debug("found %s extended templates of cogenus %s", len(found), delta)
    return tuple(found)

### HELPING FUNCTIONS ###

def _matrix_pairs(delta: int):
    # Pairs (A, B) with delta(A) + delta(B) <= delta; a cell (i, j) costs i * j
    cells = [(kind, i, j) for kind in ("A", "B")
             for i in range(1, delta + 1) for j in range(1, delta + 1) if i * j <= delta]

    def _fill(index: int, budget: int, chosen: dict):
        if index == len(cells):
            yield chosen
            return
        kind, i, j = cells[index]
        for count in range(budget // (i * j) + 1):
            updated = dict(chosen)
            if count:
                updated[(kind, i, j)] = count
            yield from _fill(index + 1, budget - count * i * j, updated)

    for chosen in _fill(0, delta, {}):
        A = SupportMatrix._trusted({(i, j): c for (kind, i, j), c in chosen.items() if kind == "A"})
        B = SupportMatrix._trusted({(i, j): c for (kind, i, j), c in chosen.items() if kind == "B"})
        yield A, B
