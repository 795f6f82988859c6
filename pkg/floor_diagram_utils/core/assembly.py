############################################################
# assembly.py contains the main formula: first factors from
# iterated discrete sums over templates, second factors from
# extended templates, the node polynomials themselves, their
# evaluation, and defect-filtered leading terms
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
import logging
import warnings
import functools
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
# The types we use in this script
from typing import Iterator
# The information contained in our helper scripts (validation)
from .. import config
from ..errors import DomainError, VerificationError, ResourceRefusal, ResourceRefusalWarning
from .sequences import TangencySequence, SupportMatrix
from .polynomials import MultiPoly, discrete_sum, falling_product, stirling_expansion
from .templates import enumerate_templates, template_poly
from .extended_templates import ExtendedTemplate, enumerate_extended_templates, q_poly

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["SummandIndex", "NodePolynomial", "template_collections", "summand_indices",
           "first_factor", "R_poly", "multinomial_poly", "second_factor", "node_polynomial",
           "evaluate_relative_severi", "severi_prefactor", "defects", "leading_terms"]

logger = logging.getLogger(__name__)

### CLASSES ###

class SummandIndex:
    """One summand of the main formula: an ordered list of templates and an extended template."""

    def __init__(self, templates, ext: ExtendedTemplate):
        self.templates = tuple(templates)
        self.ext = ext

    @property
    def cogenus(self) -> int:
        return sum(t.cogenus for t in self.templates) + self.ext.cogenus

    def __repr__(self):
        return f"SummandIndex(templates={list(self.templates)}, ext={self.ext!r})"

class NodePolynomial:
    """
    The relative node polynomial N_delta in D (= d), S (= |beta|), a_i (= alpha_i), b_i (= beta_i).

    It gives relative Severi degrees after the prefactor 1^beta_1 2^beta_2 ... (|beta| - delta)! / beta!,
    whenever |beta| >= delta.
    """

    DOMAIN = "|beta|>=delta"

    def __init__(self, delta: int, poly: MultiPoly):
        self.delta = delta
        self.poly = poly

    @classmethod
    def from_json(cls, data: dict) -> "NodePolynomial":
        return cls(data["delta"], MultiPoly.from_json(data))

    def evaluate(self, alpha, beta) -> Fraction:
        """N_delta(alpha; beta), without the prefactor."""
        alpha, beta = TangencySequence(alpha), TangencySequence(beta)
        values = {"D": alpha.weighted + beta.weighted, "S": beta.norm}
        for name in self.poly.variables:
            if name[0] == "a":
                values[name] = alpha[int(name[1:])]
            elif name[0] == "b":
                values[name] = beta[int(name[1:])]
        return self.poly.evaluate(values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodePolynomial):
            return NotImplemented
        return self.delta == other.delta and self.poly == other.poly

    def to_json(self) -> dict:
        return self.poly.to_json() | {"delta": self.delta, "domain": self.DOMAIN}

    def to_text(self) -> str:
        return self.poly.to_text()

    def __repr__(self):
        return f"NodePolynomial(delta={self.delta}, terms={len(self.poly)})"

### INDEXING ###

def template_collections(delta: int) -> Iterator[tuple]:
    """Ordered tuples of templates whose cogenera sum to delta."""
    if delta == 0:
        yield ()
        return
    for c in range(1, delta + 1):
        for template in enumerate_templates(c):
            for rest in template_collections(delta - c):
                yield (template,) + rest

def summand_indices(delta: int) -> Iterator[SummandIndex]:
    for e in range(delta + 1):
        for ext in enumerate_extended_templates(delta - e):
            for collection in template_collections(e):
                yield SummandIndex(collection, ext)

def defects(index: SummandIndex) -> tuple:
    """(defect of the template list, defect of the extended template), both non-negative."""
    templates = sum(t.cogenus for t in index.templates) - len(index.templates)
    return templates, index.ext.defect

### FIRST FACTORS ###

def first_factor(templates, l_ext: int = 0) -> MultiPoly:
    """
    Iterated sum over positions k_1 < ... < k_m of the product of the P(k_s), times the multiplicities.

    Template s runs from the first position left free by the templates before it (and at
    least its k_min) up to k_{s+1} - l(template s); the last one stops at D - l_ext - l(template m).
    """
    templates = list(templates)
    if not templates:
        return MultiPoly(1)
    k, D = MultiPoly.var("k"), MultiPoly.var("D")
    acc, start = template_poly(templates[0]), templates[0].k_min
    for previous, current in zip(templates, templates[1:]):
        # A discrete sum is only exact from one below its lower limit upwards
        inner = discrete_sum(acc, start).compose("x", k - previous.length)
        acc, start = template_poly(current) * inner, max(current.k_min, start + previous.length)
    last = templates[-1]
    total = discrete_sum(acc, start).compose("x", D - l_ext - last.length)
    return total.scale(math.prod(t.multiplicity for t in templates))

def _position_sums(delta: int, max_defect: int = None) -> dict:
    # inner[(e, f, end)](k): all template lists of cogenus e and defect f whose earliest
    # possible end is `end`, the last template ending by k; exact for k >= end - 1
    k = MultiPoly.var("k")
    limit = delta if max_defect is None else min(delta, max_defect + 1)
    templates = [t for c in range(1, limit + 1) for t in enumerate_templates(c)]
    inner = {}
    for e in range(1, delta + 1):
        for f in range(e):
            if max_defect is not None and f > max_defect:
                continue
            totals = {}
            for template in templates:
                c, g = template.cogenus, template.defect
                if c > e or g > f:
                    continue
                if c == e and g == f:
                    heads = [(template.k_min, MultiPoly(1))]
                else:
                    heads = [(max(template.k_min, end), poly) for (e0, f0, end), poly in inner.items()
                             if (e0, f0) == (e - c, f - g)]
                for start, here in heads:
                    placed = (template_poly(template) * here).scale(template.multiplicity)
                    summed = discrete_sum(placed, start).compose("x", k - template.length)
                    key = (e, f, start + template.length)
                    totals[key] = totals.get(key, MultiPoly(0)) + summed
            inner.update({key: poly for key, poly in totals.items() if not poly.is_zero})
    return inner

@functools.lru_cache(maxsize=None)
def _r_polys(delta: int, max_defect: int = None) -> dict:
    # R_e(D) for every e <= delta from one pass of the position sums
    D = MultiPoly.var("D")
    firsts = {e: MultiPoly(0) for e in range(1, delta + 1)}
    for (e, _, _), poly in _position_sums(delta, max_defect).items():
        firsts[e] = firsts[e] + poly.compose("k", D)
    firsts[0] = MultiPoly(1)
    return firsts

def R_poly(delta: int, max_defect: int = None) -> MultiPoly:
    """
    Sum of first_factor(collection, 0) over all template collections of cogenus delta.

    With max_defect only collections of defect <= max_defect are included, which is
    enough for the terms of degree >= 2 delta - max_defect.
    """
    if delta < 0:
        raise DomainError(f"cogenus must be non-negative, got {delta}")
    return _r_polys(delta, max_defect)[delta]

### SECOND FACTORS ###

def multinomial_poly(A: SupportMatrix) -> MultiPoly:
    """The sequence multinomial (alpha; rows of A) as a polynomial in the a_j."""
    poly = MultiPoly(1)
    for j, count in A.column_sums().items():
        poly = poly * falling_product(f"a{j}", 0, count)
    return poly.scale(Fraction(1, math.prod(math.factorial(v) for _, v in A.items())))

def second_factor(ext: ExtendedTemplate, delta: int, depth: int = None) -> MultiPoly:
    """
    mu(Lambda) * multinomial(alpha; A) * (S - delta(B)) ... (S - delta + 1) * q.

    With depth, the falling product keeps only its top depth+1 powers of (S - delta(B)).
    """
    if ext.cogenus > delta:
        raise ValueError(f"the extended template has cogenus {ext.cogenus} > {delta}")
    if depth is None:
        tail = falling_product("S", ext.B.cogenus, delta)
    else:
        tail = stirling_expansion("S", ext.B.cogenus, delta, depth=depth)
    return (multinomial_poly(ext.A) * tail * q_poly(ext)).scale(ext.multiplicity)

### NODE POLYNOMIALS ###

def _check_cogenus(delta: int):
    if delta < 0:
        raise DomainError(f"cogenus must be non-negative, got {delta}")
    if delta > config.MAX_NODE_POLYNOMIAL_COGENUS:
        message = f"node polynomials are supported up to cogenus {config.MAX_NODE_POLYNOMIAL_COGENUS}, got {delta}"
        warnings.warn(message, ResourceRefusalWarning)
        raise ResourceRefusal(message)

def _summand(ext: ExtendedTemplate, delta: int, first: MultiPoly, depth: int = None) -> MultiPoly:
    shifted = first.compose("D", MultiPoly.var("D") - ext.length)
    return shifted * second_factor(ext, delta, depth)

def _summand_json(payload) -> dict:
    # Worker entry point; JSON keeps the payload picklable and ring-independent
    ext_json, delta, first_json, depth = payload
    ext = ExtendedTemplate.from_json(ext_json)
    return _summand(ext, delta, MultiPoly.from_json(first_json), depth).to_json()

def _assemble(delta: int, max_defect: int = None, depth: int = None, jobs: int = None) -> MultiPoly:
    jobs = config.DEFAULT_JOBS if jobs is None else jobs
    firsts = _r_polys(delta, max_defect)
    exts = [ext for c in range(delta + 1) for ext in enumerate_extended_templates(c, max_defect)]
    if jobs <= 1:
        parts = [_summand(ext, delta, firsts[delta - ext.cogenus], depth) for ext in exts]
    else:
        payloads = [(ext.to_json(), delta, firsts[delta - ext.cogenus].to_json(), depth) for ext in exts]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            parts = [MultiPoly.from_json(data) for data in executor.map(_summand_json, payloads)]
    return sum(parts, MultiPoly(0))

def node_polynomial(delta: int, jobs: int = None, cache=None) -> NodePolynomial:
    """
    N_delta as the sum over extended templates T of R_{delta - delta(T)}(D - l(T)) * second_factor(T).

    An optional cache (see utils.cache.DiskCache) stores the result by cogenus.
    """
    _check_cogenus(delta)
    if cache is not None:
        stored = cache.get("nodepoly", delta)
        if stored is not None:
            return NodePolynomial.from_json(stored)
    poly = _assemble(delta, jobs=jobs)
    result = NodePolynomial(delta, poly)
    logger.info("assembled N_%s with %s terms", delta, len(poly))
    if cache is not None:
        cache.put("nodepoly", delta, result.to_json())
    return result

def leading_terms(delta: int, t: int, jobs: int = None) -> MultiPoly:
    """
    The terms of N_delta of total degree >= 3 delta - t.

    Only summands whose template list and extended template both have defect <= t
    can reach that degree, so the rest are never built.
    """
    _check_cogenus(delta)
    if t < 0:
        raise DomainError(f"depth must be non-negative, got {t}")
    return _assemble(delta, max_defect=t, depth=t, jobs=jobs).truncate(3 * delta - t)

### EVALUATION ###

def severi_prefactor(delta: int, beta) -> Fraction:
    """1^beta_1 2^beta_2 ... (|beta| - delta)! / beta!"""
    beta = TangencySequence(beta)
    weight = math.prod(i ** v for i, v in beta.items())
    return Fraction(weight * math.factorial(beta.norm - delta), beta.factorial)

def evaluate_relative_severi(delta: int, alpha, beta, jobs: int = None, cache=None) -> int:
    alpha, beta = TangencySequence(alpha), TangencySequence(beta)
    if beta.norm < delta:
        raise DomainError(f"the node polynomial needs |beta| >= delta, got |beta| = {beta.norm} < {delta}; "
                          "use severi_degree_enum for this case")
    if alpha.weighted + beta.weighted < 1:
        raise DomainError("alpha and beta are both zero, so there is no curve degree to count")
    value = severi_prefactor(delta, beta) * node_polynomial(delta, jobs=jobs, cache=cache).evaluate(alpha, beta)
    if value.denominator != 1:
        raise VerificationError(f"N_{delta} evaluated to the non-integer {value} at alpha={alpha}, beta={beta}")
    return int(value)
