############################################################
# utils/golden.py contains the reference data the package is
# checked against: published node polynomials, the template
# tables and the closed forms for leading coefficients
############################################################

### IMPORTING PACKAGES ###

# Default packages
import json
import math
import functools
from fractions import Fraction
from importlib import resources
# Math packages
import sympy
# The information contained in our helper scripts
from ..core.polynomials import MultiPoly

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["load_golden", "golden_node_polynomial", "golden_term_count", "golden_printed_terms",
           "golden_templates", "golden_extended_templates",
           "r_display_coefficients", "leading_display", "one_nodal_count"]

### LOADING ###

@functools.lru_cache(maxsize=None)
def load_golden() -> dict:
    with resources.files("floor_diagram_utils.utils").joinpath("golden.json").open("r") as f:
        return json.load(f)

def golden_node_polynomial(delta: int) -> MultiPoly:
    table = load_golden()["node_polynomials"]
    if str(delta) not in table:
        raise KeyError(f"no reference node polynomial for cogenus {delta}; available: {sorted(table)}")
    return MultiPoly(table[str(delta)])

def golden_term_count(delta: int) -> int | None:
    # Published term counts for the cogenera whose polynomials are not listed in full
    counts = load_golden()["node_polynomial_terms"]
    if str(delta) in counts:
        return counts[str(delta)]
    if str(delta) in load_golden()["node_polynomials"]:
        return len(golden_node_polynomial(delta))
    return None

def golden_printed_terms(delta: int) -> dict:
    # Coefficients the published polynomial prints differently from the corrected reference
    return load_golden().get("node_polynomial_printed", {}).get(str(delta), {})

def golden_templates(delta: int = None) -> list:
    rows = load_golden()["templates"]
    return [row for row in rows if delta is None or row["cogenus"] == delta]

def golden_extended_templates(delta: int = None) -> list:
    rows = load_golden()["extended_templates"]
    return [row for row in rows if delta is None or row["cogenus"] == delta]

### CLOSED FORMS ###

def r_display_coefficients(delta: int) -> dict:
    """
    Coefficients of d^(2 delta - i), i = 0..5, in the sum of first factors over
    all template collections of cogenus delta, as closed forms in delta.
    """
    x = Fraction(delta)
    inner = [
        Fraction(1),
        -Fraction(8, 3) * x,
        x * (11 * x + 1) / 9,
        x * (x - 1) * (496 * x - 245) / (6 * 27),
        -x * (x - 1) * (1685 * x ** 2 - 2773 * x + 1398) / (6 * 81),
        -x * (x - 1) * (x - 2) * (7352 * x ** 2 + 11611 * x - 25221) / (30 * 243),
    ]
    scale = Fraction(3 ** delta, math.factorial(delta))
    return {2 * delta - i: scale * c for i, c in enumerate(inner) if 2 * delta - i >= 0}

def leading_display(delta: int) -> MultiPoly:
    """The terms of N_delta of total degree >= 3 delta - 2, from their closed form in delta."""
    if delta < 1:
        raise ValueError(f"the closed form needs cogenus at least 1, got {delta}")
    D, S, a1, b1 = sympy.symbols("D S a1 b1")
    r = sympy.Rational
    n = sympy.Integer(delta)
    second = (-r(3, 2) * (n - 1) * D ** 2 - 8 * D * S + S * a1 + D * b1 + S * b1)
    third = (r(3, 8) * (n - 1) * (n - 2) * (3 * n - 1) * D ** 4
             + 12 * n * (n - 1) * D ** 3 * S
             + (11 * n + 1) * D ** 2 * S ** 2
             - r(3, 2) * n * (n - 1) * (D ** 3 * b1 + D ** 2 * S * a1)
             - r(1, 2) * (n + 5) * (3 * n - 2) * D ** 2 * S * b1
             - 8 * (n - 1) * (D * S ** 2 * a1 + D * S ** 2 * b1)
             + r(1, 2) * (n - 1) * (D ** 2 * b1 ** 2 + S ** 2 * a1 ** 2 + S ** 2 * b1 ** 2)
             + (n - 1) * (D * S * a1 * b1 + D * S * b1 ** 2 + S ** 2 * a1 * b1))
    # At delta = 1 the last block carries S^-1 and D^-2; they cancel after expansion
    expr = (sympy.Integer(3) ** n / sympy.factorial(n)) * (
        D ** (2 * n) * S ** n
        + n / 3 * second * D ** (2 * n - 2) * S ** (n - 1)
        + n / 9 * third * D ** (2 * n - 4) * S ** (n - 2))
    return MultiPoly(sympy.expand(expr))

def one_nodal_count(d: int) -> int:
    # Degree-d curves with one node through the right number of points
    return 3 * (d - 1) ** 2
