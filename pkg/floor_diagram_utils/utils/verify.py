############################################################
# utils/verify.py contains the checks run by the verify
# command: reference tables, closed forms, and the grid of
# enumerated against polynomial Severi degrees
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
import logging
from fractions import Fraction
# The types we use in this script
from typing import NamedTuple, Literal
# The information contained in our helper scripts
from ..core.sequences import tangency_pairs
from ..core.polynomials import MultiPoly
from ..core.floor_diagrams import severi_degree_enum
from ..core.templates import Template, enumerate_templates, template_poly
from ..core.extended_templates import ExtendedTemplate, enumerate_extended_templates, q_poly
from ..core.assembly import node_polynomial, leading_terms, R_poly, severi_prefactor
from . import golden

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["CheckResult", "run_checks", "check_node_polynomial", "check_template_table",
           "check_extended_table", "check_r_coefficients", "check_leading_terms",
           "check_specialization", "check_enumeration_grid"]

logger = logging.getLogger(__name__)

### CLASSES ###

class CheckResult(NamedTuple):
    status: Literal["PASS", "FAIL", "NOTE"]
    name: str
    detail: str = ""

    def __str__(self):
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")

def _verdict(ok: bool, name: str, detail: str = "") -> CheckResult:
    return CheckResult("PASS" if ok else "FAIL", name, detail)

def _exponents(monomial: str) -> dict:
    # "D*S**2" -> {"D": 1, "S": 2}
    exps = {}
    for factor in monomial.split("*"):
        if factor.isdigit():
            exps[last] = int(factor)
        elif factor:
            last = factor
            exps[last] = 1
    return exps

### CHECKS ###

def check_node_polynomial(poly: MultiPoly, delta: int) -> list:
    results = []
    results.append(_verdict(poly.total_degree == 3 * delta, "total degree",
                            f"{poly.total_degree}, expected {3 * delta}"))
    leading = poly.coeff(D=2 * delta, S=delta)
    expected = Fraction(3 ** delta, math.factorial(delta))
    results.append(_verdict(leading == expected, "leading coefficient", f"{leading}, expected {expected}"))
    extra = [name for name in poly.variables if name[0] in "ab" and int(name[1:]) > delta]
    results.append(_verdict(not extra, "variable indices", f"unexpected {extra}" if extra else f"all <= {delta}"))
    table = golden.load_golden()["node_polynomials"]
    if str(delta) in table:
        reference = golden.golden_node_polynomial(delta)
        results.append(_verdict(poly == reference, "reference polynomial",
                                f"{len(poly)} terms, reference has {len(reference)}"))
        for monomial, printed in golden.golden_printed_terms(delta).items():
            computed = poly.coeff(**_exponents(monomial))
            results.append(CheckResult("NOTE", f"coefficient of {monomial}", f"published as {printed}, computed {computed}"))
    else:
        count = golden.golden_term_count(delta)
        if count is not None:
            results.append(CheckResult("NOTE", "reference term count", f"{len(poly)} terms, published {count}"))
    return results

def check_template_table(delta: int) -> list:
    rows = golden.golden_templates(delta)
    if not rows:
        return []
    results = []
    found = set(enumerate_templates(delta))
    expected = {Template(row["edges"]) for row in rows}
    results.append(_verdict(found == expected, f"templates of cogenus {delta}",
                            f"{len(found)} found, {len(expected)} in the table"))
    for row in rows:
        template = Template(row["edges"])
        computed = {"l": template.length, "multiplicity": template.multiplicity, "kappa": list(template.kappa),
                    "k_min": template.k_min, "s": template.s}
        wrong = [key for key, value in computed.items() if row[key] != value]
        poly_ok = template_poly(template) == MultiPoly(row["P"])
        results.append(_verdict(not wrong and poly_ok, f"template {row['edges']}",
                                f"mismatched {wrong + ([] if poly_ok else ['P'])}" if wrong or not poly_ok else ""))
        for key, printed in row.get("printed", {}).items():
            results.append(CheckResult("NOTE", f"template {row['edges']}", f"the table prints {key}={printed}, computed {computed[key]}"))
    return results

def check_extended_table(delta: int) -> list:
    rows = golden.golden_extended_templates(delta)
    if not rows:
        return []
    results = []
    found = set(enumerate_extended_templates(delta))
    expected = {ExtendedTemplate.from_json(row) for row in rows}
    results.append(_verdict(found == expected, f"extended templates of cogenus {delta}",
                            f"{len(found)} found, {len(expected)} in the table"))
    for row in rows:
        template = ExtendedTemplate.from_json(row)
        computed = {"l": template.length, "d_min": template.d_min, "s": template.s}
        wrong = [key for key in ("d_min", "s") if row[key] != computed[key]]
        q_ok = q_poly(template) == MultiPoly(row["q"])
        label = f"extended template {template.to_json()}"
        results.append(_verdict(not wrong and q_ok, label,
                                f"mismatched {wrong + ([] if q_ok else ['q'])}" if wrong or not q_ok else ""))
        for key, printed in row.get("printed", {}).items():
            results.append(CheckResult("NOTE", label, f"the table prints {key}={printed}, computed {computed[key]}"))
    return results

def check_r_coefficients(delta: int) -> list:
    if delta < 1:
        return []
    poly = R_poly(delta)
    closed = golden.r_display_coefficients(delta)
    # The closed form is exact for the top four powers
    powers = [p for p in sorted(closed, reverse=True)][:4]
    wrong = [p for p in powers if poly.coeff(D=p) != closed[p]]
    return [_verdict(not wrong, "first-factor coefficients",
                     f"mismatched powers of d: {wrong}" if wrong else f"d^{powers[0]} .. d^{powers[-1]}")]

def check_leading_terms(poly: MultiPoly, delta: int, jobs: int = None) -> list:
    if delta < 1:
        return []
    leading = leading_terms(delta, 2, jobs=jobs)
    return [_verdict(leading == golden.leading_display(delta), "leading terms against the closed form"),
            _verdict(leading == poly.truncate(3 * delta - 2), "leading terms against the full polynomial")]

def check_specialization(poly: MultiPoly, delta: int) -> list:
    # alpha = 0 and beta = (d): N_delta(0; d) vanishes at d = 0 .. delta-1
    x = MultiPoly.var("x")
    zero = {name: 0 for name in poly.variables if name[0] in "ab" and name != "b1"}
    special = poly.subs(zero).compose("D", x).compose("S", x).compose("b1", x)
    roots = [d for d in range(delta) if special.evaluate({"x": d}) != 0]
    results = [_verdict(not roots, "non-relative divisibility", f"non-zero at d = {roots}" if roots else "")]
    if delta == 1:
        wrong = [d for d in range(1, 8) if special.evaluate({"x": d}) != d * golden.one_nodal_count(d)]
        results.append(_verdict(not wrong, "one-nodal specialization", f"wrong at d = {wrong}" if wrong else ""))
    return results

def check_enumeration_grid(poly: MultiPoly, delta: int, max_degree: int, jobs: int = None) -> list:
    cases, wrong = 0, []
    for d in range(1, max_degree + 1):
        for alpha, beta in tangency_pairs(d):
            if beta.norm < delta:
                continue
            cases += 1
            values = {"D": d, "S": beta.norm}
            for name in poly.variables:
                if name[0] in "ab":
                    values[name] = (alpha if name[0] == "a" else beta)[int(name[1:])]
            value = severi_prefactor(delta, beta) * poly.evaluate(values)
            enumerated = severi_degree_enum(delta, alpha, beta, jobs=jobs)
            if value != enumerated:
                wrong.append(f"alpha=({alpha}) beta=({beta}): {value} != {enumerated}")
    logger.info("compared %s tangency profiles for cogenus %s", cases, delta)
    return [_verdict(not wrong, "enumeration against polynomial",
                     f"{cases} cases" if not wrong else f"{len(wrong)} of {cases} differ, first {wrong[0]}")]

def run_checks(delta: int, max_degree: int, jobs: int = None, cache=None) -> list:
    poly = node_polynomial(delta, jobs=jobs, cache=cache).poly
    results = check_node_polynomial(poly, delta)
    results += check_template_table(delta)
    results += check_extended_table(delta)
    results += check_r_coefficients(delta)
    results += check_leading_terms(poly, delta, jobs=jobs)
    results += check_specialization(poly, delta)
    results += check_enumeration_grid(poly, delta, max_degree, jobs=jobs)
    return results
