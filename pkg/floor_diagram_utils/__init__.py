# This handles importing of all the functions and classes
from .core.sequences import TangencySequence, SupportMatrix
from .core.polynomials import MultiPoly
from .core.floor_diagrams import FloorDiagram, CompatiblePair, enumerate_floor_diagrams, severi_degree_enum
from .core.templates import Template, enumerate_templates, template_poly
from .core.extended_templates import ExtendedTemplate, enumerate_extended_templates, q_poly, Q_count
from .core.decomposition import decompose, recompose
from .core.assembly import NodePolynomial, node_polynomial, leading_terms, evaluate_relative_severi
from .utils.cache import DiskCache

# This defines what wildcard imports should import
__all__ = ["TangencySequence", "SupportMatrix", "MultiPoly",
           "FloorDiagram", "CompatiblePair", "enumerate_floor_diagrams", "severi_degree_enum",
           "Template", "enumerate_templates", "template_poly",
           "ExtendedTemplate", "enumerate_extended_templates", "q_poly", "Q_count",
           "decompose", "recompose",
           "NodePolynomial", "node_polynomial", "leading_terms", "evaluate_relative_severi",
           "DiskCache", "set_jobs"]

from . import config

def set_jobs(jobs: int):
    # Worker processes used whenever a function is called without jobs=
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise ValueError(f"Invalid value supplied ({jobs!r}), the number of jobs must be a positive integer")

    config.DEFAULT_JOBS = jobs
