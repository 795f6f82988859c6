from .sequences import TangencySequence, SupportMatrix, seq_stats, seq_multinomial, tangency_pairs
from .polynomials import MultiPoly, discrete_sum, interpolate, falling_product, rising_product, stirling_first
from .posets import ElementClass, MarkingPoset
from .floor_diagrams import FloorDiagram, CompatiblePair, enumerate_floor_diagrams, count_markings, severi_degree_enum
from .templates import Template, enumerate_templates, template_poly
from .extended_templates import ExtendedTemplate, enumerate_extended_templates, Q_count, q_poly
from .decomposition import decompose, recompose
from .assembly import NodePolynomial, SummandIndex, first_factor, R_poly, second_factor, node_polynomial, leading_terms, evaluate_relative_severi

__all__ = ["TangencySequence", "SupportMatrix", "seq_stats", "seq_multinomial", "tangency_pairs",
           "MultiPoly", "discrete_sum", "interpolate", "falling_product", "rising_product", "stirling_first",
           "ElementClass", "MarkingPoset",
           "FloorDiagram", "CompatiblePair", "enumerate_floor_diagrams", "count_markings", "severi_degree_enum",
           "Template", "enumerate_templates", "template_poly",
           "ExtendedTemplate", "enumerate_extended_templates", "Q_count", "q_poly",
           "decompose", "recompose",
           "NodePolynomial", "SummandIndex", "first_factor", "R_poly", "second_factor",
           "node_polynomial", "leading_terms", "evaluate_relative_severi"]
