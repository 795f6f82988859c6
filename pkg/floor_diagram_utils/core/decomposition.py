############################################################
# decomposition.py contains the two directions of the split
# of a floor diagram with a compatible pair into positioned
# templates and one extended template
############################################################

### IMPORTING PACKAGES ###

# The information contained in our helper scripts (validation)
from ..errors import PlacementError, BelowMinimumDegreeError, InsufficientTangencyError
from ..validation.shared import _uncovered
from .sequences import TangencySequence, SupportMatrix
from .floor_diagrams import FloorDiagram, CompatiblePair
from .templates import Template
from .extended_templates import ExtendedTemplate, short_counts

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["decompose", "recompose"]

### FUNCTIONS ###

def decompose(diagram: FloorDiagram, pair: CompatiblePair) -> tuple:
    """
    Splits (diagram, pair) into [(template, k), ...] and an extended template.

    Row i of A and B records the tangencies at vertex d - i. Short edges are
    dropped, the rest is cut at every vertex nothing passes over, and each piece
    that ends early enough becomes a template at its left-most vertex k. Whatever
    remains is shifted to start at 0 and becomes Lambda.
    """
    pair.check(diagram)
    d = diagram.d
    A = SupportMatrix._trusted({(i, j): v for i in range(1, d) for j, v in pair.alpha(d - i).items()})
    B = SupportMatrix._trusted({(i, j): v for i in range(1, d) for j, v in pair.beta(d - i).items()})
    last_free = d - max(A.length, B.length)

    edges = [(i, j, w) for i, j, w in diagram.edges if not (j == i + 1 and w == 1)]
    cuts = _uncovered(edges, d)
    pieces = []
    for left, right in zip(cuts, cuts[1:]):
        inside = [(i, j, w) for i, j, w in edges if left <= i and j <= right]
        if inside:
            pieces.append((left, right, inside))

    templates = []
    remaining = []
    for left, right, inside in pieces:
        if not remaining and right <= last_free:
            templates.append((Template._trusted([(i - left, j - left, w) for i, j, w in inside]), left))
        else:
            remaining.append((left, inside))
    start = min([last_free] + [left for left, _ in remaining])
    lam = [(i - start, j - start, w) for _, inside in remaining for i, j, w in inside]
    return templates, ExtendedTemplate._trusted(lam, d - start, A, B)

def recompose(parts: tuple, alpha, beta) -> tuple:
    """
    Rebuilds (diagram, pair) from ([(template, k), ...], extended template), alpha and beta.

    Raises PlacementError for badly placed templates, InsufficientTangencyError when
    the matrices ask for more tangencies than alpha or beta provide, and
    BelowMinimumDegreeError when some gap would need a negative number of short edges.
    """
    templates, extended = parts
    alpha, beta = TangencySequence(alpha), TangencySequence(beta)
    d = alpha.weighted + beta.weighted
    l = extended.length
    start = d - l
    if start < 1:
        raise BelowMinimumDegreeError(f"the extended template needs {l + 1} vertices, but the degree is {d}")

    previous_end = None
    for template, k in templates:
        if k < template.k_min:
            raise PlacementError(f"{template} sits at k={k}, below its k_min={template.k_min}")
        if previous_end is not None and k < previous_end:
            raise PlacementError(f"{template} at k={k} overlaps the previous template, which ends at {previous_end}")
        previous_end = k + template.length
    if previous_end is not None and previous_end > start:
        raise PlacementError(f"the last template ends at {previous_end}, beyond d - l(Lambda) = {start}")

    try:
        alpha_last = alpha - extended.A.column_sums()
        beta_last = beta - extended.B.column_sums()
    except InsufficientTangencyError as error:
        raise InsufficientTangencyError(f"the rows of A and B need more than alpha = {alpha}, beta = {beta}") from error

    shorts = short_counts(extended, d)
    if any(count < 0 for count in shorts):
        raise BelowMinimumDegreeError(f"degree {d} is below d_min = {extended.d_min} for the extended template")

    edges = []
    # Gaps (v, v+1) default to v short edges, the full crossing weight
    gap_shorts = {v: v for v in range(1, d)}
    for template, k in templates:
        edges += [(i + k, j + k, w) for i, j, w in template.edges]
        for i, kappa in enumerate(template.kappa, start=1):
            gap_shorts[k + i - 1] = k + i - 1 - kappa
    edges += [(i + start, j + start, w) for i, j, w in extended.lam]
    for i, count in enumerate(shorts, start=1):
        gap_shorts[start + i - 1] = count
    for v, count in gap_shorts.items():
        edges += [(v, v + 1, 1)] * count

    alpha_parts = [extended.A.row(d - v) if v < d else alpha_last for v in range(1, d + 1)]
    beta_parts = [extended.B.row(d - v) if v < d else beta_last for v in range(1, d + 1)]
    diagram = FloorDiagram(d, edges)
    pair = CompatiblePair._trusted(alpha_parts, beta_parts)
    pair.check(diagram)
    return diagram, pair
