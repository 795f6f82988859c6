############################################################
# floor_diagrams.py contains floor diagrams, their invariants,
# the (alpha, beta)-compatible pairs and markings, and the
# enumeration of relative Severi degrees by brute force
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
import logging
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
# Graph packages
import networkx
# The types we use in this script
from typing import NamedTuple, Iterator
# The information contained in our helper scripts (validation)
from .. import config
from ..errors import DomainError
from ..validation import floor_diagrams as fdv
from .sequences import TangencySequence
from .posets import ElementClass, MarkingPoset

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["FloorDiagram", "CompatiblePair", "DiagramInvariants",
           "diagram_invariants", "enumerate_floor_diagrams", "enumerate_compatible_pairs",
           "marking_poset_for_pair", "count_markings_for_pair", "count_markings", "severi_degree_enum"]

logger = logging.getLogger(__name__)

### CLASSES ###

class DiagramInvariants(NamedTuple):
    degree: int
    connected: bool
    genera: tuple
    cogenus: int
    multiplicity: int

class FloorDiagram:
    """
    A weighted directed multigraph on the vertices 1 < 2 < ... < d.

    Edges are (source, target, weight) triples with source < target, stored sorted,
    and every vertex has out-weight minus in-weight at most 1.
    """

    ## INITIALIZATION ##
    def __init__(self, d: int, edges: list = None):
        validated = fdv.FloorDiagramModel(d=d, edges=edges)
        self._d = validated.d
        self._edges = tuple(validated.edges)

    # For the enumeration, which only builds valid diagrams
    @classmethod
    def _trusted(cls, d: int, edges):
        diagram = cls.__new__(cls)
        diagram._d = d
        diagram._edges = tuple(sorted(edges))
        return diagram

    @classmethod
    def from_json(cls, data: dict) -> "FloorDiagram":
        return cls(d=data["d"], edges=data["edges"])

    ## INTERNAL PROPERTIES ##
    @property
    def d(self) -> int:
        return self._d

    @property
    def edges(self) -> tuple:
        return self._edges

    def edge_counts(self) -> Counter:
        return Counter(self._edges)

    def out_weight(self, v: int) -> int:
        return sum(w for i, _, w in self._edges if i == v)

    def in_weight(self, v: int) -> int:
        return sum(w for _, j, w in self._edges if j == v)

    def divergence(self, v: int) -> int:
        return self.out_weight(v) - self.in_weight(v)

    @property
    def cogenus(self) -> int:
        # Equal to the sum of component cogenera plus the pairwise degree products
        return math.comb(self._d, 2) - len(self._edges)

    @property
    def multiplicity(self) -> int:
        return math.prod(w * w for _, _, w in self._edges)

    def to_graph(self) -> networkx.MultiDiGraph:
        graph = networkx.MultiDiGraph()
        graph.add_nodes_from(range(1, self._d + 1))
        for i, j, w in self._edges:
            graph.add_edge(i, j, weight=w)
        return graph

    def __eq__(self, other) -> bool:
        if not isinstance(other, FloorDiagram):
            return NotImplemented
        return self._d == other._d and self._edges == other._edges

    def __hash__(self):
        return hash((self._d, self._edges))

    ## OUTPUT ##
    def to_json(self) -> dict:
        return {"d": self._d, "edges": [list(edge) for edge in self._edges]}

    def __repr__(self):
        return f"FloorDiagram(d={self._d}, edges={list(self._edges)})"


class CompatiblePair:
    """Per-vertex tangency sequences (alpha^v, beta^v) for v = 1..d."""

    ## INITIALIZATION ##
    def __init__(self, alpha_parts: list, beta_parts: list):
        validated = fdv.CompatiblePairModel(alpha_parts=list(alpha_parts), beta_parts=list(beta_parts))
        self._alpha = tuple(TangencySequence._trusted(p) for p in validated.alpha_parts)
        self._beta = tuple(TangencySequence._trusted(p) for p in validated.beta_parts)

    @classmethod
    def _trusted(cls, alpha_parts, beta_parts):
        pair = cls.__new__(cls)
        pair._alpha = tuple(alpha_parts)
        pair._beta = tuple(beta_parts)
        return pair

    ## INTERNAL PROPERTIES ##
    @property
    def d(self) -> int:
        return len(self._alpha)

    def alpha(self, v: int) -> TangencySequence:
        return self._alpha[v - 1]

    def beta(self, v: int) -> TangencySequence:
        return self._beta[v - 1]

    @property
    def alpha_total(self) -> TangencySequence:
        return sum(self._alpha, TangencySequence._trusted({}))

    @property
    def beta_total(self) -> TangencySequence:
        return sum(self._beta, TangencySequence._trusted({}))

    def check(self, diagram: FloorDiagram):
        """Raises DomainError unless every vertex receives exactly 1 - div(v) in weighted tangency."""
        if self.d != diagram.d:
            raise DomainError(f"the pair covers {self.d} vertices but the diagram has {diagram.d}")
        for v in range(1, diagram.d + 1):
            need = 1 - diagram.divergence(v)
            got = self.alpha(v).weighted + self.beta(v).weighted
            if got != need:
                raise DomainError(f"vertex {v} needs weighted tangency {need}, the pair assigns {got}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompatiblePair):
            return NotImplemented
        return self._alpha == other._alpha and self._beta == other._beta

    def __hash__(self):
        return hash((self._alpha, self._beta))

    ## OUTPUT ##
    def to_json(self) -> dict:
        return {"alpha": [p.to_json() for p in self._alpha], "beta": [p.to_json() for p in self._beta]}

    def __repr__(self):
        return f"CompatiblePair(alpha={[str(p) for p in self._alpha]}, beta={[str(p) for p in self._beta]})"

### FUNCTIONS ###

def diagram_invariants(diagram: FloorDiagram) -> DiagramInvariants:
    graph = networkx.Graph()
    graph.add_nodes_from(range(1, diagram.d + 1))
    graph.add_edges_from((i, j) for i, j, _ in diagram.edges)
    genera = []
    for component in sorted(networkx.connected_components(graph), key=min):
        edge_total = sum(1 for i, _, _ in diagram.edges if i in component)
        genera.append(edge_total - len(component) + 1)
    return DiagramInvariants(degree=diagram.d, connected=len(genera) == 1, genera=tuple(genera),
                             cogenus=diagram.cogenus, multiplicity=diagram.multiplicity)

def enumerate_floor_diagrams(d: int, delta: int) -> Iterator[FloorDiagram]:
    """
    Yields every floor diagram of degree d and cogenus delta exactly once.

    The diagram is built vertex by vertex: at each vertex we decide which open edges
    end there and which weights leave it, so the divergence condition is never violated.
    The order is deterministic.
    """
    fdv.EnumerationModel(d=d, delta=delta)
    target = math.comb(d, 2) - delta
    if target < 0:
        return
    # The out-weight of vertex u is at most u, which bounds the edges it can still open
    room = [sum(range(v + 1, d)) for v in range(d + 1)]

    def _visit(v: int, open_edges: tuple, opened: int, closed: tuple):
        keys = [key for key, _ in open_edges]
        if v == d:
            edges = closed + tuple((src, d, w) for (src, w), count in open_edges for _ in range(count))
            yield FloorDiagram._trusted(d, edges)
            return
        for choice in itertools.product(*[range(count + 1) for _, count in open_edges]):
            ending = tuple((src, v, w) for (src, w), c in zip(keys, choice) for _ in range(c))
            in_weight = sum(w for _, _, w in ending)
            still_open = [(key, count - c) for (key, count), c in zip(open_edges, choice) if count - c]
            for total in range(in_weight + 2):
                for weights in _partitions(total):
                    now_opened = opened + len(weights)
                    if now_opened > target or now_opened + room[v] < target:
                        continue
                    leaving = Counter((v, w) for w in weights)
                    yield from _visit(v + 1, tuple(still_open + sorted(leaving.items())), now_opened, closed + ending)

    yield from _visit(1, (), 0, ())

def enumerate_compatible_pairs(diagram: FloorDiagram, alpha, beta) -> Iterator[CompatiblePair]:
    """Yields every split of (alpha, beta) over the vertices compatible with the diagram."""
    alpha, beta = TangencySequence(alpha), TangencySequence(beta)
    if alpha.weighted + beta.weighted != diagram.d:
        raise DomainError(f"sum of i*(alpha_i + beta_i) is {alpha.weighted + beta.weighted}, but the diagram has degree {diagram.d}")
    needs = [1 - diagram.divergence(v) for v in range(1, diagram.d + 1)]

    def _assign(v: int, rest_alpha: TangencySequence, rest_beta: TangencySequence):
        if v > diagram.d:
            if not rest_alpha and not rest_beta:
                yield (), ()
            return
        for part_alpha, part_beta in _split(rest_alpha, rest_beta, needs[v - 1]):
            for tail_alpha, tail_beta in _assign(v + 1, rest_alpha - part_alpha, rest_beta - part_beta):
                yield (part_alpha,) + tail_alpha, (part_beta,) + tail_beta

    for alpha_parts, beta_parts in _assign(1, alpha, beta):
        yield CompatiblePair._trusted(alpha_parts, beta_parts)

def marking_poset_for_pair(diagram: FloorDiagram, pair: CompatiblePair) -> MarkingPoset:
    """
    The poset of the diagram's vertices, the midpoints of its edges and the beta-vertices.

    Diagram vertex v sits at backbone position v-1. A midpoint of (i, j, w) lies in one
    of the gaps i..j-1; a beta-vertex attached at v lies anywhere above v.
    """
    classes = []
    for (i, j, w), count in sorted(diagram.edge_counts().items()):
        classes.append(ElementClass(("edge", i, j, w), count, i, j - 1))
    for v in range(1, diagram.d + 1):
        for j, count in pair.beta(v).items():
            classes.append(ElementClass(("beta", v, j), count, v, diagram.d))
    return MarkingPoset._trusted(diagram.d, classes)

def _alpha_factor(pair: CompatiblePair) -> int:
    # alpha-vertices come last, sorted by weight; equal weights from different vertices still differ
    total = pair.alpha_total
    return total.factorial // math.prod(pair.alpha(v).factorial for v in range(1, pair.d + 1))

def count_markings_for_pair(diagram: FloorDiagram, pair: CompatiblePair) -> int:
    pair.check(diagram)
    return marking_poset_for_pair(diagram, pair).count_extensions() * _alpha_factor(pair)

def count_markings(diagram: FloorDiagram, alpha, beta) -> int:
    return sum(count_markings_for_pair(diagram, pair) for pair in enumerate_compatible_pairs(diagram, alpha, beta))

def _diagram_contribution(diagram: FloorDiagram, alpha: TangencySequence, beta: TangencySequence) -> int:
    return diagram.multiplicity * count_markings(diagram, alpha, beta)

def _batch_contribution(payload) -> int:
    d, edge_lists, alpha_items, beta_items = payload
    alpha, beta = TangencySequence._trusted(dict(alpha_items)), TangencySequence._trusted(dict(beta_items))
    return sum(_diagram_contribution(FloorDiagram._trusted(d, edges), alpha, beta) for edges in edge_lists)

def severi_degree_enum(delta: int, alpha, beta, jobs: int = None) -> int:
    """
    Relative Severi degree as the weighted count of marked floor diagrams.

    Valid for every delta >= 0, including |beta| < delta where no node polynomial applies.
    """
    alpha, beta = TangencySequence(alpha), TangencySequence(beta)
    d = alpha.weighted + beta.weighted
    if d < 1:
        raise DomainError("alpha and beta are both zero, so there is no curve degree to count")
    jobs = config.DEFAULT_JOBS if jobs is None else jobs
    tangency_weight = math.prod(i ** v for i, v in beta.items())
    diagrams = enumerate_floor_diagrams(d, delta)
    if jobs <= 1:
        total = sum(_diagram_contribution(diagram, alpha, beta) for diagram in diagrams)
    else:
        edge_lists = [diagram.edges for diagram in diagrams]
        size = max(1, math.ceil(len(edge_lists) / (4 * jobs)))
        batches = [(d, edge_lists[s:s + size], alpha.items(), beta.items()) for s in range(0, len(edge_lists), size)]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            total = sum(executor.map(_batch_contribution, batches))
    logger.debug("enumerated Severi degree for delta=%s, alpha=%s, beta=%s: %s", delta, alpha, beta, tangency_weight * total)
    return tangency_weight * total

### HELPING FUNCTIONS ###

def _partitions(total: int, largest: int = None):
    # Non-increasing tuples of positive integers summing to total
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for head in range(min(total, largest), 0, -1):
        for tail in _partitions(total - head, head):
            yield (head,) + tail

def _split(rest_alpha: TangencySequence, rest_beta: TangencySequence, need: int):
    # Every (a, b) with a <= rest_alpha, b <= rest_beta and weighted(a) + weighted(b) == need
    slots = [("alpha", j, v) for j, v in rest_alpha.items()] + [("beta", j, v) for j, v in rest_beta.items()]

    def _fill(index: int, left: int, chosen: tuple):
        if left == 0:
            yield chosen
            return
        if index == len(slots):
            return
        kind, j, available = slots[index]
        for count in range(min(available, left // j), -1, -1):
            yield from _fill(index + 1, left - count * j, chosen + (((kind, j, count),) if count else ()))

    for chosen in _fill(0, need, ()):
        part_alpha = TangencySequence._trusted({j: c for kind, j, c in chosen if kind == "alpha"})
        part_beta = TangencySequence._trusted({j: c for kind, j, c in chosen if kind == "beta"})
        yield part_alpha, part_beta
