############################################################
# posets.py contains the marking poset: a chain of backbone
# vertices plus classes of interchangeable elements, each
# confined to a range of gaps of the chain, whose linear
# extensions are counted up to permutations within classes
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
import functools
import itertools
# Graph packages
import networkx
# The types we use in this script
from typing import NamedTuple, Iterator, Hashable
# The information contained in our helper scripts (validation)
from ..validation import posets as pst

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["ElementClass", "MarkingPoset"]

### CLASSES ###

class ElementClass(NamedTuple):
    # `count` interchangeable elements, each lying in one of the gaps first..last
    label: Hashable
    count: int
    first: int
    last: int

class MarkingPoset:
    """
    A backbone chain 0 < 1 < ... < n-1 together with floating elements.

    Gap g (1 <= g <= n) is the slot above backbone vertex g-1 and below backbone
    vertex g; gap n is open above. Every floating element is comparable to the
    backbone only, so a linear extension is a choice of gap per element followed
    by an ordering inside each gap.
    """

    ## INITIALIZATION ##
    def __init__(self, backbone: int, classes: list):
        validated = pst.MarkingPosetModel(backbone=backbone,
                                          classes=[dict(c._asdict()) if isinstance(c, ElementClass) else c for c in classes])
        self._backbone = validated.backbone
        self._classes = tuple(ElementClass(c.label, c.count, c.first, c.last)
                              for c in validated.classes if c.count > 0)

    @classmethod
    def _trusted(cls, backbone: int, classes: list):
        # Internal callers build their classes from already validated diagrams and templates
        poset = cls.__new__(cls)
        poset._backbone = backbone
        poset._classes = tuple(c for c in classes if c.count > 0)
        return poset

    ## INTERNAL PROPERTIES ##
    @property
    def backbone(self) -> int:
        return self._backbone

    @property
    def classes(self) -> tuple:
        return self._classes

    @property
    def gaps(self) -> range:
        return range(1, self._backbone + 1)

    @property
    def size(self) -> int:
        return self._backbone + sum(c.count for c in self._classes)

    def __repr__(self):
        return f"MarkingPoset(backbone={self._backbone}, classes={list(self._classes)})"

    ## COUNTING ##
    def count_extensions(self) -> int:
        """Number of linear extensions, counted up to permutations within each class."""
        classes = self._classes
        last_gap = self._backbone

        @functools.lru_cache(maxsize=None)
        def _from(gap: int, remaining: tuple) -> int:
            if gap > last_gap:
                return 1 if not any(remaining) else 0
            options = []
            for c, left in zip(classes, remaining):
                if left == 0 or c.first > gap:
                    options.append((0,))
                elif c.last == gap:
                    options.append((left,))
                else:
                    options.append(range(left + 1))
            total = 0
            for chosen in itertools.product(*options):
                weight = math.factorial(sum(chosen)) // math.prod(math.factorial(x) for x in chosen)
                total += weight * _from(gap + 1, tuple(r - x for r, x in zip(remaining, chosen)))
            return total

        return _from(1, tuple(c.count for c in classes))

    def placements(self) -> Iterator[dict]:
        """
        Yields every distribution of class elements into gaps.

        Each placement is a dict gap -> {label: count}, listing only non-empty entries.
        """
        classes = self._classes

        def _distribute(index: int):
            if index == len(classes):
                yield {}
                return
            c = classes[index]
            for rest in _distribute(index + 1):
                for split in _compositions(c.count, c.last - c.first + 1):
                    placement = {gap: dict(entries) for gap, entries in rest.items()}
                    for offset, amount in enumerate(split):
                        if amount:
                            placement.setdefault(c.first + offset, {})[c.label] = amount
                    yield placement

        yield from _distribute(0)

    ## GRAPH VIEW ##
    def to_graph(self) -> networkx.DiGraph:
        """The Hasse diagram, with one node per element."""
        graph = networkx.DiGraph()
        for v in range(self._backbone):
            graph.add_node(("backbone", v))
            if v:
                graph.add_edge(("backbone", v - 1), ("backbone", v))
        for c in self._classes:
            for copy in range(c.count):
                node = (c.label, copy)
                graph.add_node(node)
                graph.add_edge(("backbone", c.first - 1), node)
                if c.last < self._backbone:
                    graph.add_edge(node, ("backbone", c.last))
        return graph

    def count_extensions_exhaustive(self) -> int:
        """Brute-force count over all topological sorts, for small posets only."""
        raw = sum(1 for _ in networkx.all_topological_sorts(self.to_graph()))
        return raw // math.prod(math.factorial(c.count) for c in self._classes)

    def representative(self) -> list:
        """One linear extension, elements placed as early as allowed."""
        return list(networkx.lexicographical_topological_sort(self.to_graph(), key=str))

### HELPING FUNCTIONS ###

def _compositions(total: int, parts: int):
    # Weak compositions of total into the given number of parts
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail
