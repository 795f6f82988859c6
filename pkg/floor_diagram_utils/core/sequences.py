############################################################
# sequences.py contains the finite-support integer sequences
# (alpha, beta) and matrices (A, B) used throughout, along
# with their norms, factorials, weighted sums and multinomials
############################################################

### IMPORTING PACKAGES ###

# Default packages
import math
# The types we use in this script
from typing import Iterable
# The information contained in our helper scripts (validation)
from ..validation import sequences as sqv
from ..errors import InsufficientTangencyError

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["TangencySequence", "SupportMatrix", "seq_stats", "seq_multinomial",
           "weighted_sequences", "tangency_pairs"]

### CLASSES ###

class TangencySequence:
    """
    A finite-support sequence of non-negative integers indexed from 1.

    Only the non-zero entries are stored, so trailing zeros never affect equality:
    TangencySequence("4,1") == TangencySequence([4, 1, 0, 0]).
    """

    ## INITIALIZATION ##
    def __init__(self, entries=None):
        validated = sqv.TangencySequenceModel(entries=entries)
        self._items = tuple(sorted(validated.entries.items()))

    # Skips validation, for the enumeration loops that build many sequences at once
    @classmethod
    def _trusted(cls, mapping: dict):
        seq = cls.__new__(cls)
        seq._items = tuple(sorted((i, v) for i, v in mapping.items() if v))
        return seq

    ## INTERNAL PROPERTIES ##
    def __getitem__(self, i: int) -> int:
        for index, value in self._items:
            if index == i:
                return value
        return 0

    def items(self):
        return self._items

    @property
    def length(self) -> int:
        # Largest index holding a non-zero entry
        return self._items[-1][0] if self._items else 0

    @property
    def norm(self) -> int:
        return sum(v for _, v in self._items)

    @property
    def factorial(self) -> int:
        return math.prod(math.factorial(v) for _, v in self._items)

    @property
    def weighted(self) -> int:
        return sum(i * v for i, v in self._items)

    def as_list(self, length: int = None) -> list:
        length = self.length if length is None else length
        return [self[i] for i in range(1, length + 1)]

    ## ARITHMETIC ##
    def __add__(self, other: "TangencySequence") -> "TangencySequence":
        merged = dict(self._items)
        for i, v in other.items():
            merged[i] = merged.get(i, 0) + v
        return TangencySequence._trusted(merged)

    def __sub__(self, other: "TangencySequence") -> "TangencySequence":
        if not other <= self:
            raise InsufficientTangencyError(f"cannot remove {other} from {self}: some entry would become negative")
        merged = dict(self._items)
        for i, v in other.items():
            merged[i] -= v
        return TangencySequence._trusted(merged)

    # Component-wise comparison
    def __le__(self, other: "TangencySequence") -> bool:
        return all(v <= other[i] for i, v in self._items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TangencySequence):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __bool__(self):
        return bool(self._items)

    ## OUTPUT ##
    def __str__(self):
        return ",".join(str(v) for v in self.as_list())

    def __repr__(self):
        return f"TangencySequence({str(self)!r})"

    def to_json(self) -> list:
        return self.as_list()


class SupportMatrix:
    """
    A finite-support matrix of non-negative integers, rows and columns indexed from 1.

    Row i of A (resp. B) records the fixed (resp. unconstrained) tangencies at the
    vertex i steps before the last one.
    """

    ## INITIALIZATION ##
    def __init__(self, entries=None):
        validated = sqv.SupportMatrixModel(entries=entries)
        self._items = tuple(sorted(validated.entries.items()))

    @classmethod
    def from_rows(cls, rows: dict):
        # rows maps a row index to anything a TangencySequence accepts
        entries = {}
        for i, row in rows.items():
            for j, v in TangencySequence(row).items():
                entries[(i, j)] = v
        return cls(entries)

    @classmethod
    def _trusted(cls, mapping: dict):
        matrix = cls.__new__(cls)
        matrix._items = tuple(sorted((key, v) for key, v in mapping.items() if v))
        return matrix

    ## INTERNAL PROPERTIES ##
    def __getitem__(self, key: tuple) -> int:
        return dict(self._items).get(tuple(key), 0)

    def items(self):
        return self._items

    def row(self, i: int) -> TangencySequence:
        return TangencySequence._trusted({j: v for (r, j), v in self._items if r == i})

    def rows(self) -> dict:
        return {i: self.row(i) for i in sorted({r for (r, _), _ in self._items})}

    def column(self, j: int) -> TangencySequence:
        # The column vector a^T_j, indexed by row
        return TangencySequence._trusted({i: v for (i, c), v in self._items if c == j})

    def column_sums(self) -> TangencySequence:
        sums = {}
        for (_, j), v in self._items:
            sums[j] = sums.get(j, 0) + v
        return TangencySequence._trusted(sums)

    @property
    def length(self) -> int:
        # l(A): largest row index with a non-zero entry, 0 for the zero matrix
        return max((i for (i, _), _ in self._items), default=0)

    @property
    def width(self) -> int:
        return max((j for (_, j), _ in self._items), default=0)

    @property
    def cogenus(self) -> int:
        return sum(i * j * v for (i, j), v in self._items)

    @property
    def norm(self) -> int:
        return sum(v for _, v in self._items)

    def wls(self, i: int) -> int:
        """Weighted lower sum: column-weighted total of all rows i' >= i."""
        return sum(j * v for (r, j), v in self._items if r >= i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SupportMatrix):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __bool__(self):
        return bool(self._items)

    ## OUTPUT ##
    def __repr__(self):
        return f"SupportMatrix({self.to_json()})"

    def to_json(self) -> list:
        # Dense list of rows, row 1 first
        width = self.width
        return [self.row(i).as_list(width) for i in range(1, self.length + 1)]

### FUNCTIONS ###

def seq_stats(alpha: TangencySequence) -> tuple:
    """Returns (|alpha|, alpha!, sum of i * alpha_i)."""
    return alpha.norm, alpha.factorial, alpha.weighted

def seq_multinomial(s: TangencySequence, parts: Iterable[TangencySequence]) -> int:
    """
    Multinomial coefficient of sequences, s! / (t_1! t_2! ... (s - t_1 - t_2 - ...)!).

    Counts the ways to pick the labelled sub-multisets t_1, t_2, ... out of s.
    """
    parts = list(parts)
    total = TangencySequence._trusted({})
    for part in parts:
        total = total + part
    if not total <= s:
        raise InsufficientTangencyError(f"the parts sum to {total}, which exceeds {s} component-wise")
    rest = s - total
    denominator = math.prod(part.factorial for part in parts) * rest.factorial
    return s.factorial // denominator

def weighted_sequences(total: int):
    """Every sequence alpha with sum of i * alpha_i equal to total, one per partition of total."""
    def _parts(rest: int, largest: int):
        if rest == 0:
            yield {}
            return
        for head in range(min(rest, largest), 0, -1):
            for tail in _parts(rest - head, head):
                merged = dict(tail)
                merged[head] = merged.get(head, 0) + 1
                yield merged

    for entries in _parts(total, total):
        yield TangencySequence._trusted(entries)

def tangency_pairs(d: int):
    """Every (alpha, beta) with sum of i * (alpha_i + beta_i) equal to d."""
    for weight in range(d + 1):
        for alpha in weighted_sequences(weight):
            for beta in weighted_sequences(d - weight):
                yield alpha, beta
