############################################################
# validation/shared.py contains code re-used across objects
# for the purposes of the validation
############################################################

from fractions import Fraction
from typing import Annotated, Any
from pydantic import BeforeValidator

def _validate_sequence(v):
    # Accepts "4,1", [4,1], (4,1), {1:4, 2:1} or an object exposing .items()
    if v is None:
        return {}
    if hasattr(v, "items") and not isinstance(v, dict):
        v = dict(v.items())
    if isinstance(v, str):
        text = v.strip()
        if text == "":
            return {}
        try:
            v = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"Invalid sequence supplied ({v!r}), expected comma-separated integers such as '4,1'")
    if isinstance(v, (list, tuple)):
        v = {i: entry for i, entry in enumerate(v, start=1)}
    if not isinstance(v, dict):
        raise ValueError("must be a string, list, tuple or dict of non-negative integers")
    cleaned = {}
    for key, val in v.items():
        if int(key) < 1:
            raise ValueError(f"sequence indices start at 1, got {key}")
        if int(val) < 0:
            raise ValueError(f"sequence entries must be non-negative, got {val} at index {key}")
        if int(val) > 0:
            cleaned[int(key)] = int(val)
    return cleaned

SequenceInput = Annotated[dict[int, int], BeforeValidator(_validate_sequence)]

def _validate_matrix(v):
    # Accepts a dict {(i,j): value}, or a list of rows (row 1 first)
    if v is None:
        return {}
    if hasattr(v, "items") and not isinstance(v, dict):
        v = dict(v.items())
    if isinstance(v, (list, tuple)):
        v = {(i, j): entry
             for i, row in enumerate(v, start=1)
             for j, entry in _validate_sequence(row).items()}
    if not isinstance(v, dict):
        raise ValueError("must be a dict keyed by (row, column) or a list of rows")
    cleaned = {}
    for key, val in v.items():
        i, j = (int(part) for part in key)
        if i < 1 or j < 1:
            raise ValueError(f"matrix indices start at 1, got {key}")
        if int(val) < 0:
            raise ValueError(f"matrix entries must be non-negative, got {val} at {key}")
        if int(val) > 0:
            cleaned[(i, j)] = int(val)
    return cleaned

MatrixInput = Annotated[dict[tuple[int, int], int], BeforeValidator(_validate_matrix)]

def _validate_edges(v):
    if v is None:
        return []
    edges = []
    for edge in v:
        if len(edge) != 3:
            raise ValueError(f"edges are (source, target, weight) triples, got {edge}")
        i, j, w = (int(part) for part in edge)
        if not i < j:
            raise ValueError(f"edge {edge} must point from a smaller to a larger vertex")
        if w < 1:
            raise ValueError(f"edge {edge} must have a positive weight")
        edges.append((i, j, w))
    return sorted(edges)

EdgeList = Annotated[list[tuple[int, int, int]], BeforeValidator(_validate_edges)]

def _validate_fraction(v):
    if isinstance(v, Fraction):
        return v
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"Invalid rational number supplied ({v!r}), expected something like '9/2'")

RationalInput = Annotated[Any, BeforeValidator(_validate_fraction)]

def _kappa(edges, length: int) -> tuple:
    """Total weight of the edges spanning each gap j = 1..length."""
    return tuple(sum(w for i, k, w in edges if i < j <= k) for j in range(1, length + 1))

def _edge_cogenus(edges) -> int:
    return sum((j - i) * w - 1 for i, j, w in edges)

def _uncovered(edges, upto: int) -> list:
    """Vertices 1..upto that no edge passes strictly over."""
    return [v for v in range(1, upto + 1) if not any(i < v < j for i, j, _ in edges)]
