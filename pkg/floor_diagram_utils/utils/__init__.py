from .cache import DiskCache
from .golden import load_golden, golden_node_polynomial

__all__ = ["DiskCache", "load_golden", "golden_node_polynomial"]
