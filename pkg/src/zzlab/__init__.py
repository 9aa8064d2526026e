"""Rotation-map regular graphs, replacement and zig-zag products, parity blocks."""

from .core import (
    RotationGraph,
    adjacency_matrix,
    build_graph,
    connected_components,
    neighbors,
)

__all__ = [
    "RotationGraph",
    "adjacency_matrix",
    "build_graph",
    "connected_components",
    "neighbors",
]

__version__ = "0.1.0"
