"""Total vertex product irregularity strength: constructions, bounds,
verification and exact search."""

from .graphs import (Graph, VertexIndexer, cartesian_product, make_complete,
                     make_complete_multipartite, make_cycle, make_empty, make_grid,
                     make_path, make_torus, parse_family_spec)
from .labeling import (TotalLabeling, builtin_cycle_sequence, is_product_irregular,
                       product_degrees, strength)

__all__ = [
    "Graph", "VertexIndexer", "cartesian_product", "make_complete",
    "make_complete_multipartite", "make_cycle", "make_empty", "make_grid", "make_path",
    "make_torus", "parse_family_spec", "TotalLabeling", "builtin_cycle_sequence",
    "is_product_irregular", "product_degrees", "strength",
]
