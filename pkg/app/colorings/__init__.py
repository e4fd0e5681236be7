from .blowup import blow_up, part_sizes
from .builtins import FIG_K5_EDGES, builtin_base_coloring, is_builtin_name
from .codec import coloring_from_payload, coloring_to_payload, load_coloring, parse_coloring, save_coloring, serialize_coloring
from .coloring import EdgeColoring, make_generator, pair_arrays, pair_index_matrix, random_coloring

__all__ = [
    "EdgeColoring",
    "FIG_K5_EDGES",
    "blow_up",
    "builtin_base_coloring",
    "coloring_from_payload",
    "coloring_to_payload",
    "is_builtin_name",
    "load_coloring",
    "make_generator",
    "pair_arrays",
    "pair_index_matrix",
    "parse_coloring",
    "part_sizes",
    "random_coloring",
    "save_coloring",
    "serialize_coloring",
]
