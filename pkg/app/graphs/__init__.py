from .automorphisms import automorphism_count, brute_force_automorphisms, copies_in_complete, embedding_patterns
from .families import build_graph, closed_form_automorphisms, load_graph, parse_graph_spec
from .graph import Graph, graph_from_json, graph_to_json

__all__ = [
    "Graph",
    "automorphism_count",
    "brute_force_automorphisms",
    "build_graph",
    "closed_form_automorphisms",
    "copies_in_complete",
    "embedding_patterns",
    "graph_from_json",
    "graph_to_json",
    "load_graph",
    "parse_graph_spec",
]
