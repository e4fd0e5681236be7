"""Built-in pattern families and the GraphSpec grammar.

Grammar::

    K<a>        complete graph on a vertices
    K4-e        K_4 minus the edge (2, 3)
    S<m>        star K_{1,m-1} on m vertices, center 0
    P<k>        path with k edges on vertices 0..k
    C<k>        cycle with k edges, k >= 3
    M<k>        matching of k disjoint edges (2i, 2i+1)
    stars:a,b,  disjoint stars laid out in the given order, centers first
"""

from __future__ import annotations

import logging
import math
import re
from collections import Counter
from itertools import combinations
from pathlib import Path
from typing import List, Optional, Tuple

from config import get_settings
from errors import DomainError, GraphSpecError, LimitError

from .graph import Edge, Graph, graph_from_json

logger = logging.getLogger(__name__)

_SIMPLE = re.compile(r"^([KSPCM])(\d+)$")
_STARS = re.compile(r"^stars:(\d+(?:,\d+)*)$")


def parse_graph_spec(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """Split a descriptor into its family letter and integer parameters."""
    text = spec.strip()
    if text == "K4-e":
        return "K4-e", ()
    match = _SIMPLE.match(text)
    if match:
        return match.group(1), (int(match.group(2)),)
    match = _STARS.match(text)
    if match:
        return "stars", tuple(int(part) for part in match.group(1).split(","))
    raise GraphSpecError(f"cannot parse graph spec {spec!r}")


def _order(kind: str, params: Tuple[int, ...]) -> int:
    if kind == "K4-e":
        return 4
    if kind == "stars":
        return sum(params)
    (k,) = params
    return {"K": k, "S": k, "P": k + 1, "C": k, "M": 2 * k}[kind]


def _check_domain(kind: str, params: Tuple[int, ...]) -> None:
    if kind == "stars":
        small = [part for part in params if part < 2]
        if small:
            raise DomainError(f"every star needs at least 2 vertices, got {small[0]}")
        return
    if kind == "K4-e":
        return
    (k,) = params
    if kind == "C" and k < 3:
        raise DomainError(f"cycle length must be at least 3, got {k}")
    if k < 1:
        raise DomainError(f"{kind}{k}: parameter must be positive")


def _edges(kind: str, params: Tuple[int, ...]) -> List[Edge]:
    if kind == "K4-e":
        return [pair for pair in combinations(range(4), 2) if pair != (2, 3)]
    if kind == "stars":
        edges: List[Edge] = []
        offset = 0
        for part in params:
            edges.extend((offset, offset + leaf) for leaf in range(1, part))
            offset += part
        return edges
    (k,) = params
    if kind == "K":
        return list(combinations(range(k), 2))
    if kind == "S":
        return [(0, leaf) for leaf in range(1, k)]
    if kind == "P":
        return [(i, i + 1) for i in range(k)]
    if kind == "C":
        return [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return [(2 * i, 2 * i + 1) for i in range(k)]


def build_graph(spec: str) -> Graph:
    kind, params = parse_graph_spec(spec)
    _check_domain(kind, params)
    m = _order(kind, params)
    limit = get_settings().max_order
    if m > limit:
        raise LimitError(f"{spec} has {m} vertices, limit is {limit}")
    graph = Graph(m=m, edges=_edges(kind, params), family=spec.strip())
    logger.debug("Built graph %s: m=%s e=%s", spec, graph.m, graph.e)
    return graph


def load_graph(ref: str) -> Graph:
    """Build a descriptor, or read a graph JSON file when ``ref`` ends in ``.json``."""
    if not ref.endswith(".json"):
        return build_graph(ref)
    path = Path(ref)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise GraphSpecError(f"cannot read graph file {ref!r}: {err.strerror}") from err
    graph = graph_from_json(text)
    limit = get_settings().max_order
    if graph.m > limit:
        raise LimitError(f"{ref} has {graph.m} vertices, limit is {limit}")
    return graph


def _star_automorphisms(order: int) -> int:
    # K_{1,1} has no distinguished center
    if order == 2:
        return 2
    return math.factorial(order - 1)


def closed_form_automorphisms(spec: str) -> Optional[int]:
    """|Aut| of a built-in family, or None when the descriptor is not built in."""
    try:
        kind, params = parse_graph_spec(spec)
    except GraphSpecError:
        return None
    if kind == "K4-e":
        return 4
    if kind == "stars":
        gamma = math.prod(math.factorial(mult) for mult in Counter(params).values())
        return gamma * math.prod(_star_automorphisms(part) for part in params)
    (k,) = params
    if kind == "K":
        return math.factorial(k)
    if kind == "S":
        return _star_automorphisms(k) if k > 1 else 1
    if kind == "P":
        return 2
    if kind == "C":
        return 2 * k
    return 2**k * math.factorial(k)
