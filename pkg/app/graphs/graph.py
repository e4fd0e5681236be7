from __future__ import annotations

import json
import logging
from typing import Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from errors import GraphSpecError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Graph(BaseModel):
    """A small labeled pattern graph on vertices 0..m-1."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Vertex count")
    edges: Tuple[Edge, ...] = Field(default=(), description="Unordered pairs with u < v, sorted")
    family: Optional[str] = Field(default=None, description="Built-in descriptor this graph was built from")

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, value: Any) -> Tuple[Edge, ...]:
        pairs = []
        for pair in value:
            u, v = (int(x) for x in pair)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pairs.append((min(u, v), max(u, v)))
        if len(set(pairs)) != len(pairs):
            raise ValueError("duplicate edge")
        return tuple(sorted(pairs))

    @model_validator(mode="after")
    def _check_endpoints(self) -> "Graph":
        for u, v in self.edges:
            if u < 0 or v >= self.m:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.m - 1}")
        return self

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def aut_count(self) -> int:
        from .automorphisms import automorphism_count

        return automorphism_count(self)

    def label(self) -> str:
        return self.family or f"graph(m={self.m}, e={self.e})"


def graph_to_json(graph: Graph) -> str:
    payload = {"m": graph.m, "edges": [[u, v] for u, v in graph.edges]}
    return json.dumps(payload)


def graph_from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphSpecError(f"malformed graph JSON: {err}") from err
    if not isinstance(data, dict) or "m" not in data or "edges" not in data:
        raise GraphSpecError('graph JSON must be an object with "m" and "edges"')
    try:
        graph = Graph(m=data["m"], edges=data["edges"])
    except ValidationError as err:
        raise GraphSpecError(f"invalid graph: {err.errors()[0]['msg']}") from err
    logger.debug("Loaded graph from JSON: m=%s e=%s", graph.m, graph.e)
    return graph
