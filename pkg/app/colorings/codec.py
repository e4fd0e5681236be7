from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

import numpy as np
from pydantic import ValidationError

from errors import ColoringFormatError
from schemas import ColoringPayload

from .builtins import builtin_base_coloring, is_builtin_name
from .coloring import EdgeColoring, pair_arrays, pair_index_matrix

logger = logging.getLogger(__name__)


def coloring_to_payload(coloring: EdgeColoring) -> ColoringPayload:
    iu, ju = pair_arrays(coloring.n)
    triples = list(zip(iu.tolist(), ju.tolist(), coloring.colors.tolist()))
    return ColoringPayload(n=coloring.n, r=coloring.r, colors=triples)


def serialize_coloring(coloring: EdgeColoring) -> bytes:
    return coloring_to_payload(coloring).model_dump_json().encode("utf-8")


def coloring_from_payload(payload: ColoringPayload) -> EdgeColoring:
    n, r = payload.n, payload.r
    index = pair_index_matrix(n)
    colors = np.full(n * (n - 1) // 2, -1, dtype=np.int64)
    for u, v, color in payload.colors:
        if not (0 <= u < v < n):
            raise ColoringFormatError(f"pair ({u}, {v}) is not u < v within 0..{n - 1}")
        if not (0 <= color < r):
            raise ColoringFormatError(f"color {color} of ({u}, {v}) is outside 0..{r - 1}")
        slot = index[u, v]
        if colors[slot] != -1:
            raise ColoringFormatError(f"pair ({u}, {v}) appears twice")
        colors[slot] = color
    missing = int(np.count_nonzero(colors == -1))
    if missing:
        raise ColoringFormatError(f"{missing} pairs of K_{n} have no color")
    return EdgeColoring(n=n, r=r, colors=colors)


def parse_coloring(data: Union[bytes, str]) -> EdgeColoring:
    try:
        payload = ColoringPayload.model_validate_json(data)
    except ValidationError as err:
        raise ColoringFormatError(f"malformed coloring JSON: {err.errors()[0]['msg']}") from err
    return coloring_from_payload(payload)


def load_coloring(ref: str) -> EdgeColoring:
    """Resolve a builtin coloring name or read a coloring file."""
    if is_builtin_name(ref):
        return builtin_base_coloring(ref)
    path = Path(ref)
    if not path.is_file():
        raise ColoringFormatError(f"{ref!r} is neither a builtin coloring nor a readable file")
    logger.info("Reading coloring file: %s", path)
    return parse_coloring(path.read_bytes())


def save_coloring(coloring: EdgeColoring, path: Union[str, Path]) -> None:
    Path(path).write_bytes(serialize_coloring(coloring))
    logger.info("Wrote coloring: n=%s r=%s path=%s", coloring.n, coloring.r, path)
