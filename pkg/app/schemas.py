from __future__ import annotations

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field


class ColoringPayload(BaseModel):
    n: int = Field(..., ge=2, description="Vertex count of the host K_n")
    r: int = Field(..., ge=1, description="Number of colors")
    colors: List[Tuple[int, int, int]] = Field(..., description="[u, v, color] per pair, u < v, sorted")


class SearchParams(BaseModel):
    seed: int = Field(default=1, description="Seed of the PCG64 generator")
    restarts: int = Field(default=4, ge=1, description="Independent restarts")
    iterations: int = Field(default=20_000, ge=0, description="Moves examined per restart")
    acceptance: Literal["greedy", "anneal"] = Field(default="anneal")
    temperature: float = Field(default=1.0, ge=0.0, description="Initial annealing temperature")
    cooling: float = Field(default=0.9995, gt=0.0, lt=1.0, description="Geometric cooling factor")

    @classmethod
    def from_settings(cls, **overrides) -> "SearchParams":
        from config import get_settings

        settings = get_settings()
        values = {
            "seed": settings.search_seed,
            "restarts": settings.search_restarts,
            "iterations": settings.search_iterations,
            "acceptance": settings.search_acceptance,
            "temperature": settings.search_temperature,
            "cooling": settings.search_cooling,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


class ReportRow(BaseModel):
    n: int
    r: int
    graph: str
    rb: int = Field(..., description="Exact rb value or a lower bound")
    exact: bool
    fraction_decimal: str
    fraction_exact: str
    baseline_exact: str
    verdicts: List[str] = Field(default_factory=list)


class CountRequest(BaseModel):
    graph: str = Field(..., min_length=1, description="Graph descriptor, e.g. K4-e")
    coloring: str | ColoringPayload = Field(..., description="Builtin coloring name or coloring payload")


class CountResponse(BaseModel):
    graph: str
    n: int
    r: int
    count: int
    fraction_exact: str
    fraction_decimal: str


class CertificateResponse(BaseModel):
    criterion: str
    summary: str = Field(..., description="One-line human verdict")
    holds: Optional[bool] = None
    applicable: Optional[bool] = None
    values: dict[str, str] = Field(default_factory=dict, description="Exact certificate values as strings")


class TableReport(BaseModel):
    graph: str
    r: int
    monotone: Optional[bool] = Field(default=None, description="None when a row is only a lower bound")
    rows: List[ReportRow]


class MonteCarloReport(BaseModel):
    graph: str
    n: int
    r: int
    seed: int
    samples: int
    mean: float
    stderr: float
    baseline_exact: str
    baseline_decimal: str


class HealthResponse(BaseModel):
    status: str
