from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Optional

from fastapi import FastAPI, HTTPException, Query

from bounds import to_decimal, to_pq
from colorings import coloring_from_payload, load_coloring
from errors import BudgetExceededError, ResourceError
from graphs import build_graph, copies_in_complete
from rainbow import count_rainbow_copies
from reports import (
    baseline_certificate,
    blowup_coef_certificate,
    complete_certificate,
    dense1_certificate,
    dense2_certificate,
    recolor_certificate,
)
from schemas import CertificateResponse, CountRequest, CountResponse, HealthResponse

app = FastAPI(title="Rainbow Multiplicity API", version="0.1.0")
logger = logging.getLogger(__name__)


def _certificate(route: str, build: Callable[[], CertificateResponse]) -> CertificateResponse:
    try:
        logger.info("%s called", route)
        cert = build()
        logger.info("%s success: holds=%s", route, cert.holds)
        return cert
    except ValueError as ve:
        logger.warning("%s validation error: %s", route, str(ve))
        raise HTTPException(status_code=400, detail=str(ve)) from ve
    except (BudgetExceededError, ResourceError) as re:
        logger.warning("%s over limit: %s", route, str(re))
        raise HTTPException(status_code=422, detail=str(re)) from re
    except Exception as err:  # noqa: BLE001
        logger.error("%s failed: %s", route, str(err))
        raise HTTPException(status_code=500, detail=str(err)) from err


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    logger.info("/health requested")
    return HealthResponse(status="ok")


@app.get("/baseline", response_model=CertificateResponse)
def baseline(
    edges: int = Query(..., ge=0, description="Edge count e of the pattern"),
    colors: int = Query(..., ge=1, description="Number of colors r"),
) -> CertificateResponse:
    return _certificate("/baseline", lambda: baseline_certificate(edges, colors))


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    try:
        logger.info("/count called: graph=%s builtin=%s", req.graph, isinstance(req.coloring, str))
        graph = build_graph(req.graph)
        if isinstance(req.coloring, str):
            coloring = load_coloring(req.coloring)
        else:
            coloring = coloring_from_payload(req.coloring)
        value = count_rainbow_copies(graph, coloring)
        fraction = Fraction(value, copies_in_complete(graph, coloring.n))
        logger.info("/count success: count=%s", value)
        return CountResponse(
            graph=req.graph,
            n=coloring.n,
            r=coloring.r,
            count=value,
            fraction_exact=to_pq(fraction),
            fraction_decimal=to_decimal(fraction),
        )
    except ValueError as ve:
        logger.warning("/count validation error: %s", str(ve))
        raise HTTPException(status_code=400, detail=str(ve)) from ve
    except Exception as err:  # noqa: BLE001
        logger.error("/count failed: %s", str(err))
        raise HTTPException(status_code=500, detail=str(err)) from err


@app.get("/bounds/complete", response_model=CertificateResponse)
def bounds_complete(a: int = Query(..., description="Order of the complete graph")) -> CertificateResponse:
    return _certificate("/bounds/complete", lambda: complete_certificate(a))


@app.get("/bounds/dense1", response_model=CertificateResponse)
def bounds_dense1(
    m: int = Query(...),
    e: int = Query(...),
    c: Optional[str] = Query(None, description="Density parameter; defaults to 2/sqrt(m-1)"),
) -> CertificateResponse:
    return _certificate("/bounds/dense1", lambda: dense1_certificate(m, e, c))


@app.get("/bounds/dense2", response_model=CertificateResponse)
def bounds_dense2(m: int = Query(...), e: int = Query(...)) -> CertificateResponse:
    return _certificate("/bounds/dense2", lambda: dense2_certificate(m, e))


@app.get("/bounds/recolor", response_model=CertificateResponse)
def bounds_recolor(rb: int = Query(...), r: int = Query(...), e: int = Query(...)) -> CertificateResponse:
    return _certificate("/bounds/recolor", lambda: recolor_certificate(rb, r, e))


@app.get("/bounds/blowup-coef", response_model=CertificateResponse)
def bounds_blowup_coef(a: int = Query(...), t: int = Query(...), m: int = Query(...)) -> CertificateResponse:
    return _certificate("/bounds/blowup-coef", lambda: blowup_coef_certificate(a, t, m))
