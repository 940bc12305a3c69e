"""FastAPI wrapper: one POST endpoint per report, GET /version.

Domain errors map to 400 (bad input) except internal cross-check failures,
which map to 500. Verdict content never affects the status code.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import EinfillError, VerificationError
from . import handlers
from .schemas import (
    CheckReport,
    CheckRequest,
    CoverSearchReport,
    CoverSearchRequest,
    FamilyReport,
    FamilyRequest,
    FillReport,
    FillRequest,
    PointsReport,
    PointsRequest,
)

app = FastAPI(
    title="einfill",
    version=__version__,
    description=(
        "Exact-arithmetic surgery calculus for complex-hyperbolic surface "
        "families: build configurations, run covers and blow-ups, open and "
        "fill cusps, and evaluate Einstein obstructions."
    ),
)


@app.exception_handler(EinfillError)
async def _domain_error(request: Request, exc: EinfillError) -> JSONResponse:
    status = 500 if isinstance(exc, VerificationError) else 400
    return JSONResponse(
        status_code=status,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/version")
def version() -> dict:
    return handlers.version_info()


@app.post("/family", response_model=FamilyReport)
def family(req: FamilyRequest) -> FamilyReport:
    return handlers.family_report(req)


@app.post("/fill", response_model=FillReport)
def fill(req: FillRequest) -> FillReport:
    return handlers.fill_report(req)


@app.post("/check", response_model=CheckReport)
def check(req: CheckRequest) -> CheckReport:
    return handlers.check_report(req)


@app.post("/cover-search", response_model=CoverSearchReport)
def cover_search(req: CoverSearchRequest) -> CoverSearchReport:
    return handlers.cover_search_report(req)


@app.post("/points", response_model=PointsReport)
def points(req: PointsRequest) -> PointsReport:
    return handlers.points_report(req)
