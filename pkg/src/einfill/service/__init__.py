"""HTTP service layer: pydantic schemas, report handlers, FastAPI app.

The handlers are plain functions from request models to report models; the
CLI calls them in process and the FastAPI app exposes them over HTTP, so both
front ends produce identical reports.
"""

from .schemas import (
    SCHEMA_VERSION,
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

__all__ = [
    "SCHEMA_VERSION",
    "CheckReport",
    "CheckRequest",
    "CoverSearchReport",
    "CoverSearchRequest",
    "FamilyReport",
    "FamilyRequest",
    "FillReport",
    "FillRequest",
    "PointsReport",
    "PointsRequest",
]
