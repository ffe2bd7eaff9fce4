"""Pydantic request/response models for the compute service."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class HeckeRequest(BaseModel):
    n: int = Field(ge=0, le=7)
    affine: bool = False
    lmax: int = Field(default=3, ge=0, le=8)
    cbound: int = Field(default=1, ge=0, le=4)


class TableResponse(BaseModel):
    n: Optional[int] = None
    ambient: Optional[str] = None
    dimension: Optional[int] = None
    basis: list
    products: list
    differentials: list
    objects: Optional[list] = None


class AffineRequest(BaseModel):
    n: int = Field(ge=0, le=5)


class AlgebraRequest(BaseModel):
    diagram: dict
    objects: list[str]
    mu: int = Field(default=4, ge=0, le=8)
    winding: int = Field(default=2, ge=0, le=4)
    lmax: Optional[int] = Field(default=None, ge=0, le=16)
    max_strands: int = Field(default=1, ge=1, le=3)


class GlueRequest(BaseModel):
    diagrams: list[dict] = Field(min_length=1, max_length=2)
    xi_out: str = "xi1"
    xi_in: str = "xi2"
    mu: int = Field(default=2, ge=0, le=3)
    winding: int = Field(default=2, ge=0, le=3)


class ThetaRequest(BaseModel):
    s: int = Field(ge=1, le=4)
    cbound: int = Field(default=2, ge=1, le=3)


class DualRequest(BaseModel):
    marks: list[str]
    n: int = Field(default=1, ge=0, le=3)
    oriented_middle: bool = False


class SelftestRequest(BaseModel):
    seed: int = 1
    only: Optional[list[str]] = None


class Report(BaseModel):
    check: str
    parameters: dict
    status: str
    counterexample: Optional[Any] = None
    criterion: Optional[str] = None

    class Config:
        extra = "allow"


class ReportList(BaseModel):
    status: str
    reports: list[Report]
