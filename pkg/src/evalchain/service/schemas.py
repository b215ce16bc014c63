"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class DatasetRequest(BaseModel):
    """A dataset submitted as CSV text in the name,S,P,C[,HCA] format."""

    csv: str
    basis: Literal["citations", "hca"] = "citations"


class CompareRequest(DatasetRequest):
    unit_a: str
    unit_b: str


class RankRequest(DatasetRequest):
    key: str = "X"


class PCARequest(DatasetRequest):
    columns: list[str] | None = None
    retain: int | Literal["kaiser"] = Field(default=2)


class UnitIndicators(BaseModel):
    name: str
    values: dict[str, float]


class IndicatorsResponse(BaseModel):
    basis: str
    units: list[UnitIndicators]


class ComparisonRowModel(BaseModel):
    indicator: str
    value_a: float
    value_b: float
    advantage_pct: float | None


class CompareResponse(BaseModel):
    basis: str
    unit_a: str
    unit_b: str
    rows: list[ComparisonRowModel]


class RankEntry(BaseModel):
    name: str
    value: float


class RankResponse(BaseModel):
    basis: str
    key: str
    ranking: list[RankEntry]


class PCAResponse(BaseModel):
    basis: str
    columns: list[str]
    retained: int
    eigenvalues: list[float]
    explained_variance: list[float]
    loadings: list[list[float]]
    assignment: dict[str, int]


class ClassifyResponse(BaseModel):
    basis: str
    classes: dict[str, str]


class MapPoint(BaseModel):
    name: str
    pc1: float
    pc2: float


class MapResponse(BaseModel):
    basis: str
    points: list[MapPoint]


class HealthResponse(BaseModel):
    status: str
    version: str


class ErrorResponse(BaseModel):
    error: str
    detail: str
