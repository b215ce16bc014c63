"""HTTP service exposing the evaluation chain.

Thin wrapper over the core package: each route parses the submitted CSV,
runs the corresponding analysis, and returns a typed response. Domain
errors map to HTTP 400 with the concrete error class as the code.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__
from ..compare import compare, rank
from ..errors import EvalChainError
from ..indicators import INDICATOR_LABELS, OutcomeBasis, indicator_vector
from ..ingest import Dataset, parse_csv, to_data_matrix
from ..pca import classify_indicators, map_points, run_pca
from ..render import scatter_svg
from . import schemas

app = FastAPI(
    title="evalchain",
    version=__version__,
    description="Indicator algebra, pairwise comparison and principal "
    "component maps for research-unit datasets.",
)


@app.exception_handler(EvalChainError)
async def _domain_error(_request: Request, exc: EvalChainError) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"error": type(exc).__name__, "detail": str(exc)}
    )


def _dataset(payload: schemas.DatasetRequest) -> tuple[Dataset, OutcomeBasis]:
    dataset = parse_csv(payload.csv, source_label="request")
    basis = OutcomeBasis(payload.basis)
    dataset.require_basis(basis)
    return dataset, basis


def _pca_result(payload: schemas.PCARequest):
    dataset = parse_csv(payload.csv, source_label="request")
    basis = OutcomeBasis(payload.basis)
    columns = tuple(payload.columns) if payload.columns else INDICATOR_LABELS
    matrix = to_data_matrix(dataset, basis, columns=columns)
    return run_pca(matrix, retain=payload.retain), basis


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post(
    "/v1/indicators",
    response_model=schemas.IndicatorsResponse,
    responses={400: {"model": schemas.ErrorResponse}},
)
def indicators(payload: schemas.DatasetRequest) -> schemas.IndicatorsResponse:
    dataset, basis = _dataset(payload)
    units = [
        schemas.UnitIndicators(
            name=r.name,
            values={k: float(v) for k, v in indicator_vector(r, basis).as_mapping().items()},
        )
        for r in dataset.records
    ]
    return schemas.IndicatorsResponse(basis=basis.value, units=units)


@app.post(
    "/v1/compare",
    response_model=schemas.CompareResponse,
    responses={400: {"model": schemas.ErrorResponse}},
)
def compare_units(payload: schemas.CompareRequest) -> schemas.CompareResponse:
    dataset, basis = _dataset(payload)
    report = compare(dataset.find(payload.unit_a), dataset.find(payload.unit_b), basis)
    rows = [
        schemas.ComparisonRowModel(
            indicator=r.indicator,
            value_a=r.value_a,
            value_b=r.value_b,
            advantage_pct=r.advantage_pct,
        )
        for r in report.rows
    ]
    return schemas.CompareResponse(
        basis=basis.value, unit_a=report.name_a, unit_b=report.name_b, rows=rows
    )


@app.post(
    "/v1/rank",
    response_model=schemas.RankResponse,
    responses={400: {"model": schemas.ErrorResponse}},
)
def rank_units(payload: schemas.RankRequest) -> schemas.RankResponse:
    dataset, basis = _dataset(payload)
    ranking = rank(list(dataset.records), basis, key=payload.key)
    return schemas.RankResponse(
        basis=basis.value,
        key=payload.key,
        ranking=[schemas.RankEntry(name=n, value=v) for n, v in ranking],
    )


@app.post(
    "/v1/pca",
    response_model=schemas.PCAResponse,
    responses={400: {"model": schemas.ErrorResponse}},
)
def pca(payload: schemas.PCARequest) -> schemas.PCAResponse:
    result, basis = _pca_result(payload)
    return schemas.PCAResponse(
        basis=basis.value,
        columns=list(result.column_labels),
        retained=result.retained,
        eigenvalues=[float(x) for x in result.eigenvalues],
        explained_variance=[float(x) for x in result.explained_variance],
        loadings=[[float(x) for x in row] for row in result.loadings],
        assignment={k: v + 1 for k, v in result.assignment.items()},
    )


@app.post(
    "/v1/classify",
    response_model=schemas.ClassifyResponse,
    responses={400: {"model": schemas.ErrorResponse}},
)
def classify(payload: schemas.PCARequest) -> schemas.ClassifyResponse:
    result, basis = _pca_result(payload)
    classes = classify_indicators(result)
    return schemas.ClassifyResponse(
        basis=basis.value, classes={k: v.value for k, v in classes.items()}
    )


@app.post(
    "/v1/map",
    response_model=schemas.MapResponse,
    responses={400: {"model": schemas.ErrorResponse}},
)
def unit_map(payload: schemas.PCARequest) -> schemas.MapResponse:
    result, basis = _pca_result(payload)
    points = [
        schemas.MapPoint(name=n, pc1=x, pc2=y) for n, x, y in map_points(result)
    ]
    return schemas.MapResponse(basis=basis.value, points=points)


@app.post("/v1/map.svg", responses={400: {"model": schemas.ErrorResponse}})
def unit_map_svg(payload: schemas.PCARequest) -> Response:
    result, _basis = _pca_result(payload)
    svg = scatter_svg(map_points(result))
    return Response(content=svg, media_type="image/svg+xml")
