"""Research-unit evaluation chain.

Indicator algebra over staff, output and outcome counts, pairwise
comparisons, and a from-scratch correlation PCA that maps units onto a
quantity axis and a quality/productivity axis.
"""

from .compare import ComparisonReport, ComparisonRow, compare, percentage_advantage, rank
from .errors import EvalChainError
from .indicators import (
    INDICATOR_LABELS,
    IndicatorVector,
    InstitutionRecord,
    OutcomeBasis,
    canonical_label,
    exergy,
    impact,
    indicator_vector,
    order_indicator,
    outcome_value,
)
from .ingest import Dataset, parse_csv, serialize_csv, to_data_matrix
from .pca import (
    DataMatrix,
    IndicatorClass,
    PCAResult,
    classify_indicators,
    correlation_matrix,
    eigendecompose_symmetric,
    map_points,
    run_pca,
    standardize,
)

__version__ = "1.0.0"

__all__ = [
    "ComparisonReport",
    "ComparisonRow",
    "DataMatrix",
    "Dataset",
    "EvalChainError",
    "INDICATOR_LABELS",
    "IndicatorClass",
    "IndicatorVector",
    "InstitutionRecord",
    "OutcomeBasis",
    "PCAResult",
    "canonical_label",
    "classify_indicators",
    "compare",
    "correlation_matrix",
    "eigendecompose_symmetric",
    "exergy",
    "impact",
    "indicator_vector",
    "map_points",
    "order_indicator",
    "outcome_value",
    "parse_csv",
    "percentage_advantage",
    "rank",
    "run_pca",
    "serialize_csv",
    "standardize",
    "to_data_matrix",
    "__version__",
]
