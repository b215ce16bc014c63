import math

import pytest

from evalchain import InstitutionRecord, parse_csv
from golden import TWO_UNIT_CSV, TWO_UNIT_HCA_CSV


def rel_close(actual: float, expected: float, rel: float = 1e-9) -> bool:
    return math.isclose(actual, expected, rel_tol=rel, abs_tol=1e-12)


@pytest.fixture
def unit_a() -> InstitutionRecord:
    return InstitutionRecord("A", 100.0, 100, 1000.0, hca=10.0)


@pytest.fixture
def unit_b() -> InstitutionRecord:
    return InstitutionRecord("B", 100.0, 200, 1500.0, hca=15.0)


@pytest.fixture
def two_unit_dataset():
    return parse_csv(TWO_UNIT_CSV)


@pytest.fixture
def two_unit_csv_path(tmp_path):
    path = tmp_path / "two_units.csv"
    path.write_text(TWO_UNIT_CSV, encoding="utf-8")
    return str(path)


@pytest.fixture
def two_unit_hca_csv_path(tmp_path):
    path = tmp_path / "two_units_hca.csv"
    path.write_text(TWO_UNIT_HCA_CSV, encoding="utf-8")
    return str(path)
