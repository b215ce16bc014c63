import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rel_close
from evalchain import (
    INDICATOR_LABELS,
    InstitutionRecord,
    OutcomeBasis,
    compare,
    percentage_advantage,
    rank,
)
from evalchain.errors import ZeroBaseline
from golden import ADVANTAGES, CITATION_VALUES, HCA_VALUES

fte_values = st.floats(min_value=0.01, max_value=1e4, allow_nan=False)
pub_counts = st.integers(min_value=1, max_value=100_000)
cite_counts = st.floats(min_value=0.0, max_value=1e7, allow_nan=False)


def records(name: str = "U"):
    return st.builds(
        InstitutionRecord,
        name=st.just(name),
        fte=fte_values,
        pubs=pub_counts,
        cites=cite_counts,
    )


class TestPercentageAdvantage:
    def test_examples(self):
        assert percentage_advantage(100.0, 200.0) == 100.0
        assert percentage_advantage(10.0, 7.5) == -25.0
        assert percentage_advantage(1000.0, 1500.0) == 50.0
        assert percentage_advantage(10000.0, 11250.0) == 12.5
        assert percentage_advantage(4.0, 4.0) == 0.0

    def test_zero_baseline(self):
        with pytest.raises(ZeroBaseline):
            percentage_advantage(0.0, 5.0)

    @given(
        baseline=st.floats(min_value=1e-3, max_value=1e6),
        challenger=st.floats(min_value=0.0, max_value=1e6),
    )
    def test_sign_tracks_the_difference(self, baseline, challenger):
        adv = percentage_advantage(baseline, challenger)
        assert np.sign(adv) == np.sign(challenger - baseline)


class TestCompare:
    def test_citations_worked_example(self, unit_a, unit_b):
        report = compare(unit_a, unit_b, OutcomeBasis.CITATIONS)
        assert report.name_a == "A" and report.name_b == "B"
        assert [r.indicator for r in report.rows] == list(INDICATOR_LABELS)
        for row, (label, expect_a, expect_b), advantage in zip(
            report.rows, CITATION_VALUES, ADVANTAGES
        ):
            assert row.indicator == label
            assert rel_close(row.value_a, expect_a)
            assert rel_close(row.value_b, expect_b)
            assert rel_close(row.advantage_pct, advantage)

    def test_hca_worked_example(self, unit_a, unit_b):
        report = compare(unit_a, unit_b, OutcomeBasis.HCA)
        for row, (label, expect_a, expect_b), advantage in zip(
            report.rows, HCA_VALUES, ADVANTAGES
        ):
            assert row.indicator == label
            assert rel_close(row.value_a, expect_a)
            assert rel_close(row.value_b, expect_b)
            assert rel_close(row.advantage_pct, advantage)

    def test_advantage_column_is_basis_invariant(self, unit_a, unit_b):
        """The two bases give different values but the same advantages."""
        cites = compare(unit_a, unit_b, OutcomeBasis.CITATIONS)
        hca = compare(unit_a, unit_b, OutcomeBasis.HCA)
        for row_c, row_h in zip(cites.rows, hca.rows):
            assert rel_close(row_c.advantage_pct, row_h.advantage_pct)

    def test_zero_baseline_row_reports_no_advantage(self, unit_b):
        quiet = InstitutionRecord("Q", 100.0, 100, 0.0)
        report = compare(quiet, unit_b)
        by_label = {row.indicator: row for row in report.rows}
        for label in ("i", "outcome", "X", "outcome/S", "X/S"):
            assert by_label[label].advantage_pct is None
        assert by_label["S"].advantage_pct == 0.0
        assert by_label["P"].advantage_pct == 100.0

    @given(record=records("A"))
    @settings(max_examples=50)
    def test_self_comparison_is_flat(self, record):
        report = compare(record, record)
        for row in report.rows:
            assert row.advantage_pct == 0.0 or (
                row.advantage_pct is None and row.value_a == 0.0
            )


class TestRank:
    def test_rank_by_exergy(self, unit_a, unit_b):
        assert rank([unit_a, unit_b]) == [("B", 11250.0), ("A", 10000.0)]

    def test_rank_by_impact_reverses_the_verdict(self, unit_a, unit_b):
        assert rank([unit_a, unit_b], key="i") == [("A", 10.0), ("B", 7.5)]

    def test_singleton(self, unit_a):
        assert rank([unit_a]) == [("A", 10000.0)]

    def test_ties_break_on_name(self, unit_a):
        twin = InstitutionRecord("Z", 50.0, 100, 1000.0)
        other = InstitutionRecord("B", 200.0, 100, 1000.0)
        ranked = rank([twin, unit_a, other], key="X")
        assert [name for name, _ in ranked] == ["A", "B", "Z"]

    @given(
        data=st.lists(
            st.tuples(pub_counts, cite_counts), min_size=1, max_size=8, unique=True
        )
    )
    @settings(max_examples=50)
    def test_rank_by_exergy_matches_outcome_squared_over_output(self, data):
        units = [
            InstitutionRecord(f"u{k}", 10.0, pubs, cites)
            for k, (pubs, cites) in enumerate(data)
        ]
        ranked = rank(units, key="X")
        values = [value for _, value in ranked]
        assert values == sorted(values, reverse=True)
        expected = {u.name: u.cites**2 / u.pubs for u in units}
        for name, value in ranked:
            assert rel_close(value, expected[name], rel=1e-12)
