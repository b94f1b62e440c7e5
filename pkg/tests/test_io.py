"""CSV ingestion, dataset invariants, and simulated-file round trips."""

import numpy as np
import pytest

from evtkit import Dataset, Sample, load_csv, simulate_to_csv
from evtkit.errors import DomainError, EmptyDatasetError, ParseError

from conftest import GEV_MM


class TestLoadCsv:
    def test_year_value_rows(self, tmp_path):
        f = tmp_path / "data.csv"
        f.write_text("1956,131.2\n1957,98.4\n")
        ds = load_csv(f)
        assert ds.years == (1956, 1957)
        assert ds.sample.n == 2
        assert np.array_equal(ds.sample.values, [131.2, 98.4])
        assert ds.label == "data"

    def test_single_column(self, tmp_path):
        f = tmp_path / "vals.csv"
        f.write_text("10.5\n11.25\n9\n")
        ds = load_csv(f)
        assert ds.years is None
        assert np.array_equal(ds.sample.values, [10.5, 11.25, 9.0])

    def test_header_row_skipped(self, tmp_path):
        f = tmp_path / "with_header.csv"
        f.write_text("year,rainfall_mm\n1970,120.0\n1971,88.5\n")
        ds = load_csv(f)
        assert ds.years == (1970, 1971)

    def test_blank_lines_ignored_but_counted(self, tmp_path):
        f = tmp_path / "gaps.csv"
        f.write_text("1.0\n\n2.0\n")
        ds = load_csv(f)
        assert ds.sample.n == 2

    def test_non_numeric_row_reports_row_number(self, tmp_path):
        f = tmp_path / "bad.csv"
        f.write_text("1.0\n2.0\nabc\n4.0\n")
        with pytest.raises(ParseError) as err:
            load_csv(f)
        assert err.value.row == 3

    def test_non_finite_rejected(self, tmp_path):
        f = tmp_path / "inf.csv"
        f.write_text("1.0\nnan\n")
        with pytest.raises(ParseError) as err:
            load_csv(f)
        assert err.value.row == 2

    def test_empty_file(self, tmp_path):
        f = tmp_path / "empty.csv"
        f.write_text("")
        with pytest.raises(EmptyDatasetError):
            load_csv(f)

    def test_header_only_file_is_empty(self, tmp_path):
        f = tmp_path / "header_only.csv"
        f.write_text("year,value\n")
        with pytest.raises(EmptyDatasetError):
            load_csv(f)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_csv(tmp_path / "nope.csv")

    def test_inconsistent_column_count(self, tmp_path):
        f = tmp_path / "mixed.csv"
        f.write_text("1956,131.2\n98.4\n")
        with pytest.raises(ParseError) as err:
            load_csv(f)
        assert err.value.row == 2

    def test_too_many_columns(self, tmp_path):
        f = tmp_path / "wide.csv"
        f.write_text("1,2,3\n")
        with pytest.raises(ParseError):
            load_csv(f)

    def test_forced_layout(self, tmp_path):
        f = tmp_path / "two.csv"
        f.write_text("1956,131.2\n")
        assert load_csv(f, columns="year_value").years == (1956,)
        with pytest.raises(ParseError):
            load_csv(f, columns="value")
        with pytest.raises(DomainError):
            load_csv(f, columns="wide")

    def test_bad_year(self, tmp_path):
        f = tmp_path / "year.csv"
        f.write_text("1956.5,131.2\n")
        with pytest.raises(ParseError) as err:
            load_csv(f)
        assert err.value.row == 1

    def test_custom_label(self, tmp_path):
        f = tmp_path / "x.csv"
        f.write_text("1.0\n2.0\n")
        assert load_csv(f, label="station-7").label == "station-7"


class TestDataset:
    def test_years_must_match_length(self):
        with pytest.raises(DomainError):
            Dataset("x", Sample(np.array([1.0, 2.0])), years=(1990,))

    def test_years_strictly_increasing(self):
        with pytest.raises(DomainError):
            Dataset("x", Sample(np.array([1.0, 2.0])), years=(1991, 1990))
        with pytest.raises(DomainError):
            Dataset("x", Sample(np.array([1.0, 2.0])), years=(1990, 1990))


class TestSimulate:
    def test_same_seed_byte_identical(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        simulate_to_csv(GEV_MM, 100, 42, a)
        simulate_to_csv(GEV_MM, 100, 42, b)
        assert a.read_bytes() == b.read_bytes()

    def test_round_trip_through_load(self, tmp_path):
        path = tmp_path / "sim.csv"
        simulate_to_csv(GEV_MM, 64, 5, path)
        ds = load_csv(path)
        assert ds.sample.n == 64
        assert np.array_equal(ds.sample.values, GEV_MM.sample(64, 5).values)

    def test_zero_size_rejected(self, tmp_path):
        with pytest.raises(DomainError):
            simulate_to_csv(GEV_MM, 0, 1, tmp_path / "never.csv")
        assert not (tmp_path / "never.csv").exists()
