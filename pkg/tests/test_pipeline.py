"""End-to-end pipeline, report formats, and plot-data emission."""

import json

import numpy as np
import pytest

from evtkit import (
    Dataset,
    ReturnSpec,
    Sample,
    emit_plot_data,
    emit_report,
    report_from_dict,
    report_to_dict,
    run_pipeline,
)
from evtkit.errors import NumericalError, UnsupportedFormatError

from conftest import GEV_MM


@pytest.fixture(scope="module")
def synthetic_dataset():
    return Dataset("synthetic", GEV_MM.sample(2000, 7))


@pytest.fixture(scope="module")
def report(synthetic_dataset):
    return run_pipeline(synthetic_dataset)


class TestRunPipeline:
    def test_selects_gev_on_gev_data(self, report):
        assert report.best_family == "gev"

    def test_all_sections_present(self, report):
        assert report.descriptive.n == 2000
        assert tuple(f.family for f in report.fits) == ("gumbel", "frechet", "weibull", "gev")
        assert len(report.gofs) == 4
        assert len(report.return_levels.entries) == 5

    def test_gof_uses_default_gate(self, report):
        for gof in report.gofs:
            assert gof.alpha == 0.05
            assert gof.critical_value == 2.502
            assert gof.passed == (gof.statistic < 2.502)

    def test_custom_periods(self, synthetic_dataset):
        r = run_pipeline(synthetic_dataset, spec=ReturnSpec((2.0, 20.0)))
        assert r.return_levels.periods == (2.0, 20.0)

    def test_deterministic(self, synthetic_dataset, report):
        assert run_pipeline(synthetic_dataset) == report

    def test_partial_family_failure_recorded(self):
        rng = np.random.default_rng(14)
        values = np.concatenate([[-10.0], rng.gumbel(100.0, 20.0, 199)])
        ds = Dataset("with-negative", Sample(values))
        r = run_pipeline(ds)
        by_family = {f.family: f for f in r.fits}
        assert by_family["frechet"].error is not None
        assert by_family["weibull"].error is not None
        assert by_family["gumbel"].ok and by_family["gev"].ok
        gofs = dict(zip((f.family for f in r.fits), r.gofs))
        assert gofs["frechet"] is None and gofs["gumbel"] is not None
        assert r.best_family in ("gumbel", "gev")

    def test_degenerate_data_cannot_run(self):
        ds = Dataset("flat", Sample(np.full(10, 5.0)))
        with pytest.raises(NumericalError):
            run_pipeline(ds)


class TestEmitReport:
    def test_text_contains_gof_rows_and_verdicts(self, report):
        text = emit_report(report, "text")
        for label in ("Gumbel", "Frechet", "Weibull", "GEV"):
            assert label in text
        assert "PASS" in text or "FAIL" in text
        assert "Best family: GEV" in text
        assert "Return levels" in text

    def test_text_failed_family_shows_error(self):
        rng = np.random.default_rng(14)
        ds = Dataset("neg", Sample(np.concatenate([[-10.0], rng.gumbel(100.0, 20.0, 199)])))
        text = emit_report(run_pipeline(ds), "text")
        assert "ERROR" in text

    def test_json_round_trip_equality(self, report):
        blob = emit_report(report, "json")
        rebuilt = report_from_dict(json.loads(blob))
        assert rebuilt == report

    def test_json_top_level_keys(self, report):
        doc = json.loads(emit_report(report, "json"))
        assert set(doc) == {"descriptive", "fits", "gof", "best_family", "return_levels"}
        assert doc["best_family"] == "gev"
        assert len(doc["return_levels"]) == 5

    def test_dict_round_trip_without_json(self, report):
        assert report_from_dict(report_to_dict(report)) == report

    def test_round_trip_with_error_entries(self):
        rng = np.random.default_rng(14)
        ds = Dataset("neg", Sample(np.concatenate([[-10.0], rng.gumbel(100.0, 20.0, 199)])))
        partial = run_pipeline(ds)
        assert report_from_dict(json.loads(emit_report(partial, "json"))) == partial

    def test_unknown_format(self, report):
        with pytest.raises(UnsupportedFormatError):
            emit_report(report, "xml")


@pytest.fixture(scope="module")
def plot_files(report, synthetic_dataset, tmp_path_factory):
    out = tmp_path_factory.mktemp("plots")
    return emit_plot_data(report, synthetic_dataset, out), out


class TestEmitPlotData:
    def test_expected_files_written(self, plot_files):
        written, out = plot_files
        names = set(written)
        assert "timeseries" in names and "return_curve" in names
        for family in ("gumbel", "frechet", "weibull", "gev"):
            assert f"pdf_{family}" in names
            assert f"qq_{family}" in names
            assert f"prob_diff_{family}" in names
        for path in written.values():
            assert path.exists()

    def test_headers(self, plot_files):
        written, _ = plot_files
        assert written["timeseries"].read_text().splitlines()[0] == "year,value"
        assert written["pdf_gev"].read_text().splitlines()[0] == "x,pdf"
        assert written["qq_gev"].read_text().splitlines()[0] == "p,theoretical,observed"
        assert written["prob_diff_gev"].read_text().splitlines()[0] == "x,diff"
        assert written["return_curve"].read_text().splitlines()[0] == "period,level"

    def test_qq_files_have_n_rows(self, plot_files, synthetic_dataset):
        written, _ = plot_files
        for family in ("gumbel", "frechet", "weibull", "gev"):
            rows = written[f"qq_{family}"].read_text().splitlines()
            assert len(rows) == synthetic_dataset.sample.n + 1

    def test_pdf_grid_spans_padded_range(self, plot_files, synthetic_dataset):
        written, _ = plot_files
        rows = written["pdf_gev"].read_text().splitlines()[1:]
        assert len(rows) == 512
        xs = np.array([float(r.split(",")[0]) for r in rows])
        values = synthetic_dataset.sample.values
        span = values.max() - values.min()
        assert xs[0] == pytest.approx(values.min() - 0.1 * span)
        assert xs[-1] == pytest.approx(values.max() + 0.1 * span)
        pdf = np.array([float(r.split(",")[1]) for r in rows])
        assert np.all(pdf >= 0)

    def test_return_curve_strictly_increasing(self, plot_files):
        written, _ = plot_files
        rows = written["return_curve"].read_text().splitlines()[1:]
        levels = np.array([float(r.split(",")[1]) for r in rows])
        assert np.all(np.diff(levels) > 0)

    def test_probability_columns_in_unit_interval(self, plot_files):
        written, _ = plot_files
        rows = written["qq_gev"].read_text().splitlines()[1:]
        p = np.array([float(r.split(",")[0]) for r in rows])
        assert np.all((p > 0) & (p < 1))
        rows = written["prob_diff_gev"].read_text().splitlines()[1:]
        diff = np.array([float(r.split(",")[1]) for r in rows])
        assert np.all(np.abs(diff) <= 1.0)

    def test_timeseries_uses_index_when_years_missing(self, plot_files, synthetic_dataset):
        written, _ = plot_files
        rows = written["timeseries"].read_text().splitlines()[1:]
        assert len(rows) == synthetic_dataset.sample.n
        assert rows[0].split(",")[0] == "1"

    def test_emission_is_deterministic(self, report, synthetic_dataset, tmp_path):
        first = emit_plot_data(report, synthetic_dataset, tmp_path / "a")
        second = emit_plot_data(report, synthetic_dataset, tmp_path / "b")
        for name in first:
            assert first[name].read_bytes() == second[name].read_bytes()
