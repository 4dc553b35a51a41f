"""Coherent-state counting statistics and ensemble momentum totals."""

import math

import numpy as np
import pytest

from mzkick.classical_optics import ClassicalBeam, plain_mirror_kick
from mzkick.ensemble import (
    RunRecord,
    expected_kick_report,
    fluctuation_analysis,
    plain_mirror_quantum_kick,
    sample_runs,
    write_records_csv,
)
from mzkick.errors import ConstraintViolationError, DegenerateSampleError, ZeroOverlapError
from mzkick.photon_modes import BeamsplitterSpec
from mzkick.weak_measurement import OpticalSetup, net_kick_d2

ALPHA_60 = math.radians(60.0)


def make_setup(r_squared=0.75, nbar=100.0, alpha=ALPHA_60, omega=1.0):
    return OpticalSetup(
        bs=BeamsplitterSpec.from_r_squared(r_squared), omega=omega, alpha=alpha, nbar=nbar
    )


def fixed_total_records(total: int, trials: int, seed: int, kick: float, p_d1: float):
    """Runs conditioned on an exact photon total: only the split fluctuates."""
    rng = np.random.Generator(np.random.Philox(seed))
    n1 = rng.binomial(total, p_d1, size=trials)
    return [RunRecord(total, int(a), int(total - a), float((total - a) * kick)) for a in n1]


class TestRunRecord:
    def test_count_consistency_enforced(self):
        with pytest.raises(ConstraintViolationError):
            RunRecord(10, 4, 5, 0.0)
        with pytest.raises(ConstraintViolationError):
            RunRecord(10, -1, 11, 0.0)


class TestPlainMirrorQuantumKick:
    def test_headline_value(self):
        assert plain_mirror_quantum_kick(make_setup()) == pytest.approx(100.0, abs=1e-12)

    def test_vacuum(self):
        assert plain_mirror_quantum_kick(make_setup(nbar=0.0)) == 0.0

    def test_agrees_with_classical_at_matching_intensity(self):
        setup = make_setup(nbar=137.0, alpha=math.radians(42.0))
        classical = plain_mirror_kick(
            ClassicalBeam(setup.nbar * setup.hbar * setup.omega, setup.alpha)
        )
        assert plain_mirror_quantum_kick(setup) == pytest.approx(classical, abs=1e-12)


class TestExpectedKickReport:
    def test_headline_values(self):
        report = expected_kick_report(make_setup())
        assert report.d1_total == 0.0
        assert report.d2_total == pytest.approx(-12.5, abs=1e-12)
        assert report.grand_total == pytest.approx(-12.5, abs=1e-12)
        assert report.classical_reference == pytest.approx(-12.5, abs=1e-12)

    def test_grand_total_is_sum(self):
        report = expected_kick_report(make_setup(0.9, nbar=1e4))
        assert report.grand_total == report.d1_total + report.d2_total

    @pytest.mark.parametrize("r_squared", [0.51, 0.6, 0.75, 0.9, 0.99])
    def test_matches_classical_reference(self, r_squared):
        report = expected_kick_report(make_setup(r_squared, nbar=1e4))
        assert report.grand_total == pytest.approx(report.classical_reference, rel=1e-12)

    def test_balanced_raises(self):
        with pytest.raises(ZeroOverlapError):
            expected_kick_report(make_setup(0.5))


class TestSampleRuns:
    def test_deterministic_per_seed(self):
        setup = make_setup(nbar=1e3)
        assert sample_runs(setup, 200, seed=11) == sample_runs(setup, 200, seed=11)

    def test_different_seeds_differ(self):
        setup = make_setup(nbar=1e3)
        assert sample_runs(setup, 200, seed=11) != sample_runs(setup, 200, seed=12)

    def test_record_structure(self):
        setup = make_setup(nbar=1e3)
        kick = net_kick_d2(setup)
        for rec in sample_runs(setup, 100, seed=3):
            assert rec.d1_count + rec.d2_count == rec.total_photons
            assert rec.mirror_momentum == rec.d2_count * kick

    def test_poisson_mean(self):
        setup = make_setup(nbar=1e4)
        records = sample_runs(setup, 1000, seed=5)
        totals = np.array([rec.total_photons for rec in records])
        # Poisson(1e4) has sd 100, so the mean of 1000 draws has se ~ 3.16
        assert abs(totals.mean() - 1e4) < 3.0 * 100.0 / math.sqrt(1000)

    def test_sample_mean_matches_expectation(self):
        setup = make_setup(nbar=1e4)
        records = sample_runs(setup, 1000, seed=7)
        momenta = np.array([rec.mirror_momentum for rec in records])
        se = momenta.std(ddof=1) / math.sqrt(len(records))
        assert abs(momenta.mean() - expected_kick_report(setup).grand_total) < 3.0 * se

    def test_rejects_bad_arguments(self):
        with pytest.raises(ConstraintViolationError):
            sample_runs(make_setup(), 0, seed=1)
        with pytest.raises(ConstraintViolationError):
            sample_runs(make_setup(nbar=0.0), 10, seed=1)
        with pytest.raises(ZeroOverlapError):
            sample_runs(make_setup(0.5), 10, seed=1)


class TestFluctuationAnalysis:
    def test_fixed_total_correlation_is_plus_one(self):
        setup = make_setup(nbar=1e4)
        records = fixed_total_records(10_000, 500, seed=2, kick=net_kick_d2(setup), p_d1=0.75)
        assert abs(fluctuation_analysis(records) - 1.0) < 1e-12

    def test_unconditional_correlation_vanishes(self):
        # Poisson thinning makes the two channel counts independent, so more
        # D1 photons by Poisson excess say nothing about the momentum.
        records = sample_runs(make_setup(nbar=1e4), 1000, seed=9)
        assert abs(fluctuation_analysis(records)) < 0.15

    def test_within_total_pooling_recovers_plus_one(self):
        records = sample_runs(make_setup(nbar=1e4), 1000, seed=9)
        corr = fluctuation_analysis(records, conditional_on_total=True)
        assert abs(corr - 1.0) < 1e-12

    def test_classical_attribution_flips_the_sign(self):
        records = sample_runs(make_setup(nbar=1e4), 1000, seed=9)
        corr = fluctuation_analysis(records, classical_attribution=True)
        assert abs(corr - (-1.0)) < 1e-12  # momentum proportional to n1, negative kick

    def test_requires_thirty_records(self):
        records = sample_runs(make_setup(nbar=1e4), 10, seed=1)
        with pytest.raises(DegenerateSampleError):
            fluctuation_analysis(records)

    def test_zero_variance_raises(self):
        records = [RunRecord(100, 60, 40, -20.0)] * 40
        with pytest.raises(DegenerateSampleError):
            fluctuation_analysis(records)


class TestRecordsCsv:
    def test_round_trip(self, tmp_path):
        records = sample_runs(make_setup(nbar=500.0), 50, seed=4)
        target = tmp_path / "records.csv"
        write_records_csv(records, target)
        lines = target.read_text().splitlines()
        assert lines[0] == "trial,N,n1,n2,momentum"
        assert len(lines) == 51
        for i, line in enumerate(lines[1:]):
            trial, n, n1, n2, momentum = line.split(",")
            assert int(trial) == i
            assert int(n) == records[i].total_photons
            assert int(n1) == records[i].d1_count
            assert int(n2) == records[i].d2_count
            assert float(momentum) == records[i].mirror_momentum
