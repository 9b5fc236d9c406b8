import numpy as np
import pytest

from faultinv.analysis import (ExperimentSuite, central_interval,
                               coordinate_ranges, dump_marginal_csv,
                               fixed_c_study, load_marginal_csv,
                               mode_estimate, pooled_samples,
                               sample_posterior, setting_summary,
                               tightening_report, tv_distance)
from faultinv.geometry import DEFAULT_R, DEFAULT_V, SlipBasis
from faultinv.posterior import Posterior
from faultinv.quadrature import gauss_stations
from faultinv.sampler import PosteriorChain, SamplerConfig


def make_chain(samples):
    samples = np.asarray(samples, float)
    return PosteriorChain(samples, np.zeros(len(samples)), len(samples) // 2,
                          max(len(samples), 1), 0)


class TestExperimentSuite:
    def test_valid(self):
        ExperimentSuite(((9, 15), (25, 21), (49, 27)))

    def test_rejects_non_increasing(self):
        with pytest.raises(ValueError):
            ExperimentSuite(((9, 15), (9, 21)))
        with pytest.raises(ValueError):
            ExperimentSuite(((9, 21), (25, 15)))


class TestModeEstimate:
    def test_recovers_peak(self):
        rng = np.random.default_rng(0)
        s = rng.normal(0.4, 0.05, size=20_000)
        assert abs(mode_estimate(s, (-1.0, 1.0)) - 0.4) < 0.05

    def test_bin_midpoint(self):
        s = np.full(10, 0.51)
        got = mode_estimate(s, (0.0, 1.0), bins=10)
        assert got == pytest.approx(0.55)


class TestTvDistance:
    def test_identical_zero(self):
        d = np.array([0.5, 0.5, 0.0, 0.0])
        assert tv_distance(d, d, (0.0, 4.0)) == 0.0

    def test_disjoint_unit(self):
        # both normalized on [0,4] with bin width 1
        d1 = np.array([0.5, 0.5, 0.0, 0.0])
        d2 = np.array([0.0, 0.0, 0.5, 0.5])
        assert tv_distance(d1, d2, (0.0, 4.0)) == pytest.approx(1.0)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            tv_distance(np.zeros(3), np.zeros(4), (0, 1))


class TestMarginalCsv:
    def test_roundtrip(self, tmp_path):
        centers = np.linspace(-1, 1, 16)
        dens = np.abs(np.sin(centers))
        path = tmp_path / "m.csv"
        dump_marginal_csv(path, centers, dens)
        c2, d2 = load_marginal_csv(path)
        assert np.array_equal(c2, centers)
        assert np.array_equal(d2, dens)

    def test_empty_rejected(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("bin_center,density\n")
        with pytest.raises(ValueError):
            load_marginal_csv(path)


class TestSummaries:
    def test_setting_summary_stats(self):
        rng = np.random.default_rng(5)
        chains = [make_chain(rng.normal([0.0, -10.0], [0.1, 1.0],
                                        size=(5000, 2))) for _ in range(2)]
        ranges = ((-1.0, 1.0), (-15.0, -5.0))
        s = setting_summary(chains, ranges, coord_names=("x", "y"), bins=32)
        assert s["n_samples"] == 10_000
        assert s["std"]["x"] == pytest.approx(0.1, rel=0.05)
        assert abs(s["mode"]["y"] + 10.0) < 0.5
        assert len(s["acceptance_rates"]) == 2

    def test_tightening_report(self):
        def summ(scale):
            return {"std": {k: scale for k in ("a", "b", "d")},
                    "mode": {"a": -0.1, "b": -0.3, "d": -14.5}}
        rep = tightening_report([summ(0.5), summ(0.2), summ(0.1)],
                                (-0.12, -0.26, -14.0))
        assert all(rep["monotone"][k] for k in ("a", "b", "d"))
        assert not rep["degenerate"]
        assert rep["settings"][0]["mode_error"]["a"] == pytest.approx(0.02)

    def test_tightening_flags_violation_and_degeneracy(self):
        def summ(stds):
            return {"std": dict(zip(("a", "b", "d"), stds)),
                    "mode": {"a": 0.0, "b": 0.0, "d": -10.0}}
        rep = tightening_report([summ((0.5, 0.5, 0.5)), summ((0.6, 0.4, 0.5))],
                                (-0.12, -0.26, -14.0))
        assert not rep["monotone"]["a"]
        assert rep["monotone"]["b"]
        assert rep["degenerate"]          # d identical across settings

    def test_tightening_needs_two(self):
        with pytest.raises(ValueError):
            tightening_report([{"std": {}, "mode": {}}], (0, 0, 0))


class TestCentralInterval:
    def test_uniform(self):
        s = np.linspace(0.0, 1.0, 100_001)
        lo, hi = central_interval(s, 0.9)
        assert lo == pytest.approx(0.05, abs=1e-3)
        assert hi == pytest.approx(0.95, abs=1e-3)


@pytest.fixture(scope="module")
def posterior():
    basis = SlipBasis(3, DEFAULT_R)
    stations = gauss_stations(2, DEFAULT_V)
    rng = np.random.default_rng(2)
    data = 1e-3 * rng.standard_normal((stations.n_stations, 3))
    return Posterior(data, basis, stations)


class TestSamplePosterior:
    def test_runs_and_stays_in_support(self, posterior):
        cfg = SamplerConfig(n_steps=300, burn_in=50, n_proposals=2,
                            proposal_scales=(0.05, 0.05, 1.0, 0.15),
                            rng_seed=3, n_chains=2)
        chains = sample_posterior(posterior, cfg)
        assert len(chains) == 2
        for c in chains:
            for theta in c.samples[::50]:
                assert posterior.in_support(tuple(theta[:3]), 10.0 ** theta[3])

    def test_scan_start_chains_in_support(self, posterior):
        cfg = SamplerConfig(n_steps=200, burn_in=50, n_proposals=1,
                            proposal_scales=(0.05, 0.05, 1.0, 0.15),
                            rng_seed=5, n_chains=2)
        chains = sample_posterior(posterior, cfg, n_scan=30)
        for c in chains:
            assert np.all(np.isfinite(c.log_densities))

    def test_coordinate_ranges(self, posterior):
        r = coordinate_ranges(posterior)
        assert r[0] == posterior.admissible.a_bounds
        assert r[3] == (-7.0, -2.0)


class TestFixedCStudy:
    def test_structure_and_modes(self, posterior):
        cfg = SamplerConfig(n_steps=400, burn_in=100, n_proposals=2,
                            proposal_scales=(0.05, 0.05, 1.0, 0.15),
                            rng_seed=7, n_chains=1)
        results, spread = fixed_c_study(posterior, [1e-6, 1e-4], cfg, bins=16)
        assert set(results) == {1e-6, 1e-4}
        for r in results.values():
            assert set(r["marginals"]) == {"a", "b", "d"}
            centers, dens = r["marginals"]["d"]
            assert len(centers) == 16
            width = centers[1] - centers[0]
            assert float(dens.sum() * width) == pytest.approx(1.0, abs=1e-9)
        assert set(spread) == {"a", "b", "d"}
        assert all(v >= 0 for v in spread.values())

    def test_rejects_out_of_range_C(self, posterior):
        cfg = SamplerConfig(n_steps=100, burn_in=10)
        with pytest.raises(ValueError, match="prior range"):
            fixed_c_study(posterior, [1.0], cfg)
