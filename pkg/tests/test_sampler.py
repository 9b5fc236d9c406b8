import math

import numpy as np
import pytest
from scipy.stats import kstest

from faultinv.sampler import (PosteriorChain, SamplerConfig, initial_point,
                              marginal_histogram, pooled_histogram, run,
                              run_chains, scan_start)


def uniform_box(x):
    return 0.0 if np.all(np.abs(x) <= 1.0) else -math.inf


def std_gaussian(x):
    return -0.5 * float(np.dot(x, x))


class TestConfig:
    def test_invariants(self):
        with pytest.raises(ValueError):
            SamplerConfig(n_proposals=0)
        with pytest.raises(ValueError):
            SamplerConfig(n_steps=10, burn_in=10)
        with pytest.raises(ValueError):
            SamplerConfig(proposal_scales=(0.1, -0.1))
        with pytest.raises(ValueError):
            SamplerConfig(thin=0)


class TestRun:
    def test_init_out_of_support(self):
        cfg = SamplerConfig(n_steps=10, burn_in=0, proposal_scales=(1, 1))
        with pytest.raises(ValueError):
            run(cfg, uniform_box, (5.0, 5.0))

    def test_tiny_scales_stay_put(self):
        cfg = SamplerConfig(n_steps=200, burn_in=0, n_proposals=3,
                            proposal_scales=(1e-300, 1e-300), rng_seed=0)
        chain = run(cfg, std_gaussian, (0.3, -0.2))
        assert np.all(chain.samples == [0.3, -0.2])

    def test_thread_count_invariance(self):
        """Bitwise identical chains regardless of worker threads."""
        chains = []
        for workers in (1, 2, 8):
            cfg = SamplerConfig(n_steps=500, burn_in=0, n_proposals=4,
                                proposal_scales=(0.5, 0.5), rng_seed=11,
                                n_workers=workers)
            chains.append(run(cfg, std_gaussian, (0.0, 0.0)))
        for c in chains[1:]:
            assert np.array_equal(c.samples, chains[0].samples)
            assert np.array_equal(c.log_densities, chains[0].log_densities)

    def test_seed_reproducibility(self):
        cfg = SamplerConfig(n_steps=300, burn_in=50, n_proposals=2,
                            proposal_scales=(0.4,), rng_seed=5)
        a = run(cfg, std_gaussian, (0.1,))
        b = run(cfg, std_gaussian, (0.1,))
        assert np.array_equal(a.samples, b.samples)

    def test_k1_equals_plain_metropolis(self):
        """K=1 must reduce to textbook symmetric-proposal Metropolis."""
        seed, n, scale = 7, 2000, 0.5

        def metropolis():
            rng = np.random.default_rng(seed)
            x = np.array([0.2, 0.2])
            lp = uniform_box(x)
            out = []
            for _ in range(n):
                noise = rng.standard_normal((1, 2))
                u = rng.random()
                prop = x + noise[0] * scale
                lpp = uniform_box(prop)
                if math.isfinite(lpp) and u < min(1.0, math.exp(lpp - lp)):
                    x, lp = prop, lpp
                out.append(x.copy())
            return np.array(out)

        cfg = SamplerConfig(n_steps=n, burn_in=0, n_proposals=1,
                            proposal_scales=(scale, scale), rng_seed=seed)
        chain = run(cfg, uniform_box, (0.2, 0.2))
        assert np.array_equal(chain.samples, metropolis())

    def test_stored_samples_in_support(self):
        cfg = SamplerConfig(n_steps=2000, burn_in=100, n_proposals=3,
                            proposal_scales=(0.8, 0.8), rng_seed=1)
        chain = run(cfg, uniform_box, (0.0, 0.0))
        assert np.all(np.abs(chain.samples) <= 1.0)
        assert np.all(np.isfinite(chain.log_densities))

    def test_uniform_box_ks(self):
        """Per-coordinate KS below the 1% critical value, 1e5 kept samples."""
        cfg = SamplerConfig(n_steps=2_001_000, burn_in=1000, n_proposals=1,
                            proposal_scales=(1.0, 1.0), rng_seed=42,
                            n_workers=1, thin=20)
        chain = run(cfg, uniform_box, (0.0, 0.0))
        assert len(chain.samples) == 100_000
        crit = 1.628 / math.sqrt(len(chain.samples))   # 1% asymptotic
        for coord in range(2):
            stat = kstest((chain.samples[:, coord] + 1) / 2, "uniform").statistic
            assert stat < crit, (coord, stat, crit)

    def test_gaussian_moments(self):
        """K=4 on a standard 1-D Gaussian: mean and variance recovered."""
        n = 100_000
        cfg = SamplerConfig(n_steps=n + 1000, burn_in=1000, n_proposals=4,
                            proposal_scales=(2.0,), rng_seed=3, n_workers=1)
        chain = run(cfg, std_gaussian, (0.0,))
        s = chain.samples[:, 0]
        # effective sample size from the empirical autocorrelation time
        ac = np.correlate(s - s.mean(), s - s.mean(), "full")[len(s) - 1:]
        ac = ac / ac[0]
        tau = 1 + 2 * float(np.sum(ac[1:200]))
        ess = len(s) / tau
        assert abs(s.mean()) < 3.0 / math.sqrt(ess)
        assert abs(s.var() - 1.0) < 0.1

    def test_detailed_balance_three_state(self):
        """Step-function density over 3 bins: empirical mass within TV 0.02."""
        target_mass = np.array([0.2, 0.3, 0.5])
        edges = np.array([-1.5, -0.5, 0.5, 1.5])

        def logdens(x):
            v = x[0]
            if not -1.5 <= v <= 1.5:
                return -math.inf
            return float(np.log(target_mass[np.searchsorted(edges, v) - 1]))

        cfg = SamplerConfig(n_steps=1_000_000, burn_in=5000, n_proposals=1,
                            proposal_scales=(1.2,), rng_seed=9)
        chain = run(cfg, logdens, (0.0,))
        counts = np.histogram(chain.samples[:, 0], bins=edges)[0]
        emp = counts / counts.sum()
        assert 0.5 * np.abs(emp - target_mass).sum() < 0.02


class TestRunChains:
    def test_independent_chains(self):
        cfg = SamplerConfig(n_steps=300, burn_in=50, n_proposals=2,
                            proposal_scales=(0.5,), rng_seed=17, n_chains=3)
        chains = run_chains(cfg, std_gaussian, lambda rng: (rng.uniform(-1, 1),))
        assert len(chains) == 3
        assert not np.array_equal(chains[0].samples, chains[1].samples)

    def test_parallel_equals_serial(self):
        cfg = SamplerConfig(n_steps=200, burn_in=20, n_proposals=2,
                            proposal_scales=(0.5,), rng_seed=23, n_chains=3)
        par = run_chains(cfg, std_gaussian, lambda rng: (rng.uniform(-1, 1),))
        ser = run_chains(cfg, std_gaussian, lambda rng: (rng.uniform(-1, 1),),
                         parallel=False)
        for a, b in zip(par, ser):
            assert np.array_equal(a.samples, b.samples)


class TestInitialPoint:
    def test_redraws_until_in_support(self):
        rng = np.random.default_rng(0)
        x = initial_point(lambda r: r.uniform(-3, 3, size=2), uniform_box, rng)
        assert np.all(np.abs(x) <= 1)

    def test_gives_up(self):
        rng = np.random.default_rng(0)
        with pytest.raises(RuntimeError):
            initial_point(lambda r: np.array([5.0, 5.0]), uniform_box, rng,
                          max_attempts=10)


class TestScanStart:
    def test_picks_highest_density_draw(self):
        rng = np.random.default_rng(4)
        draws = iter(np.linspace(-2.0, 2.0, 9))

        def draw(_rng):
            return np.array([next(draws)])

        x = scan_start(draw, lambda t: -0.5 * float(t @ t), rng, 9)
        assert x[0] == pytest.approx(0.0)

    def test_all_out_of_support_errors(self):
        rng = np.random.default_rng(0)
        with pytest.raises(RuntimeError):
            scan_start(lambda r: np.array([5.0, 5.0]), uniform_box, rng, 20)


class TestHistograms:
    def _chain(self, samples):
        samples = np.asarray(samples, float)
        return PosteriorChain(samples, np.zeros(len(samples)), 0,
                              max(len(samples), 1), 0)

    def test_empty_chain_errors(self):
        with pytest.raises(ValueError):
            marginal_histogram(self._chain(np.empty((0, 1))), 0, 8, (0, 1))

    def test_identical_samples_single_bin(self):
        chain = self._chain([[0.31]] * 50)
        centers, dens = marginal_histogram(chain, 0, 10, (0, 1))
        occupied = dens > 0
        assert occupied.sum() == 1
        width = 0.1
        assert dens[occupied][0] * width == pytest.approx(1.0, abs=1e-12)

    def test_mass_normalized(self):
        rng = np.random.default_rng(8)
        chain = self._chain(rng.uniform(-2, 3, size=(1000, 1)))
        _, dens = marginal_histogram(chain, 0, 32, (-2, 3))
        width = 5 / 32
        assert float(dens.sum() * width) == pytest.approx(1.0, abs=1e-12)

    def test_gaussian_tv(self):
        """Histogram within total variation 0.05 of the true density."""
        n = 100_000
        cfg = SamplerConfig(n_steps=n + 1000, burn_in=1000, n_proposals=4,
                            proposal_scales=(2.0,), rng_seed=31)
        chain = run(cfg, std_gaussian, (0.0,))
        lo, hi, bins = -5.0, 5.0, 50
        centers, dens = marginal_histogram(chain, 0, bins, (lo, hi))
        width = (hi - lo) / bins
        truth = np.exp(-0.5 * centers**2) / math.sqrt(2 * math.pi)
        tv = 0.5 * float(np.sum(np.abs(dens - truth))) * width
        assert tv < 0.05

    def test_pooled(self):
        a = self._chain([[0.0]] * 10)
        b = self._chain([[1.0]] * 10)
        centers, dens = pooled_histogram([a, b], 0, 4, (-0.5, 1.5))
        width = 0.5
        assert float(dens.sum() * width) == pytest.approx(1.0, abs=1e-12)


class TestDump:
    def test_csv_roundtrip(self, tmp_path):
        rng = np.random.default_rng(2)
        samples = rng.standard_normal((20, 4))
        chain = PosteriorChain(samples, rng.standard_normal(20), 5, 20, 0)
        path = tmp_path / "chain.csv"
        chain.dump_csv(path)
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "step,a,b,d,log10C,logdensity"
        got = np.array([[float(v) for v in ln.split(",")[1:5]]
                        for ln in lines[1:]])
        assert np.array_equal(got, samples)
