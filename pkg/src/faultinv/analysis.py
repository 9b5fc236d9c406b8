"""Chain post-processing: marginals, summary statistics, the tightening
comparison across (M_N, p) settings, and the fixed-C study.
"""
import csv
import math
from dataclasses import dataclass, replace

import numpy as np

from . import sampler as mp
from .posterior import Posterior

COORD_NAMES = ("a", "b", "d", "log10C")
MODE_BINS = 64


@dataclass(frozen=True)
class ExperimentSuite:
    settings: tuple                 # ((M_N, p), ...) strictly increasing
    noise_levels: tuple = (0.05, 0.25)
    m_true: tuple = (-0.12, -0.26, -14.0)
    scenario_id: str = "default"

    def __post_init__(self):
        for (m0, p0), (m1, p1) in zip(self.settings, self.settings[1:]):
            if not (m1 > m0 and p1 > p0):
                raise ValueError("settings must increase strictly in both "
                                 "station count and basis dimension")


def pooled_samples(chains, coordinate):
    return np.concatenate([c.samples[:, coordinate] for c in chains])


def mode_estimate(samples, value_range, bins=MODE_BINS):
    """Midpoint of the highest-density histogram bin."""
    counts, edges = np.histogram(samples, bins=bins, range=value_range)
    i = int(np.argmax(counts))
    return 0.5 * (edges[i] + edges[i + 1])


def tv_distance(density_1, density_2, value_range, n_bins=None):
    """Total-variation distance between two densities on shared bins."""
    d1 = np.asarray(density_1, float)
    d2 = np.asarray(density_2, float)
    if d1.shape != d2.shape:
        raise ValueError("densities must share a binning")
    width = (value_range[1] - value_range[0]) / len(d1)
    return 0.5 * float(np.sum(np.abs(d1 - d2))) * width


def dump_marginal_csv(path, centers, density):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["bin_center", "density"])
        for c, d in zip(centers, density):
            w.writerow([repr(float(c)), repr(float(d))])


def load_marginal_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"no rows in {path}")
    centers = np.array([float(r["bin_center"]) for r in rows])
    dens = np.array([float(r["density"]) for r in rows])
    return centers, dens


def coordinate_ranges(posterior: Posterior):
    """Prior ranges per sampling coordinate (a, b, d, log10C)."""
    adm = posterior.admissible
    lo, hi = posterior.c_bounds
    return (adm.a_bounds, adm.b_bounds, adm.d_bounds,
            (math.log10(lo), math.log10(hi)))


def sample_posterior(posterior: Posterior, cfg: mp.SamplerConfig, parallel=True,
                     n_scan=0):
    """Run the configured chains against the 4-coordinate posterior.

    n_scan > 0 starts each chain at the best of n_scan prior draws instead of
    a bare in-support draw; concentrated posteriors at fine settings are
    otherwise easy to miss within a chain's budget.
    """
    lo, hi = posterior.c_bounds

    def draw(rng):
        m = posterior.admissible.uniform_draw(rng)
        return (m.a, m.b, m.d, rng.uniform(math.log10(lo), math.log10(hi)))

    def init_fn(rng):
        if n_scan > 0:
            return mp.scan_start(draw, posterior, rng, n_scan)
        return mp.initial_point(draw, posterior, rng)

    return mp.run_chains(cfg, posterior, init_fn, parallel=parallel)


def setting_summary(chains, ranges, coord_names=COORD_NAMES, bins=MODE_BINS):
    """Stds, histogram modes, and acceptance rates of a pooled chain set."""
    out = {"acceptance_rates": [c.acceptance_rate for c in chains],
           "n_samples": int(sum(len(c.samples) for c in chains)),
           "std": {}, "mode": {}}
    for i, name in enumerate(coord_names):
        s = pooled_samples(chains, i)
        out["std"][name] = float(np.std(s))
        out["mode"][name] = float(mode_estimate(s, ranges[i], bins))
    return out


def tightening_report(summaries, m_true, labels=None):
    """Compare posterior spread across settings ordered by resolution.

    summaries: per-setting dicts from setting_summary, coarsest first.
    Returns the table plus monotonicity flags per coordinate of m.
    """
    if len(summaries) < 2:
        raise ValueError("need at least two settings to compare")
    labels = labels or [f"setting_{i}" for i in range(len(summaries))]
    report = {"settings": [], "monotone": {}, "degenerate": False}
    for lab, s, in zip(labels, summaries):
        row = {"label": lab,
               "std": {k: s["std"][k] for k in ("a", "b", "d")},
               "mode": {k: s["mode"][k] for k in ("a", "b", "d")},
               "mode_error": {k: abs(s["mode"][k] - mt)
                              for k, mt in zip(("a", "b", "d"), m_true)}}
        report["settings"].append(row)
    for k in ("a", "b", "d"):
        stds = [s["std"][k] for s in summaries]
        report["monotone"][k] = all(s1 < s0 for s0, s1 in zip(stds, stds[1:]))
        if all(s1 == s0 for s0, s1 in zip(stds, stds[1:])):
            report["degenerate"] = True
    return report


def fixed_c_study(posterior: Posterior, c_values, cfg: mp.SamplerConfig,
                  bins=MODE_BINS, parallel=True, n_scan=0):
    """Sample rho(m | data, C) at each frozen C; emit marginals and modes.

    Returns {C: {"chains", "marginals": {coord: (centers, density)}, "mode"}}
    plus the spread of modes across the C values.
    """
    lo, hi = posterior.c_bounds
    for C in c_values:
        if not lo <= C <= hi:
            raise ValueError(f"fixed C = {C} outside the prior range [{lo}, {hi}]")
    ranges = coordinate_ranges(posterior)[:3]
    scales = np.asarray(cfg.proposal_scales, float)[:3]
    results = {}
    for C in c_values:
        def target(m3, _C=C):
            return posterior.log_posterior(tuple(m3), _C).log_density

        def init_fn(rng, _target=target):
            draw = lambda r: posterior.admissible.uniform_draw(r).m
            if n_scan > 0:
                return mp.scan_start(draw, _target, rng, n_scan)
            return mp.initial_point(draw, _target, rng)

        ccfg = replace(cfg, proposal_scales=tuple(scales))
        chains = mp.run_chains(ccfg, target, init_fn, parallel=parallel)
        marg = {}
        modes = {}
        for i, name in enumerate(("a", "b", "d")):
            s = pooled_samples(chains, i)
            dens, edges = np.histogram(s, bins=bins, range=ranges[i], density=True)
            marg[name] = (0.5 * (edges[:-1] + edges[1:]), dens)
            modes[name] = float(mode_estimate(s, ranges[i], bins))
        results[C] = {"chains": chains, "marginals": marg, "mode": modes}
    spread = {name: (max(r["mode"][name] for r in results.values())
                     - min(r["mode"][name] for r in results.values()))
              for name in ("a", "b", "d")}
    return results, spread


def central_interval(samples, mass=0.9):
    """Equal-tail credible interval of the given mass."""
    tail = 0.5 * (1.0 - mass)
    return (float(np.quantile(samples, tail)),
            float(np.quantile(samples, 1.0 - tail)))
