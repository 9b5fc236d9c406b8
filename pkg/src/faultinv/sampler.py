"""Parallel multiple-proposal Metropolis sampler over (a, b, d, log10 C).

Each step draws K Gaussian proposals around the current point, evaluates them
(concurrently if workers are given), and performs one Metropolis transition on
the finite pool {current} + proposals with pool weights
p_j = pi(x_j) * prod_{k != j} q(x_k | x_j).  With K = 1 this is exactly
symmetric-proposal Metropolis.  All randomness is drawn from a single
per-chain stream before target evaluation, so thread scheduling cannot change
the chain.
"""
import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class SamplerConfig:
    n_steps: int = 20_000
    burn_in: int = 2_000
    n_proposals: int = 4                      # K
    proposal_scales: tuple = (0.05, 0.05, 1.0, 0.15)
    rng_seed: int = 0
    n_chains: int = 4
    n_workers: int = None                     # None: one thread per proposal
    thin: int = 1                             # keep every thin-th post-burn-in state

    def __post_init__(self):
        if self.n_proposals < 1:
            raise ValueError("need at least one proposal per step")
        if not (self.n_steps > self.burn_in >= 0):
            raise ValueError("require n_steps > burn_in >= 0")
        if np.any(np.asarray(self.proposal_scales) <= 0):
            raise ValueError("proposal scales must be positive")
        if self.thin < 1:
            raise ValueError("thin must be >= 1")


@dataclass
class PosteriorChain:
    samples: np.ndarray        # (n, dim) kept states after burn-in
    log_densities: np.ndarray  # (n,)
    acceptance_count: int
    n_steps: int
    seed: object

    @property
    def acceptance_rate(self):
        return self.acceptance_count / self.n_steps

    def dump_csv(self, path):
        names = ["a", "b", "d", "log10C"][: self.samples.shape[1]]
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["step"] + names + ["logdensity"])
            for i, (s, ld) in enumerate(zip(self.samples, self.log_densities)):
                w.writerow([i] + [repr(float(v)) for v in s]
                           + [repr(float(ld))])


def _pool_log_weights(points, log_pi, scales):
    """log p_j = log pi_j + sum_{k != j} log q(x_k | x_j) up to a constant."""
    z = points / scales
    d2 = np.sum((z[:, None, :] - z[None, :, :]) ** 2, axis=-1)
    qsum = -0.5 * (d2.sum(axis=0) - np.diag(d2))
    return np.asarray(log_pi, float) + qsum


def run(cfg: SamplerConfig, target, init, progress=None) -> PosteriorChain:
    """Run one chain of the multiple-proposal Metropolis scheme."""
    rng = np.random.default_rng(cfg.rng_seed)
    x = np.asarray(init, float).copy()
    lp = float(target(x))
    if not math.isfinite(lp):
        raise ValueError("initial point has zero posterior density")
    scales = np.asarray(cfg.proposal_scales, float)
    if scales.shape != x.shape:
        raise ValueError("proposal_scales must match the state dimension")
    K = cfg.n_proposals
    kept_x = []
    kept_lp = []
    accepted = 0
    workers = cfg.n_workers if cfg.n_workers is not None else K
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 and K > 1 else None
    try:
        for step in range(cfg.n_steps):
            noise = rng.standard_normal((K, x.size))
            u = rng.random()
            props = x + noise * scales
            if K == 1:
                # plain symmetric-proposal Metropolis
                lpp = float(target(props[0]))
                if math.isfinite(lpp) and (lpp >= lp or u < math.exp(lpp - lp)):
                    x = props[0].copy()
                    lp = lpp
                    accepted += 1
            else:
                if pool is None:
                    lps = [float(target(p)) for p in props]
                else:
                    lps = [float(v) for v in pool.map(target, props)]
                pts = np.vstack([x[None, :], props])
                logw = _pool_log_weights(pts, [lp] + lps, scales)
                # Metropolis transition on the pool, from index 0
                with np.errstate(over="ignore"):
                    move = np.minimum(1.0, np.exp(logw[1:] - logw[0])) / K
                move[~np.isfinite(logw[1:])] = 0.0
                cum = np.cumsum(move)
                j = int(np.searchsorted(cum, u))
                if j < K:
                    x = props[j].copy()
                    lp = lps[j]
                    accepted += 1
            if step >= cfg.burn_in and (step - cfg.burn_in) % cfg.thin == 0:
                kept_x.append(x.copy())
                kept_lp.append(lp)
            if progress is not None and (step + 1) % 1000 == 0:
                progress(step + 1, cfg.n_steps)
    finally:
        if pool is not None:
            pool.shutdown()
    return PosteriorChain(np.array(kept_x), np.array(kept_lp), accepted,
                          cfg.n_steps, cfg.rng_seed)


def run_chains(cfg: SamplerConfig, target, init_fn, parallel=True):
    """Independent chains with seeds spawned from cfg.rng_seed.

    init_fn(rng) must return an in-support starting point.
    """
    seeds = np.random.SeedSequence(cfg.rng_seed).spawn(cfg.n_chains)
    jobs = []
    for seq in seeds:
        rng = np.random.default_rng(seq)
        jobs.append((replace(cfg, rng_seed=seq, n_chains=1), init_fn(rng)))
    if parallel and cfg.n_chains > 1:
        with ThreadPoolExecutor(max_workers=cfg.n_chains) as ex:
            return list(ex.map(lambda jc: run(jc[0], target, jc[1]), jobs))
    return [run(jc, target, init) for jc, init in jobs]


def initial_point(draw_fn, target, rng, max_attempts=10_000):
    """Redraw from the prior until the target density is positive."""
    for _ in range(max_attempts):
        x = np.asarray(draw_fn(rng), float)
        if math.isfinite(target(x)):
            return x
    raise RuntimeError("could not find an in-support initial point")


def scan_start(draw_fn, target, rng, n_draws):
    """Best of n_draws prior draws; cuts burn-in on concentrated targets."""
    best, best_lp = None, -math.inf
    for _ in range(n_draws):
        x = np.asarray(draw_fn(rng), float)
        lp = float(target(x))
        if lp > best_lp:
            best, best_lp = x, lp
    if best is None or not math.isfinite(best_lp):
        raise RuntimeError("no in-support point found in the prior scan")
    return best


def marginal_histogram(chain: PosteriorChain, coordinate: int, bins: int,
                       value_range):
    """Normalized marginal density histogram: (bin_centers, densities)."""
    if len(chain.samples) == 0:
        raise ValueError("empty chain")
    dens, edges = np.histogram(chain.samples[:, coordinate], bins=bins,
                               range=value_range, density=True)
    centers = 0.5 * (edges[:-1] + edges[1:])
    return centers, dens


def pooled_histogram(chains, coordinate, bins, value_range):
    samples = np.concatenate([c.samples[:, coordinate] for c in chains])
    dens, edges = np.histogram(samples, bins=bins, range=value_range, density=True)
    return 0.5 * (edges[:-1] + edges[1:]), dens
