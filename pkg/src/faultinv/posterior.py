"""Marginalized log posterior of the plane parameters and the regularization
constant, with the slip integrated out and the noise variance profiled.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .forward import assemble, scale_data
from .geometry import AdmissibleSet, FaultGeometry, SlipBasis
from .green import ElasticModel
from .quadrature import FaultQuadrature, StationSet
from .tikhonov import RegularizedSolution

GRID_MAX_NODES = 100_000


@dataclass(frozen=True)
class PosteriorEval:
    log_density: float
    logdet_term: float
    likelihood_term: float
    prior_ok: bool
    solution: RegularizedSolution = None


class Posterior:
    """Unnormalized posterior density over (a, b, d, log10 C).

    data: (M_N, 3) station displacements.  The prior over m is uniform on the
    admissible set; the prior over C is uniform in log10 C on c_bounds
    (default) or uniform in C itself with prior="linear".  sigma_formula
    selects the profiled-variance expression: "paper" adds C||g||^2 on top of
    the objective, "ml" uses the objective alone.
    """

    def __init__(self, data, basis: SlipBasis, stations: StationSet,
                 rule: FaultQuadrature = None,
                 elastic: ElasticModel = ElasticModel(),
                 admissible: AdmissibleSet = AdmissibleSet(),
                 c_bounds=(1e-7, 1e-2), prior="log10",
                 sigma_formula="paper"):
        data = np.asarray(data, float)
        if not np.all(np.isfinite(data)):
            raise ValueError("non-finite data")
        if prior not in ("log10", "linear"):
            raise ValueError(f"unknown C prior {prior!r}")
        if sigma_formula not in ("paper", "ml"):
            raise ValueError(f"unknown sigma formula {sigma_formula!r}")
        self.data = data
        self.basis = basis
        self.stations = stations
        self.rule = rule or FaultQuadrature.for_basis(basis)
        self.elastic = elastic
        self.admissible = admissible
        self.c_bounds = (float(c_bounds[0]), float(c_bounds[1]))
        self.prior = prior
        self.sigma_formula = sigma_formula
        self._data_scaled = scale_data(data, stations)
        # geometry-independent basis samples at the fault rule nodes
        self._modes = basis.modes(self.rule.nodes)

    @property
    def n_stations(self):
        return self.stations.n_stations

    def in_support(self, m, C) -> bool:
        return (self.c_bounds[0] <= C <= self.c_bounds[1]
                and self.admissible.contains(m))

    def log_posterior(self, m, C) -> PosteriorEval:
        """Evaluate log rho(m, C | data) up to the (m, C)-independent constant."""
        if not isinstance(m, FaultGeometry):
            m = FaultGeometry(*m)
        if not self.in_support(m, C):
            return PosteriorEval(-math.inf, math.nan, math.nan, False)
        if m.a == 0.0 and m.b == 0.0:
            # horizontal plane: the steepest-descent slip direction is
            # undefined, so this null set carries no posterior mass
            return PosteriorEval(-math.inf, math.nan, math.nan, False)
        fwd = assemble(m, self.basis, self.stations, self.rule, self.elastic,
                       modes=self._modes)
        A = fwd.matrix
        n = A.shape[0]
        K = A @ A.T
        f = cho_factor(K + C * np.eye(n), lower=True)
        # det(C^-1 A'A + I) computed on the data side (equal nonzero spectra)
        logdet = 2.0 * float(np.sum(np.log(np.diag(f[0])))) - n * math.log(C)
        w = cho_solve(f, self._data_scaled)
        g = A.T @ w
        r = A @ g - self._data_scaled
        sol = RegularizedSolution(g, float(r @ r), float(g @ g), float(C))
        value = sol.objective
        if self.sigma_formula == "paper":
            value = value + C * sol.reg_norm2
        if value <= 0.0:
            return PosteriorEval(-math.inf, -0.5 * logdet, math.nan, True, sol)
        logdet_term = -0.5 * logdet
        likelihood_term = -1.5 * self.n_stations * math.log(value)
        return PosteriorEval(logdet_term + likelihood_term, logdet_term,
                             likelihood_term, True, sol)

    def __call__(self, theta) -> float:
        """Log density in the sampling coordinates (a, b, d, log10 C)."""
        a, b, d, log10c = theta
        C = 10.0 ** log10c
        ev = self.log_posterior((a, b, d), C)
        if not math.isfinite(ev.log_density):
            return -math.inf
        if self.prior == "linear":
            # uniform-in-C prior expressed in the log10 C coordinate
            return ev.log_density + math.log(C)
        return ev.log_density

    def grid(self, a_vals, b_vals, d_vals, log10c_vals) -> np.ndarray:
        """Normalized posterior mass on a small lattice; sampler oracle."""
        axes = [np.atleast_1d(np.asarray(v, float))
                for v in (a_vals, b_vals, d_vals, log10c_vals)]
        shape = tuple(len(v) for v in axes)
        n = int(np.prod(shape))
        if n > GRID_MAX_NODES:
            raise ValueError(f"lattice of {n} nodes exceeds the "
                             f"{GRID_MAX_NODES}-node guard")
        logp = np.full(shape, -math.inf)
        for ia, a in enumerate(axes[0]):
            for ib, b in enumerate(axes[1]):
                for id_, d in enumerate(axes[2]):
                    for ic, lc in enumerate(axes[3]):
                        logp[ia, ib, id_, ic] = self((a, b, d, lc))
        top = logp.max()
        if not math.isfinite(top):
            raise ValueError("empty support: every lattice node is outside "
                             "the prior")
        p = np.exp(logp - top)
        return p / p.sum()
