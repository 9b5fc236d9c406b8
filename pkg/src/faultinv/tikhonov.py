"""Regularized least-squares slip recovery and the profiled noise variance.

The basis is H1_0-orthonormal, so the regularizer is the identity on
coefficients and the minimizer is computed in data space:
g_min = A' (A A' + C I)^-1 u_hat  with one SPD factorization of size 3 M_N.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .forward import ForwardMatrix, assemble, scale_data
from .quadrature import FaultQuadrature

_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class RegularizedSolution:
    coeffs: np.ndarray    # g_min in the orthonormal basis
    misfit: float         # sum_j C'_j |A g - u~|^2 (P_j)
    reg_norm2: float      # ||g_min||^2 = sum coeffs^2
    C: float

    @property
    def objective(self) -> float:
        return self.misfit + self.C * self.reg_norm2


def solve_gmin(fwd, data_scaled, C: float, check_residual=True) -> RegularizedSolution:
    """Minimize ||A g - u_hat||^2 + C ||g||^2 over the basis coefficients."""
    if not C > 0:
        raise ValueError(f"regularization constant must be positive, got {C}")
    A = fwd.matrix if isinstance(fwd, ForwardMatrix) else np.asarray(fwd, float)
    u = np.asarray(data_scaled, float)
    K = A @ A.T
    try:
        f = cho_factor(K + C * np.eye(len(K)), lower=True)
    except np.linalg.LinAlgError as exc:
        raise ValueError("factorization failed; non-finite operator entries?") from exc
    w = cho_solve(f, u)
    g = A.T @ w
    r = A @ g - u
    sol = RegularizedSolution(g, float(r @ r), float(g @ g), float(C))
    if check_residual:
        lhs = A.T @ (A @ g) + C * g
        rhs = A.T @ u
        scale = np.linalg.norm(rhs)
        if scale > 0 and np.linalg.norm(lhs - rhs) > _RESIDUAL_TOL * scale:
            raise RuntimeError("normal-equation residual exceeds tolerance")
    return sol


def f_disc(m, C, data, basis, stations, rule=None, elastic=None, admissible=None) -> float:
    """Value of the discrete regularized functional at its minimizer."""
    from .green import ElasticModel
    rule = rule or FaultQuadrature.for_basis(basis)
    fwd = assemble(m, basis, stations, rule, elastic or ElasticModel(),
                   admissible=admissible)
    sol = solve_gmin(fwd, scale_data(data, stations), C)
    return sol.objective


def sigma_max2(C: float, sol: RegularizedSolution, M_N: int) -> float:
    """Profiled noise variance (C ||g_min||^2 + F(g_min)) / (3 M_N).

    The C ||g_min||^2 term is added on top of the objective, which already
    contains it; this matches the marginalized-density formula used by
    log_posterior.  Pass ml_variant=... there for the plain F/(3 M_N) form.
    """
    if M_N < 1:
        raise ValueError("M_N must be >= 1")
    return (C * sol.reg_norm2 + sol.objective) / (3.0 * M_N)
