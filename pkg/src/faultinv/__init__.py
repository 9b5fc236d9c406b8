"""Stochastic inversion of fault-plane geometry from surface displacements.

A planar fault buried in an elastic half space slips; the package assembles
the half-space dislocation kernel, a regularized forward operator on a sine
slip basis, the marginalized posterior over the plane parameters (a, b, d)
and the regularization constant C, and a parallel multiple-proposal
Metropolis sampler, plus synthetic-data generation and experiment drivers.
"""
from .geometry import (AdmissibleSet, FaultGeometry, Rect, SlipBasis,
                       DEFAULT_R, DEFAULT_V)
from .green import ElasticModel, PointDislocation, green_displacement, green_stress
from .quadrature import FaultQuadrature, StationSet, gauss_stations
from .forward import ForwardMatrix, assemble, predict, scale_data
from .tikhonov import RegularizedSolution, sigma_max2, solve_gmin
from .posterior import Posterior
from .sampler import PosteriorChain, SamplerConfig, marginal_histogram, run
from .synth import BumpSpec, SynthScenario, generate, steepest_bump_slip

__version__ = "0.1.0"

__all__ = [
    "AdmissibleSet", "BumpSpec", "ElasticModel", "FaultGeometry",
    "FaultQuadrature", "ForwardMatrix", "PointDislocation", "Posterior",
    "PosteriorChain", "Rect", "RegularizedSolution", "SamplerConfig",
    "SlipBasis", "StationSet", "SynthScenario", "DEFAULT_R", "DEFAULT_V",
    "assemble", "gauss_stations", "generate", "green_displacement",
    "green_stress", "marginal_histogram", "predict", "run", "scale_data",
    "sigma_max2", "solve_gmin", "steepest_bump_slip",
]
