"""Synthetic ground truth: bump slip on a chosen fault plane, fine-rule
forward data at the stations, and additive Gaussian noise.
"""
import csv
from dataclasses import dataclass, field

import numpy as np

from .forward import predict_slip_callable
from .geometry import AdmissibleSet, FaultGeometry, Rect, DEFAULT_R
from .green import ElasticModel
from .quadrature import FaultQuadrature, StationSet


@dataclass(frozen=True)
class BumpSpec:
    center: tuple = (0.0, 0.0)   # km, in fault-plane coordinates
    width: float = 10.0          # km, Gaussian scale
    amplitude: float = 1.0       # m
    taper_fraction: float = 0.1  # smoothstep ramp over the outer part of R

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError("bump width must be positive")
        if self.amplitude < 0:
            raise ValueError("bump amplitude must be nonnegative")
        if not 0 < self.taper_fraction < 0.5:
            raise ValueError("taper fraction must be in (0, 0.5)")


def _smoothstep(t):
    t = np.clip(t, 0.0, 1.0)
    return t * t * (3.0 - 2.0 * t)


def steepest_bump_slip(spec: BumpSpec, R: Rect = DEFAULT_R):
    """Gaussian bump times a boundary taper vanishing on the edge of R.

    Returns a callable slip(points2d) -> magnitudes (m); the slip direction is
    the plane's steepest-descent tangent, handled by the forward operator.
    """
    c1, c2 = spec.center
    L1, L2 = R.lengths
    r1, r2 = spec.taper_fraction * L1, spec.taper_fraction * L2

    def slip(points):
        points = np.atleast_2d(np.asarray(points, float))
        y1, y2 = points[..., 0], points[..., 1]
        bump = spec.amplitude * np.exp(
            -((y1 - c1) ** 2 + (y2 - c2) ** 2) / (2.0 * spec.width**2))
        taper = (_smoothstep((y1 - R.x1min) / r1) * _smoothstep((R.x1max - y1) / r1)
                 * _smoothstep((y2 - R.x2min) / r2) * _smoothstep((R.x2max - y2) / r2))
        return bump * taper

    return slip


@dataclass(frozen=True)
class SynthScenario:
    m_true: FaultGeometry = field(default_factory=lambda: FaultGeometry(-0.12, -0.26, -14.0))
    bump: BumpSpec = field(default_factory=BumpSpec)
    fine_order: int = 120        # per-axis Gauss order of the data rule
    noise_rel: float = 0.05      # sigma as a fraction of max |u|
    noise_seed: int = 1
    R: Rect = DEFAULT_R

    def __post_init__(self):
        if self.noise_rel < 0:
            raise ValueError("noise_rel must be nonnegative")
        if self.fine_order < 1:
            raise ValueError("fine_order must be >= 1")


def generate(scn: SynthScenario, stations: StationSet,
             elastic: ElasticModel = ElasticModel(),
             admissible: AdmissibleSet = None, inversion_order: int = None):
    """Clean and noisy station data for the scenario.

    Returns (clean (M,3), noisy (M,3), sigma).  The clean data comes from
    direct quadrature of the analytic bump slip on a fine rule, never from a
    basis expansion, so the inversion grid sees out-of-space data.
    """
    admissible = admissible or AdmissibleSet(R=scn.R, V=stations.V)
    if not admissible.contains(scn.m_true):
        raise ValueError(f"true geometry {scn.m_true} is not admissible")
    if inversion_order is not None and scn.fine_order < 4 * inversion_order:
        raise ValueError("fine rule must be at least 4x the inversion order")
    rule = FaultQuadrature.for_rect(scn.fine_order, scn.R)
    slip = steepest_bump_slip(scn.bump, scn.R)
    clean = predict_slip_callable(scn.m_true, slip, stations, rule, elastic)
    sigma = scn.noise_rel * float(np.max(np.abs(clean)))
    rng = np.random.default_rng(scn.noise_seed)
    noisy = clean + sigma * rng.standard_normal(clean.shape)
    return clean, noisy, sigma


def dump_data_csv(path, stations: StationSet, data):
    """Write station displacements as x1,x2,u1,u2,u3 (km, m)."""
    data = np.asarray(data, float)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x1", "x2", "u1", "u2", "u3"])
        for p, u in zip(stations.points, data):
            w.writerow([repr(float(p[0])), repr(float(p[1]))]
                       + [repr(float(v)) for v in u])


def load_data_csv(path):
    """Read a data CSV back as (points2d (M,2), displacements (M,3))."""
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"no data rows in {path}")
    pts = np.array([[float(r["x1"]), float(r["x2"])] for r in rows])
    u = np.array([[float(r["u1"]), float(r["u2"]), float(r["u3"])] for r in rows])
    return pts, u
