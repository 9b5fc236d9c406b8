"""Quadrature rules: measurement stations with weights on the surface window V
and the fault-side rule over R used in operator assembly.
"""
import csv
import sys
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from shapely.geometry import box as shapely_box, Polygon

from .geometry import Rect


@dataclass(frozen=True)
class StationSet:
    """Surface points P_j (x3 = 0) with positive quadrature weights on V."""
    points: np.ndarray      # (M, 3)
    weights: np.ndarray     # (M,)
    V: Rect
    mode: str               # "gauss-tensor" | "fixed-stations"

    def __post_init__(self):
        object.__setattr__(self, "points", np.asarray(self.points, float))
        object.__setattr__(self, "weights", np.asarray(self.weights, float))
        if self.points.ndim != 2 or self.points.shape[1] != 3:
            raise ValueError("points must be (M, 3)")
        if np.any(self.points[:, 2] != 0.0):
            raise ValueError("stations must lie on the surface x3 = 0")
        if np.any(self.weights <= 0):
            raise ValueError("station weights must be positive")

    @property
    def n_stations(self):
        return len(self.weights)

    def weight_bound_ok(self) -> bool:
        """The estimate w_j <= 2|V|/M_N; guaranteed for Gauss-derived rules."""
        return bool(np.all(self.weights <= 2.0 * self.V.area / self.n_stations))

    def validate(self, strict=False):
        total = float(self.weights.sum())
        if abs(total - self.V.area) > 1e-10 * self.V.area:
            raise ValueError(f"weights sum to {total}, expected |V| = {self.V.area}")
        if not self.weight_bound_ok():
            msg = ("station weights violate the bound 2|V|/M_N "
                   f"(max {self.weights.max():.6g} > {2 * self.V.area / self.n_stations:.6g})")
            if strict:
                raise ValueError(msg)
            warnings.warn(msg, stacklevel=2)
            print(f"warning: {msg}", file=sys.stderr)


def _axis_panels(n):
    """Split a point count into Gauss panels of 3 and 2 points.

    A single Gauss-Legendre rule violates the tensor weight bound 2|V|/M_N
    for n >= 5 (its largest weight grows like pi/n per axis), while panels of
    at most 3 points keep the largest per-axis weight below sqrt(2) L/n.
    """
    if n <= 4:
        return [n]
    r = n % 3
    if r == 0:
        return [3] * (n // 3)
    if r == 1:
        return [3] * ((n - 4) // 3) + [2, 2]
    return [3] * (n // 3) + [2]


def _axis_rule(n, lo, hi):
    """Composite Gauss nodes/weights on [lo, hi] with the weight bound."""
    panels = _axis_panels(n)
    nodes, weights = [], []
    start = lo
    for m in panels:
        length = (hi - lo) * m / n
        x, w = leggauss(m)
        nodes.append(start + 0.5 * length * (x + 1.0))
        weights.append(0.5 * length * w)
        start += length
    return np.concatenate(nodes), np.concatenate(weights)


def gauss_stations(n_per_axis: int, V: Rect) -> StationSet:
    """Tensor Gauss-derived stations on V; M_N = n_per_axis^2.

    Single Gauss-Legendre rule per axis up to 4 points, composite panels of
    2-3 Gauss points beyond, so every weight satisfies C'(j,N) <= 2|V|/M_N.
    """
    if n_per_axis < 1:
        raise ValueError("n_per_axis must be >= 1")
    g1, w1 = _axis_rule(n_per_axis, V.x1min, V.x1max)
    g2, w2 = _axis_rule(n_per_axis, V.x2min, V.x2max)
    P1, P2 = np.meshgrid(g1, g2, indexing="ij")
    W = np.outer(w1, w2)
    pts = np.column_stack([P1.ravel(), P2.ravel(), np.zeros(n_per_axis**2)])
    return StationSet(pts, W.ravel(), V, "gauss-tensor")


def _voronoi_cell(i, pts, V: Rect) -> Polygon:
    """Voronoi cell of pts[i] clipped to V, by half-plane intersection."""
    cell = shapely_box(V.x1min, V.x2min, V.x1max, V.x2max)
    span = 10.0 * max(V.lengths)
    p = pts[i]
    for j, q in enumerate(pts):
        if j == i:
            continue
        mid = 0.5 * (p + q)
        d = q - p
        nrm = np.hypot(*d)
        d = d / nrm
        t = np.array([-d[1], d[0]])
        # rectangle covering the half plane closer to p
        poly = Polygon([mid + span * t, mid - span * t,
                        mid - span * t - span * d, mid + span * t - span * d])
        cell = cell.intersection(poly)
        if cell.is_empty:
            break
    return cell


def station_weights_from_layout(points, V: Rect) -> StationSet:
    """Weights from areas of the stations' Voronoi cells clipped to V."""
    pts = np.asarray(points, float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be (M, 2) surface coordinates")
    if not np.all(V.contains(pts)):
        raise ValueError("all stations must lie inside V")
    dists = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    np.fill_diagonal(dists, np.inf)
    if dists.min() < 1e-9:
        raise ValueError("duplicate station locations")
    areas = np.array([_voronoi_cell(i, pts, V).area for i in range(len(pts))])
    pts3 = np.column_stack([pts, np.zeros(len(pts))])
    return StationSet(pts3, areas, V, "fixed-stations")


def load_station_csv(path, V: Rect) -> StationSet:
    """Station layout from a CSV with columns x1,x2 (km)."""
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"no stations in {path}")
    pts = np.array([[float(r["x1"]), float(r["x2"])] for r in rows])
    return station_weights_from_layout(pts, V)


def reference_stations(V: Rect = None) -> StationSet:
    """Packaged 12-station layout mimicking an in-situ apparatus pattern."""
    from importlib.resources import files
    from .geometry import DEFAULT_V
    path = files("faultinv").joinpath("data/stations12.csv")
    return load_station_csv(str(path), V or DEFAULT_V)


@dataclass(frozen=True)
class FaultQuadrature:
    """Tensor Gauss-Legendre rule over the slip rectangle R."""
    nodes: np.ndarray     # (Q, 2)
    weights: np.ndarray   # (Q,)
    order: int
    R: Rect

    @classmethod
    def for_rect(cls, order: int, R: Rect) -> "FaultQuadrature":
        if order < 1:
            raise ValueError("order must be >= 1")
        nodes, w = R.gauss_nodes(order)
        return cls(nodes, w, order, R)

    @classmethod
    def for_basis(cls, basis, extra: int = 6, min_order: int = 16) -> "FaultQuadrature":
        """Rule resolving both the basis oscillation and the kernel variation.

        The kernel needs ~16 points per axis over R regardless of p (measured
        doubling discrepancy < 1e-12 at order 16 for smooth integrands);
        beyond that, p + extra tracks the basis oscillation (< 1e-8 doubling
        discrepancy at extra = 6 up to p = 27).
        """
        return cls.for_rect(max(basis.p + extra, min_order), basis.R)

    def integrate(self, f) -> float:
        return float(self.weights @ np.asarray(f(self.nodes), float))


def quad_exactness_defect(stations: StationSet, integrands, ref_n: int = 40) -> float:
    """Max deviation of the station rule from a fine reference rule on V.

    integrands: callables f(points2d) -> values; typically products of forward
    operator columns, for which the underlying theory assumes exactness.
    """
    ref = gauss_stations(ref_n, stations.V)
    worst = 0.0
    for f in integrands:
        approx = float(stations.weights @ np.asarray(f(stations.points[:, :2]), float))
        exact = float(ref.weights @ np.asarray(f(ref.points[:, :2]), float))
        worst = max(worst, abs(approx - exact))
    return worst
