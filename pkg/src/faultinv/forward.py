"""Discrete forward operator: slip coefficients -> weighted surface
displacements at the stations.
"""
import struct
from dataclasses import dataclass

import numpy as np

from .geometry import FaultGeometry, SlipBasis
from .green import ElasticModel, kernel_displacement
from .quadrature import FaultQuadrature, StationSet


@dataclass(frozen=True)
class ForwardMatrix:
    """Dense (3 M_N) x dim(basis) matrix; station rows scaled by sqrt(C'_j).

    Row ordering: the three displacement components of station j occupy rows
    3j, 3j+1, 3j+2.
    """
    matrix: np.ndarray
    m: FaultGeometry
    basis: SlipBasis
    stations: StationSet

    def __post_init__(self):
        if not np.all(np.isfinite(self.matrix)):
            raise ValueError("forward matrix contains non-finite entries")

    @property
    def shape(self):
        return self.matrix.shape

    def apply(self, coeffs) -> np.ndarray:
        """Weighted displacement vector (3 M_N,)."""
        return self.matrix @ np.asarray(coeffs, float)

    def unweighted(self, coeffs) -> np.ndarray:
        """Station displacements (M_N, 3) with the sqrt weights divided out."""
        u = self.apply(coeffs).reshape(-1, 3)
        return u / np.sqrt(self.stations.weights)[:, None]

    def dump(self, path):
        """Binary debug dump: little-endian u32 dims then row-major f64."""
        rows, cols = self.matrix.shape
        with open(path, "wb") as fh:
            fh.write(struct.pack("<II", rows, cols))
            fh.write(np.ascontiguousarray(self.matrix, "<f8").tobytes())


def load_matrix_dump(path) -> np.ndarray:
    with open(path, "rb") as fh:
        rows, cols = struct.unpack("<II", fh.read(8))
        data = np.frombuffer(fh.read(), "<f8")
    return data.reshape(rows, cols)


def scale_data(data, stations: StationSet) -> np.ndarray:
    """Flatten station displacements (M_N, 3) to the sqrt(C')-weighted vector."""
    data = np.asarray(data, float)
    if data.shape != (stations.n_stations, 3):
        raise ValueError(f"data must be ({stations.n_stations}, 3)")
    return (np.sqrt(stations.weights)[:, None] * data).ravel()


def _kernel_block(m: FaultGeometry, stations: StationSet, rule: FaultQuadrature,
                  elastic: ElasticModel) -> np.ndarray:
    """Quadrature-weighted kernel samples, shape (M_N, 3, Q)."""
    sources = m.lift(rule.nodes)
    K = kernel_displacement(stations.points, sources, m.normal,
                            m.slip_direction(), elastic)
    return np.transpose(K, (0, 2, 1)) * rule.weights


def assemble(m: FaultGeometry, basis: SlipBasis, stations: StationSet,
             rule: FaultQuadrature, elastic: ElasticModel = ElasticModel(),
             admissible=None, self_check_tol=None, modes=None) -> ForwardMatrix:
    """Build the weighted discrete forward operator at geometry m.

    Entry (3j+k, kl) = sqrt(C'_j) * s * sum_q w_q H_k(P_j, y_q) phi_kl(y_q),
    with s the fault surface element.  A doubling self-check of the fault rule
    is run when self_check_tol is given.  modes may carry a precomputed
    basis.modes(rule.nodes) — it only depends on the rule, not on m, so
    repeated evaluations at varying geometry can share it.
    """
    if admissible is not None and not admissible.contains(m):
        raise ValueError(f"geometry {m} outside the admissible set")
    phi = basis.modes(rule.nodes) if modes is None else modes
    KW = _kernel_block(m, stations, rule, elastic)
    A = m.surface_element * (KW.reshape(-1, len(rule.nodes)) @ phi)
    A *= np.repeat(np.sqrt(stations.weights), 3)[:, None]
    fwd = ForwardMatrix(A, m, basis, stations)
    if self_check_tol is not None:
        fine = FaultQuadrature.for_rect(2 * rule.order, rule.R)
        ref = assemble(m, basis, stations, fine, elastic)
        rel = (np.linalg.norm(fwd.matrix - ref.matrix)
               / max(np.linalg.norm(ref.matrix), 1e-300))
        if rel > self_check_tol:
            raise ValueError(f"fault quadrature under-resolved: doubling "
                             f"discrepancy {rel:.3e} > {self_check_tol:.3e}")
    return fwd


def predict(m: FaultGeometry, basis: SlipBasis, coeffs, stations: StationSet,
            rule: FaultQuadrature, elastic: ElasticModel = ElasticModel()) -> np.ndarray:
    """Unweighted displacement vectors (M_N, 3) at the stations, in meters."""
    coeffs = np.asarray(coeffs, float)
    if coeffs.shape != (basis.dim,):
        raise ValueError(f"expected {basis.dim} coefficients")
    phi_g = basis.modes(rule.nodes) @ coeffs
    KW = _kernel_block(m, stations, rule, ElasticModel(elastic.lam, elastic.mu))
    return m.surface_element * (KW @ phi_g)


def predict_slip_callable(m: FaultGeometry, slip, stations: StationSet,
                          rule: FaultQuadrature,
                          elastic: ElasticModel = ElasticModel()) -> np.ndarray:
    """Station displacements (M_N, 3) for an arbitrary slip(y1,y2) callable."""
    g = np.asarray(slip(rule.nodes), float)
    KW = _kernel_block(m, stations, rule, elastic)
    return m.surface_element * (KW @ g)
