"""Half-space dislocation Green kernel: displacement and stress of a point
slip source under a traction-free surface.

Coordinates are in km with the solid occupying x3 < 0.  The kernel has units
1/km^2: integrating it against a slip magnitude (m) over fault area (km^2)
gives displacement in meters.
"""
from dataclasses import dataclass

import numpy as np

from . import _halfspace_kernel as _hk

_COINCIDENT_TOL = 1e-9
_BATCH_LIMIT = 150_000   # max receiver-source pairs per kernel call


@dataclass(frozen=True)
class ElasticModel:
    """Isotropic Lame parameters; only their ratio enters the kernel."""
    lam: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError(f"lambda must be > 0, got {self.lam}")
        if not self.mu > 0:
            raise ValueError(f"mu must be > 0, got {self.mu}")
        if not self.lam + self.mu > 0:
            raise ValueError("lambda + mu must be > 0")


@dataclass(frozen=True)
class PointDislocation:
    source: np.ndarray
    normal: np.ndarray
    burgers_dir: np.ndarray
    magnitude: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "source", np.asarray(self.source, float))
        object.__setattr__(self, "normal", np.asarray(self.normal, float))
        object.__setattr__(self, "burgers_dir", np.asarray(self.burgers_dir, float))
        if self.source.shape != (3,):
            raise ValueError("source must be a 3-vector")
        if self.source[2] >= 0:
            raise ValueError("dislocation source must lie strictly below the surface")
        for name in ("normal", "burgers_dir"):
            v = getattr(self, name)
            if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > 1e-12:
                raise ValueError(f"{name} must be a unit 3-vector")
        if abs(float(self.normal @ self.burgers_dir)) > 1e-12:
            raise ValueError("burgers_dir must be tangent to the plane (normal . b = 0)")


def moment_tensor(disloc: PointDislocation, elastic: ElasticModel) -> np.ndarray:
    """Moment density per unit fault area for unit shear modulus scaling."""
    b = disloc.magnitude * disloc.burgers_dir
    n = disloc.normal
    m = elastic.lam * (b @ n) * np.eye(3) + elastic.mu * (np.outer(b, n) + np.outer(n, b))
    return m


def _check_points(receiver, source, allow_surface=True):
    receiver = np.asarray(receiver, float)
    if receiver.shape != (3,):
        raise ValueError("receiver must be a 3-vector")
    if allow_surface:
        if receiver[2] > 0:
            raise ValueError("receiver must satisfy x3 <= 0")
    elif receiver[2] >= 0:
        raise ValueError("receiver must satisfy x3 < 0")
    if np.linalg.norm(receiver - source) < _COINCIDENT_TOL:
        raise ValueError("receiver coincides with the dislocation source")
    return receiver


def green_displacement(receiver, disloc: PointDislocation,
                       elastic: ElasticModel = ElasticModel()) -> np.ndarray:
    """Displacement kernel H(receiver, source, n) . b times the slip magnitude."""
    receiver = _check_points(receiver, disloc.source)
    m = moment_tensor(disloc, elastic)
    u = _hk.moment_displacement(
        receiver[0], receiver[1], receiver[2],
        disloc.source[0], disloc.source[1], disloc.source[2],
        m[0, 0], m[1, 1], m[2, 2], m[0, 1], m[0, 2], m[1, 2],
        elastic.lam, elastic.mu)
    return np.array(u, float)


def green_stress(receiver, disloc: PointDislocation,
                 elastic: ElasticModel = ElasticModel()) -> np.ndarray:
    """Stress kernel (symmetric 3x3) of the dislocation displacement field."""
    receiver = _check_points(receiver, disloc.source, allow_surface=False)
    m = moment_tensor(disloc, elastic)
    g = _hk.moment_displacement_gradient(
        receiver[0], receiver[1], receiver[2],
        disloc.source[0], disloc.source[1], disloc.source[2],
        m[0, 0], m[1, 1], m[2, 2], m[0, 1], m[0, 2], m[1, 2],
        elastic.lam, elastic.mu)
    grad = np.array(g, float).reshape(3, 3)
    strain = 0.5 * (grad + grad.T)
    return elastic.lam * np.trace(strain) * np.eye(3) + 2 * elastic.mu * strain


def kernel_displacement(receivers, sources, normal, burgers_dir,
                        elastic: ElasticModel, magnitude: float = 1.0) -> np.ndarray:
    """Vectorized kernel for operator assembly.

    receivers: (N,3) with x3 <= 0, sources: (Q,3) with x3 < 0, shared plane
    normal and slip direction.  Returns (N, Q, 3) displacement components.
    """
    receivers = np.asarray(receivers, float)
    sources = np.asarray(sources, float)
    b = magnitude * np.asarray(burgers_dir, float)
    n = np.asarray(normal, float)
    m = elastic.lam * (b @ n) * np.eye(3) + elastic.mu * (np.outer(b, n) + np.outer(n, b))
    N, Q = len(receivers), len(sources)
    out = np.empty((N, Q, 3))
    # the generated kernel holds many temporaries of the batch shape, so cap
    # the batch size to keep peak memory bounded
    block = max(1, _BATCH_LIMIT // max(Q, 1))
    Y = sources[None, :, :]
    for lo in range(0, N, block):
        X = receivers[lo:lo + block, None, :]
        u1, u2, u3 = _hk.moment_displacement(
            X[..., 0], X[..., 1], X[..., 2], Y[..., 0], Y[..., 1], Y[..., 2],
            m[0, 0], m[1, 1], m[2, 2], m[0, 1], m[0, 2], m[1, 2],
            elastic.lam, elastic.mu)
        out[lo:lo + block] = np.stack(np.broadcast_arrays(u1, u2, u3), axis=-1)
    return out
