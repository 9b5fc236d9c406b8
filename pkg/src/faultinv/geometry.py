"""Fault-plane parameterization, admissible set, and the slip basis.

The fault is the graph x3 = a x1 + b x2 + d over a rectangle R; slips live in
H1_0(R) and are discretized in a tensor sine basis orthonormalized in the
gradient (H1_0) inner product.
"""
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss


@dataclass(frozen=True)
class Rect:
    x1min: float
    x1max: float
    x2min: float
    x2max: float

    def __post_init__(self):
        if not (self.x1max > self.x1min and self.x2max > self.x2min):
            raise ValueError("degenerate rectangle")

    @property
    def lengths(self):
        return self.x1max - self.x1min, self.x2max - self.x2min

    @property
    def area(self):
        L1, L2 = self.lengths
        return L1 * L2

    def contains(self, pts, tol=0.0):
        pts = np.asarray(pts, float)
        return ((pts[..., 0] >= self.x1min - tol) & (pts[..., 0] <= self.x1max + tol)
                & (pts[..., 1] >= self.x2min - tol) & (pts[..., 1] <= self.x2max + tol))

    def gauss_nodes(self, n1, n2=None):
        """Tensor Gauss-Legendre nodes and weights on the rectangle."""
        n2 = n1 if n2 is None else n2
        x1, w1 = leggauss(n1)
        x2, w2 = leggauss(n2)
        a1 = 0.5 * (self.x1max - self.x1min)
        a2 = 0.5 * (self.x2max - self.x2min)
        g1 = self.x1min + a1 * (x1 + 1)
        g2 = self.x2min + a2 * (x2 + 1)
        P1, P2 = np.meshgrid(g1, g2, indexing="ij")
        W = np.outer(w1 * a1, w2 * a2)
        nodes = np.column_stack([P1.ravel(), P2.ravel()])
        return nodes, W.ravel()


class FaultGeometry:
    """m = (a, b, d): slopes and depth intercept of the fault plane."""

    def __init__(self, a, b, d):
        self.a = float(a)
        self.b = float(b)
        self.d = float(d)

    @property
    def m(self):
        return np.array([self.a, self.b, self.d])

    @property
    def surface_element(self):
        return np.sqrt(1.0 + self.a**2 + self.b**2)

    @property
    def normal(self):
        return np.array([-self.a, -self.b, 1.0]) / self.surface_element

    def depth_at(self, points):
        points = np.asarray(points, float)
        return self.a * points[..., 0] + self.b * points[..., 1] + self.d

    def lift(self, points):
        """Map (y1, y2) in R to 3-d points on the fault plane."""
        points = np.asarray(points, float)
        return np.column_stack([points[..., 0], points[..., 1], self.depth_at(points)])

    def slip_direction(self, fallback=None):
        """Unit tangent of steepest descent; undefined for a horizontal plane."""
        a, b = self.a, self.b
        s2 = a * a + b * b
        if s2 == 0.0:
            if fallback is None:
                raise ValueError("slip direction undefined for a horizontal plane "
                                 "(a = b = 0); pass an explicit fallback direction")
            t = np.asarray(fallback, float)
            return t / np.linalg.norm(t)
        t = np.array([-a, -b, -s2])
        return t / np.linalg.norm(t)

    def __repr__(self):
        return f"FaultGeometry(a={self.a}, b={self.b}, d={self.d})"


DEFAULT_R = Rect(-20.0, 20.0, -20.0, 20.0)
DEFAULT_V = Rect(-50.0, 50.0, -50.0, 50.0)


@dataclass(frozen=True)
class AdmissibleSet:
    """Box prior support for m intersected with the depth constraint."""
    a_bounds: tuple = (-1.0, 2.0)
    b_bounds: tuple = (-1.0, 2.0)
    d_bounds: tuple = (-100.0, -1.0)
    depth_margin: float = 1.0
    R: Rect = DEFAULT_R
    V: Rect = DEFAULT_V

    def contains(self, m) -> bool:
        a, b, d = (m.a, m.b, m.d) if isinstance(m, FaultGeometry) else m
        if not (self.a_bounds[0] <= a <= self.a_bounds[1]
                and self.b_bounds[0] <= b <= self.b_bounds[1]
                and self.d_bounds[0] <= d <= self.d_bounds[1]):
            return False
        return self.max_fault_depth((a, b, d)) <= -self.depth_margin

    def max_fault_depth(self, m) -> float:
        """Highest point of the fault plane over R (corner extremum)."""
        a, b, d = (m.a, m.b, m.d) if isinstance(m, FaultGeometry) else m
        corners = [(self.R.x1min, self.R.x2min), (self.R.x1min, self.R.x2max),
                   (self.R.x1max, self.R.x2min), (self.R.x1max, self.R.x2max)]
        return max(a * x1 + b * x2 + d for x1, x2 in corners)

    def uniform_draw(self, rng, max_attempts=10_000):
        """Uniform draw from the box, redrawn until admissible."""
        for _ in range(max_attempts):
            m = (rng.uniform(*self.a_bounds), rng.uniform(*self.b_bounds),
                 rng.uniform(*self.d_bounds))
            if self.contains(m):
                return FaultGeometry(*m)
        raise RuntimeError("no admissible point found in the prior box")


class SlipBasis:
    """Tensor sine modes on R, orthonormal in the H1_0 gradient inner product.

    phi_kl(y) = N_kl sin(k pi (y1-r1min)/L1) sin(l pi (y2-r2min)/L2),
    k, l = 1..p, with N_kl such that the gradient energy of each mode is 1.
    The H1_0 norm of a coefficient vector is then its Euclidean norm.
    """

    def __init__(self, p: int, R: Rect = DEFAULT_R):
        if p < 1:
            raise ValueError("p must be >= 1")
        self.p = int(p)
        self.R = R
        L1, L2 = R.lengths
        k = np.arange(1, p + 1)
        K, L = np.meshgrid(k, k, indexing="ij")
        self.k1 = K.ravel()          # mode index along y1, flat kl ordering
        self.k2 = L.ravel()
        self.freq2 = (self.k1 * np.pi / L1) ** 2 + (self.k2 * np.pi / L2) ** 2
        # gradient energy of the raw product mode = (L1 L2 / 4) * freq2
        self.norm = 2.0 / np.sqrt(L1 * L2 * self.freq2)

    @property
    def dim(self):
        return self.p * self.p

    def modes(self, points) -> np.ndarray:
        """(npoints, p^2) matrix of basis values."""
        points = np.atleast_2d(np.asarray(points, float))
        L1, L2 = self.R.lengths
        s1 = np.sin(np.outer((points[:, 0] - self.R.x1min) / L1, self.k1 * np.pi))
        s2 = np.sin(np.outer((points[:, 1] - self.R.x2min) / L2, self.k2 * np.pi))
        return self.norm * s1 * s2

    def evaluate(self, coeffs, points) -> np.ndarray:
        coeffs = np.asarray(coeffs, float)
        if coeffs.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} coefficients, got {coeffs.shape}")
        return self.modes(points) @ coeffs

    def project(self, slip, order=None) -> np.ndarray:
        """H1_0-orthogonal projection of a slip callable onto the basis.

        Uses c_kl = freq2_kl * int_R slip * phi_kl (integration by parts; valid
        for slips vanishing on the boundary of R), with a tensor Gauss rule.
        """
        order = order if order is not None else 2 * self.p + 8
        nodes, w = self.R.gauss_nodes(order)
        vals = np.asarray(slip(nodes), float)
        return self.freq2 * ((w * vals) @ self.modes(nodes))

    def h10_norm2(self, coeffs) -> float:
        coeffs = np.asarray(coeffs, float)
        return float(coeffs @ coeffs)
