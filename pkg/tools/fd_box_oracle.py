#!/usr/bin/env python3
"""Independent finite-difference oracle for the half-space dislocation kernel.

Computes the displacement at a surface receiver due to a point dislocation
(lambda = mu = 1, source (0,0,-1), normal e3, burgers e1) by solving the
elastostatic equations numerically, with no reference to the library code:

  u_half = u_full + w,

where u_full is the full-space (Kelvin) point-dislocation field, evaluated
from its classical closed form, and the smooth corrective field w solves

  mu Lap w + (lambda+mu) grad div w = 0     in the box [-L,L]^2 x [-L,0],
  sigma(w).e3 = -sigma(u_full).e3           on the top face x3 = 0,
  w = 0                                     on the other five faces.

The far-face truncation error decays like 1/L^2 relative to w.  The oracle
value at the receiver is printed for two grid spacings for a convergence
check; the frozen number goes into tests/test_green.py.

Usage: python3 tools/fd_box_oracle.py [L] [n_per_L ...]
"""
import sys

import numpy as np
import sympy as sp
from scipy.sparse import lil_matrix, csc_matrix
from scipy.sparse.linalg import LinearOperator, gcrotmk, spilu, spsolve

LAM = 1.0
MU = 1.0
SRC = (0.0, 0.0, -1.0)
RECEIVER = (1.0, 0.0, 0.0)


def full_space_field():
    """Closed-form full-space point-dislocation displacement and stress.

    Kelvin tensor G_ij(r) = [ (3-4nu) d_ij / r + r_i r_j / r^3 ] / (16 pi mu
    (1-nu)); dislocation field u_i = m_pq dG_ip/dy_q with the moment density
    m = lam (b.n) I + mu (b n^T + n b^T), b = e1, n = e3.
    """
    x1, x2, x3 = sp.symbols("x1 x2 x3", real=True)
    y1, y2, y3 = sp.symbols("y1 y2 y3", real=True)
    lam, mu = sp.Rational(LAM), sp.Rational(MU)
    nu = lam / (2 * (lam + mu))
    r = sp.Matrix([x1 - y1, x2 - y2, x3 - y3])
    rn = sp.sqrt(r.dot(r))
    pref = 1 / (16 * sp.pi * mu * (1 - nu))
    G = [[pref * ((3 - 4 * nu) * (1 if i == j else 0) / rn
                  + r[i] * r[j] / rn**3) for j in range(3)] for i in range(3)]
    m = sp.zeros(3)
    # b = e1, n = e3: m = mu (e1 e3^T + e3 e1^T)
    m[0, 2] = m[2, 0] = mu
    y = (y1, y2, y3)
    u = [sum(m[p, q] * sp.diff(G[i][p], y[q]) for p in range(3)
             for q in range(3)) for i in range(3)]
    u = [sp.simplify(ui.subs({y1: SRC[0], y2: SRC[1], y3: SRC[2]})) for ui in u]
    div = sum(sp.diff(u[i], v) for i, v in enumerate((x1, x2, x3)))
    sig = [[lam * div * (1 if i == j else 0)
            + mu * (sp.diff(u[i], (x1, x2, x3)[j])
                    + sp.diff(u[j], (x1, x2, x3)[i]))
            for j in range(3)] for i in range(3)]
    fu = sp.lambdify((x1, x2, x3), u, "numpy")
    ftr = sp.lambdify((x1, x2, x3), [sig[i][2] for i in range(3)], "numpy")
    return fu, ftr


def solve_corrective(L, n_per_L, traction_top):
    """FD solve for w on [-L,L]^2 x [-L,0]; returns grid and solution."""
    h = 1.0 / n_per_L
    nx = 2 * L * n_per_L + 1
    nz = L * n_per_L + 1
    xs = np.linspace(-L, L, nx)
    zs = np.linspace(-L, 0.0, nz)
    lam, mu = LAM, MU

    def idx(i, j, k, c):
        return ((i * nx + j) * nz + k) * 3 + c

    n_unknown = nx * nx * nz * 3
    A = lil_matrix((n_unknown, n_unknown))
    rhs = np.zeros(n_unknown)

    d2 = 1.0 / h**2
    dcross = 1.0 / (4 * h**2)

    for i in range(nx):
        for j in range(nx):
            for k in range(nz):
                interior_lateral = 0 < i < nx - 1 and 0 < j < nx - 1
                if not interior_lateral or k == 0:
                    # Dirichlet on sides and bottom
                    for c in range(3):
                        A[idx(i, j, k, c), idx(i, j, k, c)] = 1.0
                    continue
                if k == nz - 1:
                    # top face: traction sigma(w).e3 = rhs, one-sided d/dz
                    # (second order: f'(0) ~ (3f0 - 4f-1 + f-2) / (2h))
                    t = traction_top[:, i, j]

                    def dz(row, c, coef):
                        A[row, idx(i, j, k, c)] += coef * 3 / (2 * h)
                        A[row, idx(i, j, k - 1, c)] += coef * -4 / (2 * h)
                        A[row, idx(i, j, k - 2, c)] += coef * 1 / (2 * h)

                    def dx(row, c, coef):
                        A[row, idx(i + 1, j, k, c)] += coef / (2 * h)
                        A[row, idx(i - 1, j, k, c)] += -coef / (2 * h)

                    def dy(row, c, coef):
                        A[row, idx(i, j + 1, k, c)] += coef / (2 * h)
                        A[row, idx(i, j - 1, k, c)] += -coef / (2 * h)

                    r0 = idx(i, j, k, 0)       # sigma_13 = mu (dz w1 + dx w3)
                    dz(r0, 0, mu)
                    dx(r0, 2, mu)
                    rhs[r0] = t[0]
                    r1 = idx(i, j, k, 1)       # sigma_23 = mu (dz w2 + dy w3)
                    dz(r1, 1, mu)
                    dy(r1, 2, mu)
                    rhs[r1] = t[1]
                    r2 = idx(i, j, k, 2)       # sigma_33
                    dx(r2, 0, lam)
                    dy(r2, 1, lam)
                    dz(r2, 2, lam + 2 * mu)
                    rhs[r2] = t[2]
                    continue
                # interior: mu Lap w_c + (lam+mu) d_c (div w) = 0
                for c in range(3):
                    row = idx(i, j, k, c)
                    for (di, dj, dk) in ((1, 0, 0), (-1, 0, 0), (0, 1, 0),
                                         (0, -1, 0), (0, 0, 1), (0, 0, -1)):
                        A[row, idx(i + di, j + dj, k + dk, c)] += mu * d2
                    A[row, idx(i, j, k, c)] += -6 * mu * d2
                    # grad-div part: (lam+mu) d_c d_e w_e
                    lm = lam + mu
                    steps = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
                    sc = steps[c]
                    for e in range(3):
                        se = steps[e]
                        if e == c:
                            A[row, idx(i + sc[0], j + sc[1], k + sc[2], c)] += lm * d2
                            A[row, idx(i - sc[0], j - sc[1], k - sc[2], c)] += lm * d2
                            A[row, idx(i, j, k, c)] += -2 * lm * d2
                        else:
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    col = idx(i + s1 * sc[0] + s2 * se[0],
                                              j + s1 * sc[1] + s2 * se[1],
                                              k + s1 * sc[2] + s2 * se[2], e)
                                    A[row, col] += s1 * s2 * lm * dcross
    A = csc_matrix(A)
    w = spsolve(A, rhs)
    return xs, zs, w.reshape(nx, nx, nz, 3)


def solve_corrective_half(L, n_per_L, traction_top):
    """Half-domain solve exploiting the x2 -> -x2 mirror symmetry.

    For this source (b = e1, n = e3 in the x1-x3 plane) w1, w3 are even in
    x2 and w2 is odd.  The x2 grid is staggered at (j + 1/2) h for j >= 0, so
    the symmetry plane sits between nodes and ghost values at j = -1 map to
    j = 0 with a sign per component.  traction_top is sampled on that grid.
    Returns the full x1 grid, the staggered x2 grid, and w of shape
    (nx, nxh, nz, 3).
    """
    h = 1.0 / n_per_L
    nx = 2 * L * n_per_L + 1
    nxh = L * n_per_L            # x2 = (j + 1/2) h, j = 0..nxh-1
    nz = L * n_per_L + 1
    xs = np.linspace(-L, L, nx)
    ys = (np.arange(nxh) + 0.5) * h
    lam, mu = LAM, MU
    sign = (1.0, -1.0, 1.0)      # parity of (w1, w2, w3) under x2 -> -x2

    def idx(i, j, k, c):
        return ((i * nxh + j) * nz + k) * 3 + c

    n_unknown = nx * nxh * nz * 3
    A = lil_matrix((n_unknown, n_unknown))
    rhs = np.zeros(n_unknown)

    def add(row, i, j, k, c, coef):
        """Matrix entry with ghost reflection across the symmetry plane."""
        if j < 0:
            j = -1 - j
            coef = coef * sign[c]
        A[row, idx(i, j, k, c)] += coef

    d2 = 1.0 / h**2
    dcross = 1.0 / (4 * h**2)

    for i in range(nx):
        for j in range(nxh):
            for k in range(nz):
                if i == 0 or i == nx - 1 or j == nxh - 1 or k == 0:
                    for c in range(3):
                        A[idx(i, j, k, c), idx(i, j, k, c)] = 1.0
                    continue
                if k == nz - 1:
                    t = traction_top[:, i, j]

                    def dz(row, c, coef):
                        add(row, i, j, k, c, coef * 3 / (2 * h))
                        add(row, i, j, k - 1, c, coef * -4 / (2 * h))
                        add(row, i, j, k - 2, c, coef * 1 / (2 * h))

                    def dx(row, c, coef):
                        add(row, i + 1, j, k, c, coef / (2 * h))
                        add(row, i - 1, j, k, c, -coef / (2 * h))

                    def dy(row, c, coef):
                        add(row, i, j + 1, k, c, coef / (2 * h))
                        add(row, i, j - 1, k, c, -coef / (2 * h))

                    r0 = idx(i, j, k, 0)
                    dz(r0, 0, mu)
                    dx(r0, 2, mu)
                    rhs[r0] = t[0]
                    r1 = idx(i, j, k, 1)
                    dz(r1, 1, mu)
                    dy(r1, 2, mu)
                    rhs[r1] = t[1]
                    r2 = idx(i, j, k, 2)
                    dx(r2, 0, lam)
                    dy(r2, 1, lam)
                    dz(r2, 2, lam + 2 * mu)
                    rhs[r2] = t[2]
                    continue
                for c in range(3):
                    row = idx(i, j, k, c)
                    for (di, dj, dk) in ((1, 0, 0), (-1, 0, 0), (0, 1, 0),
                                         (0, -1, 0), (0, 0, 1), (0, 0, -1)):
                        add(row, i + di, j + dj, k + dk, c, mu * d2)
                    add(row, i, j, k, c, -6 * mu * d2)
                    lm = lam + mu
                    steps = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
                    sc = steps[c]
                    for e in range(3):
                        se = steps[e]
                        if e == c:
                            add(row, i + sc[0], j + sc[1], k + sc[2], c, lm * d2)
                            add(row, i - sc[0], j - sc[1], k - sc[2], c, lm * d2)
                            add(row, i, j, k, c, -2 * lm * d2)
                        else:
                            for s1 in (1, -1):
                                for s2 in (1, -1):
                                    add(row, i + s1 * sc[0] + s2 * se[0],
                                        j + s1 * sc[1] + s2 * se[1],
                                        k + s1 * sc[2] + s2 * se[2], e,
                                        s1 * s2 * lm * dcross)
    A = csc_matrix(A)
    w = spsolve(A, rhs)
    return xs, ys, w.reshape(nx, nxh, nz, 3)


def main():
    half = "--half" in sys.argv
    args = [a for a in sys.argv[1:] if a != "--half"]
    L = int(args[0]) if args else 6
    ns = [int(v) for v in args[1:]] or [2, 3]
    fu, ftr = full_space_field()
    ufull_rec = np.array(fu(*RECEIVER), float)
    print(f"full-space field at receiver {RECEIVER}: {ufull_rec}")
    for n_per_L in ns:
        nx = 2 * L * n_per_L + 1
        xs = np.linspace(-L, L, nx)
        if half:
            ys = (np.arange(L * n_per_L) + 0.5) / n_per_L
            X, Y = np.meshgrid(xs, ys, indexing="ij")
            traction = -np.array(ftr(X, Y, np.zeros_like(X)), float)
            xs_, ys_, w = solve_corrective_half(L, n_per_L, traction)
            ir = np.argmin(np.abs(xs_ - RECEIVER[0]))
            # even continuation to the symmetry plane: quadratic fit through
            # x2 = h/2 and 3h/2 gives w(0) = (9 w_0 - w_1) / 8
            w_rec = (9.0 * w[ir, 0, -1] - w[ir, 1, -1]) / 8.0
            w_rec[1] = 0.0
        else:
            X, Y = np.meshgrid(xs, xs, indexing="ij")
            traction = -np.array(ftr(X, Y, np.zeros_like(X)), float)
            xs_, zs, w = solve_corrective(L, n_per_L, traction)
            ir = np.argmin(np.abs(xs_ - RECEIVER[0]))
            jr = np.argmin(np.abs(xs_ - RECEIVER[1]))
            w_rec = w[ir, jr, -1]
        print(f"L={L} h={1/n_per_L:.4f}{' half' if half else ''}: "
              f"w = {w_rec}, u_half = {ufull_rec + w_rec}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
