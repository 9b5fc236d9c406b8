import numpy as np
import pytest

from faultinv.forward import assemble, scale_data
from faultinv.geometry import DEFAULT_R, DEFAULT_V, FaultGeometry, SlipBasis
from faultinv.quadrature import FaultQuadrature, gauss_stations
from faultinv.tikhonov import RegularizedSolution, f_disc, sigma_max2, solve_gmin

M_TRUE = FaultGeometry(-0.12, -0.26, -14.0)


def random_system(rng, rows=12, cols=30):
    A = rng.standard_normal((rows, cols))
    u = rng.standard_normal(rows)
    return A, u


class TestSolveGmin:
    @pytest.mark.parametrize("seed", range(5))
    def test_normal_equation_residual(self, seed):
        """(A'A + C I) g = A' u  to 1e-10 relative, randomized."""
        rng = np.random.default_rng(seed)
        A, u = random_system(rng)
        for C in (1e-8, 1e-4, 1.0):
            sol = solve_gmin(A, u, C)
            lhs = A.T @ (A @ sol.coeffs) + C * sol.coeffs
            rhs = A.T @ u
            assert np.linalg.norm(lhs - rhs) <= 1e-10 * np.linalg.norm(rhs)

    @pytest.mark.parametrize("seed", range(3))
    def test_primal_dual_equivalence(self, seed):
        """Data-space solve equals the direct coefficient-space solve
        (A'A + C I)^-1 A' u to 1e-10 for small systems."""
        rng = np.random.default_rng(100 + seed)
        A, u = random_system(rng, rows=18, cols=25)
        C = 10.0 ** rng.uniform(-6, 0)
        sol = solve_gmin(A, u, C)
        direct = np.linalg.solve(A.T @ A + C * np.eye(A.shape[1]), A.T @ u)
        assert np.linalg.norm(sol.coeffs - direct) <= \
            1e-10 * max(np.linalg.norm(direct), 1.0)

    def test_scalar_closed_form(self):
        # 1x1 system a g = u: g_min = a u / (a^2 + C)
        a, u, C = 2.0, 3.0, 0.5
        sol = solve_gmin(np.array([[a]]), np.array([u]), C)
        g = a * u / (a * a + C)
        assert sol.coeffs[0] == pytest.approx(g, rel=1e-14)
        assert sol.misfit == pytest.approx((a * g - u) ** 2, rel=1e-12)
        assert sol.reg_norm2 == pytest.approx(g * g, rel=1e-14)
        assert sol.objective == pytest.approx(sol.misfit + C * g * g, rel=1e-12)

    def test_invalid_C(self):
        rng = np.random.default_rng(0)
        A, u = random_system(rng)
        for C in (0.0, -1.0):
            with pytest.raises(ValueError):
                solve_gmin(A, u, C)

    def test_nonfinite_operator(self):
        A = np.full((2, 3), np.nan)
        with pytest.raises(ValueError):
            solve_gmin(A, np.zeros(2), 1e-4)

    def test_objective_minimality(self):
        """Perturbing g_min never lowers the objective."""
        rng = np.random.default_rng(7)
        A, u = random_system(rng)
        C = 1e-3
        sol = solve_gmin(A, u, C)

        def obj(g):
            r = A @ g - u
            return float(r @ r + C * g @ g)

        base = obj(sol.coeffs)
        for _ in range(20):
            g = sol.coeffs + 1e-4 * rng.standard_normal(len(sol.coeffs))
            assert obj(g) >= base - 1e-12 * abs(base)


@pytest.fixture(scope="module")
def problem():
    basis = SlipBasis(5, DEFAULT_R)
    stations = gauss_stations(2, DEFAULT_V)
    rule = FaultQuadrature.for_basis(basis)
    fwd = assemble(M_TRUE, basis, stations, rule)
    rng = np.random.default_rng(3)
    data = 1e-3 * rng.standard_normal((stations.n_stations, 3))
    return basis, stations, rule, fwd, data


class TestFDisc:
    def test_monotone_in_C(self, problem):
        basis, stations, rule, fwd, data = problem
        u = scale_data(data, stations)
        Cs = 10.0 ** np.arange(-8.0, 1.0)
        vals = [solve_gmin(fwd, u, C).objective for C in Cs]
        assert all(v1 > v0 for v0, v1 in zip(vals, vals[1:]))

    def test_f_disc_matches_manual_pipeline(self, problem):
        basis, stations, rule, fwd, data = problem
        C = 1e-4
        manual = solve_gmin(fwd, scale_data(data, stations), C).objective
        assert f_disc(M_TRUE, C, data, basis, stations, rule=rule) == \
            pytest.approx(manual, rel=1e-12)

    def test_bounded_by_data_norm(self, problem):
        # g = 0 is feasible, so F <= ||u_hat||^2
        basis, stations, rule, fwd, data = problem
        u = scale_data(data, stations)
        assert solve_gmin(fwd, u, 1e-5).objective <= float(u @ u) * (1 + 1e-12)


class TestSigmaMax2:
    def test_formula(self):
        sol = RegularizedSolution(np.array([2.0, 1.0]), 0.3, 5.0, 0.01)
        # (C ||g||^2 + objective) / (3 M): objective already holds one C||g||^2
        M = 4
        expect = (0.01 * 5.0 + (0.3 + 0.01 * 5.0)) / 12.0
        assert sigma_max2(0.01, sol, M) == pytest.approx(expect, rel=1e-14)

    def test_invalid_M(self):
        sol = RegularizedSolution(np.zeros(1), 0.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            sigma_max2(1.0, sol, 0)
