import numpy as np
import pytest

from faultinv.forward import (ForwardMatrix, assemble, load_matrix_dump,
                              predict, predict_slip_callable, scale_data)
from faultinv.geometry import (AdmissibleSet, DEFAULT_R, DEFAULT_V,
                               FaultGeometry, SlipBasis)
from faultinv.green import ElasticModel
from faultinv.quadrature import FaultQuadrature, gauss_stations

M_TRUE = FaultGeometry(-0.12, -0.26, -14.0)


@pytest.fixture(scope="module")
def small_problem():
    basis = SlipBasis(4, DEFAULT_R)
    stations = gauss_stations(2, DEFAULT_V)
    rule = FaultQuadrature.for_basis(basis)
    fwd = assemble(M_TRUE, basis, stations, rule)
    return basis, stations, rule, fwd


class TestAssemble:
    def test_shape(self, small_problem):
        basis, stations, rule, fwd = small_problem
        assert fwd.shape == (3 * stations.n_stations, basis.dim)

    def test_row_ordering(self, small_problem):
        """Rows 3j..3j+2 hold the components of station j: moving one
        station must change exactly its own three rows."""
        basis, stations, rule, fwd = small_problem
        pts = stations.points.copy()
        pts[1, :2] += 7.0
        moved = type(stations)(pts, stations.weights, stations.V, stations.mode)
        fwd2 = assemble(M_TRUE, basis, moved, rule)
        diff = np.abs(fwd.matrix - fwd2.matrix).sum(axis=1)
        changed = diff > 1e-14
        assert changed.tolist() == [False, False, False, True, True, True,
                                    False, False, False, False, False, False]

    def test_linear_in_coeffs(self, small_problem):
        basis, stations, rule, fwd = small_problem
        rng = np.random.default_rng(0)
        a, b = rng.standard_normal((2, basis.dim))
        assert np.allclose(fwd.apply(2 * a - 3 * b),
                           2 * fwd.apply(a) - 3 * fwd.apply(b), rtol=1e-12)

    def test_doubling_self_check_passes(self, small_problem):
        basis, stations, rule, _ = small_problem
        assert rule.order >= 16
        assemble(M_TRUE, basis, stations, rule, self_check_tol=1e-10)

    def test_doubling_self_check_fails_when_underresolved(self, small_problem):
        basis, stations, _, _ = small_problem
        coarse = FaultQuadrature.for_rect(2, DEFAULT_R)
        with pytest.raises(ValueError, match="under-resolved"):
            assemble(M_TRUE, basis, stations, coarse, self_check_tol=1e-10)

    def test_admissibility_rejection(self, small_problem):
        basis, stations, rule, _ = small_problem
        adm = AdmissibleSet()
        bad = FaultGeometry(1.0, 1.0, -2.0)
        assert not adm.contains(bad)
        with pytest.raises(ValueError, match="admissible"):
            assemble(bad, basis, stations, rule, admissible=adm)

    def test_entry_converges_with_fault_order(self, small_problem):
        """A single matrix entry settles as the fault rule order doubles."""
        basis, stations, _, _ = small_problem
        vals = [assemble(M_TRUE, basis, stations,
                         FaultQuadrature.for_rect(n, DEFAULT_R)).matrix[0, 0]
                for n in (6, 12, 24, 48)]
        errs = [abs(v - vals[-1]) for v in vals[:-1]]
        assert errs[1] < errs[0]
        assert errs[2] < 1e-10 * abs(vals[-1])


class TestScaleData:
    def test_weighted_flatten(self, small_problem):
        _, stations, _, _ = small_problem
        data = np.arange(stations.n_stations * 3, dtype=float).reshape(-1, 3)
        v = scale_data(data, stations)
        assert v.shape == (3 * stations.n_stations,)
        j = 1
        assert v[3 * j:3 * j + 3] == pytest.approx(
            np.sqrt(stations.weights[j]) * data[j])

    def test_shape_check(self, small_problem):
        _, stations, _, _ = small_problem
        with pytest.raises(ValueError):
            scale_data(np.zeros((2, 3)), stations)

    def test_consistent_with_matrix_weighting(self, small_problem):
        """scale_data(unweighted(g)) recovers the weighted product A g."""
        basis, stations, rule, fwd = small_problem
        g = np.linspace(-1, 1, basis.dim)
        assert np.allclose(scale_data(fwd.unweighted(g), stations),
                           fwd.apply(g), rtol=1e-12)


class TestPredict:
    def test_matches_unweighted_matrix_product(self, small_problem):
        basis, stations, rule, fwd = small_problem
        g = np.linspace(0.1, 0.9, basis.dim)
        u = predict(M_TRUE, basis, g, stations, rule)
        assert u.shape == (stations.n_stations, 3)
        assert np.allclose(u, fwd.unweighted(g), rtol=1e-12)

    def test_wrong_coeff_count(self, small_problem):
        basis, stations, rule, _ = small_problem
        with pytest.raises(ValueError):
            predict(M_TRUE, basis, np.zeros(basis.dim + 1), stations, rule)

    def test_slip_callable_agrees_with_projection_limit(self, small_problem):
        """predict on projected coefficients approaches the callable path
        as the basis grows."""
        _, stations, _, _ = small_problem

        def slip(pts):
            s1 = np.sin(np.pi * (pts[:, 0] - DEFAULT_R.x1min) / 40.0)
            s2 = np.sin(np.pi * (pts[:, 1] - DEFAULT_R.x2min) / 40.0)
            return s1 ** 3 * s2 ** 5

        rule = FaultQuadrature.for_rect(40, DEFAULT_R)
        u_ref = predict_slip_callable(M_TRUE, slip, stations, rule)
        errs = []
        for p in (3, 9):
            basis = SlipBasis(p, DEFAULT_R)
            g = basis.project(slip)
            errs.append(np.abs(predict(M_TRUE, basis, g, stations, rule)
                               - u_ref).max())
        assert errs[1] < errs[0]
        assert errs[1] < 1e-8 * np.abs(u_ref).max()


class TestDump:
    def test_binary_roundtrip(self, small_problem, tmp_path):
        _, _, _, fwd = small_problem
        path = tmp_path / "A.bin"
        fwd.dump(path)
        got = load_matrix_dump(path)
        assert np.array_equal(got, fwd.matrix)
        raw = path.read_bytes()
        assert len(raw) == 8 + 8 * fwd.matrix.size
        assert int.from_bytes(raw[:4], "little") == fwd.matrix.shape[0]
        assert int.from_bytes(raw[4:8], "little") == fwd.matrix.shape[1]

    def test_nonfinite_rejected(self, small_problem):
        basis, stations, _, fwd = small_problem
        bad = fwd.matrix.copy()
        bad[0, 0] = np.nan
        with pytest.raises(ValueError):
            ForwardMatrix(bad, M_TRUE, basis, stations)
