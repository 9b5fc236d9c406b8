import numpy as np
import pytest

from faultinv.geometry import Rect, SlipBasis, DEFAULT_V
from faultinv.quadrature import (FaultQuadrature, StationSet, gauss_stations,
                                 load_station_csv, quad_exactness_defect,
                                 reference_stations,
                                 station_weights_from_layout)


class TestGaussStations:
    @pytest.mark.parametrize("n", [2, 3, 5, 7])
    def test_weights_positive_sum_and_bound(self, n):
        st = gauss_stations(n, DEFAULT_V)
        assert np.all(st.weights > 0)
        assert st.weights.sum() == pytest.approx(DEFAULT_V.area, rel=1e-12)
        assert np.all(st.weights <= 2 * DEFAULT_V.area / st.n_stations)

    @pytest.mark.parametrize("n,deg", [(2, 3), (3, 5), (4, 7), (5, 3), (7, 3)])
    def test_polynomial_exactness(self, n, deg):
        # single Gauss rule (n <= 4) is exact through degree 2n-1; composite
        # 2/3-point panels guarantee degree 3.  Closed-form monomial
        # integrals on V = [-50,50]^2 as the oracle.
        st = gauss_stations(n, DEFAULT_V)
        xy = st.points[:, :2]

        def mono_integral(k):
            return 0.0 if k % 2 else 2 * 50.0 ** (k + 1) / (k + 1)

        def abs_integral(k):
            return 2 * 50.0 ** (k + 1) / (k + 1)

        for i in range(deg + 1):
            for j in range(deg + 1 - i):
                exact = mono_integral(i) * mono_integral(j)
                scale = abs_integral(i) * abs_integral(j)
                approx = float(st.weights @ (xy[:, 0] ** i * xy[:, 1] ** j))
                assert abs(approx - exact) < 1e-12 * scale, (i, j)

    def test_validate_passes(self):
        gauss_stations(5, DEFAULT_V).validate(strict=True)

    def test_invalid_n(self):
        with pytest.raises(ValueError):
            gauss_stations(0, DEFAULT_V)


class TestStationSet:
    def test_rejects_subsurface_points(self):
        pts = np.array([[0.0, 0.0, -1.0]])
        with pytest.raises(ValueError):
            StationSet(pts, np.array([1.0]), DEFAULT_V, "fixed-stations")

    def test_rejects_nonpositive_weights(self):
        pts = np.array([[0.0, 0.0, 0.0]])
        with pytest.raises(ValueError):
            StationSet(pts, np.array([0.0]), DEFAULT_V, "fixed-stations")

    def test_validate_rejects_bad_sum(self):
        pts = np.array([[0.0, 0.0, 0.0]])
        st = StationSet(pts, np.array([1.0]), DEFAULT_V, "fixed-stations")
        with pytest.raises(ValueError):
            st.validate()


class TestVoronoiWeights:
    def test_single_station_gets_full_area(self):
        st = station_weights_from_layout(np.array([[3.0, -4.0]]), DEFAULT_V)
        assert st.weights[0] == pytest.approx(DEFAULT_V.area, rel=1e-12)

    def test_two_stations_split_by_bisector(self):
        V = Rect(-1, 1, -1, 1)
        st = station_weights_from_layout(np.array([[-0.5, 0.0], [0.5, 0.0]]), V)
        assert np.allclose(st.weights, [2.0, 2.0], rtol=1e-12)

    def test_symmetric_grid_weights_sum(self):
        g = np.linspace(-30, 30, 4)
        pts = np.array([[a, b] for a in g for b in g])
        st = station_weights_from_layout(pts, DEFAULT_V)
        assert st.weights.sum() == pytest.approx(DEFAULT_V.area, rel=1e-9)
        st.validate()

    def test_duplicate_stations_rejected(self):
        pts = np.array([[0.0, 0.0], [0.0, 0.0]])
        with pytest.raises(ValueError):
            station_weights_from_layout(pts, DEFAULT_V)

    def test_outside_V_rejected(self):
        with pytest.raises(ValueError):
            station_weights_from_layout(np.array([[60.0, 0.0]]), DEFAULT_V)

    def test_weight_bound_warning_emitted(self):
        # one far-corner station grabs most of V: bound 2|V|/M violated
        pts = np.array([[-45.0, -45.0], [-44.0, -45.0], [-45.0, -44.0],
                        [-44.0, -44.0], [49.0, 49.0]])
        st = station_weights_from_layout(pts, DEFAULT_V)
        assert not st.weight_bound_ok()
        with pytest.warns(UserWarning):
            st.validate()
        with pytest.raises(ValueError):
            st.validate(strict=True)


class TestStationCsv:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "st.csv"
        path.write_text("x1,x2\n1.0,2.0\n-3.0,4.0\n")
        st = load_station_csv(path, DEFAULT_V)
        assert st.n_stations == 2
        assert np.allclose(st.points[:, :2], [[1, 2], [-3, 4]])
        assert st.weights.sum() == pytest.approx(DEFAULT_V.area, rel=1e-9)

    def test_empty_rejected(self, tmp_path):
        path = tmp_path / "st.csv"
        path.write_text("x1,x2\n")
        with pytest.raises(ValueError):
            load_station_csv(path, DEFAULT_V)

    def test_packaged_layout(self):
        st = reference_stations()
        assert st.n_stations == 12
        # the scattered reference layout exceeds the Gauss weight estimate,
        # which non-strict validation reports as a warning, not an error
        with pytest.warns(UserWarning, match="M_N"):
            st.validate()


class TestFaultQuadrature:
    def test_for_basis_order(self):
        basis = SlipBasis(9)
        rule = FaultQuadrature.for_basis(basis)
        assert rule.order >= basis.p + 2

    def test_integrates_top_mode(self):
        # the most oscillatory basis mode integrates to its closed form
        basis = SlipBasis(6)
        rule = FaultQuadrature.for_basis(basis)
        top = np.zeros(basis.dim)
        top[-1] = 1.0
        got = rule.integrate(lambda pts: basis.evaluate(top, pts))
        L1, L2 = basis.R.lengths
        k = basis.k1[-1]
        # int sin(k pi s / L) over [0, L] with k even is 0, odd is 2L/(k pi)
        one_d = 0.0 if k % 2 == 0 else 2 * L1 / (k * np.pi)
        exact = basis.norm[-1] * one_d * one_d
        assert got == pytest.approx(exact, abs=1e-10)

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            FaultQuadrature.for_rect(0, DEFAULT_V)


class TestExactnessDefect:
    def test_decreasing_under_refinement(self):
        integrands = [lambda p: np.exp(-((p[:, 0] - 10) ** 2
                                         + p[:, 1] ** 2) / 800.0),
                      lambda p: np.cos(p[:, 0] / 20.0) * np.sin(p[:, 1] / 15.0)]
        defects = [quad_exactness_defect(gauss_stations(n, DEFAULT_V), integrands)
                   for n in (4, 8, 16, 32)]
        for d0, d1 in zip(defects, defects[1:]):
            assert d1 < d0 / 10
        assert defects[-1] < 1e-3
