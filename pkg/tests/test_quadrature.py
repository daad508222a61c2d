import numpy as np
import pytest

from fermicav.bogoliubov import first_order_entry, second_order_entry
from fermicav.errors import QuadratureError
from fermicav.geometry import MINKOWSKI, RINDLER, CavityGeometry
from fermicav.quadrature import (exact_coefficient, exact_column, mode_norm,
                                 overlap_from_components, panel_count)
from fermicav.utils import fit_power_law
from fermicav.validate import perturbative_residual


def test_panel_count():
    geom = CavityGeometry.from_delta_h(1.0, 0.1)
    assert panel_count(geom, 0, 0) == 8
    assert panel_count(geom, 40, 40) > panel_count(geom, 4, 4)


def test_modes_are_normalised():
    geom = CavityGeometry.from_delta_h(1.0, 0.2, 0.25)
    for frame in (MINKOWSKI, RINDLER):
        for n in (-2, 0, 3):
            assert mode_norm(geom, n, frame) == pytest.approx(1.0, abs=1e-9)


def test_exact_coefficient_near_perturbative():
    h = 0.01
    geom = CavityGeometry.from_delta_h(1.0, h, 0.25)
    for m, n in ((1, 0), (2, 1), (1, 1), (2, 0)):
        series = float(m == n) + h * first_order_entry(m, n, 0.25) \
            + h * h * second_order_entry(m, n, 0.25)
        assert abs(exact_coefficient(geom, m, n) - series) < 1e-5


def test_residual_order():
    hs = (0.02, 0.01, 0.005)
    for s in (0.0, 0.25):
        residuals = [perturbative_residual(
            CavityGeometry.from_delta_h(1.0, h, s), 1, 0) for h in hs]
        p, _ = fit_power_law(hs, residuals)
        assert p >= 2.7


def test_boundary_phase_drops_out():
    reference = exact_coefficient(CavityGeometry.from_delta_h(1.0, 0.1), 2, 1)
    for theta in (0.0, 1.0, 2.5):
        geom = CavityGeometry.from_delta_h(1.0, 0.1, 0.0, theta)
        assert exact_coefficient(geom, 2, 1) == reference
        assert overlap_from_components(geom, 2, 1) == pytest.approx(
            reference, abs=1e-9)


def test_exact_column():
    geom = CavityGeometry.from_delta_h(1.0, 0.05)
    column = exact_column(geom, 0, window=3)
    assert column.shape == (7,)
    assert column[3] == pytest.approx(exact_coefficient(geom, 0, 0))


def test_exact_column_is_unitary():
    for s in (0.0, 0.25):
        geom = CavityGeometry.from_delta_h(1.0, 0.1, s)
        column = exact_column(geom, 1, window=200)
        norm = float(np.sum(np.abs(column) ** 2))
        assert norm == pytest.approx(1.0, abs=1e-6)


def test_quadrature_errors():
    geom = CavityGeometry.from_delta_h(1.0, 0.1)
    with pytest.raises(ValueError):
        exact_coefficient(geom, 1, 0, eta_surface=0.5)
    with pytest.raises(QuadratureError) as e:
        exact_coefficient(geom, 1, 0, tolerance=1e-30, limit=1)
    assert e.value.target == 1e-30
    assert e.value.estimate > 1e-30
    assert "achieved error estimate" in str(e.value)


if __name__ == "__main__":
    test_modes_are_normalised()
    test_exact_coefficient_near_perturbative()
