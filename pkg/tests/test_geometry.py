import math

import numpy as np
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from fermicav.geometry import (MINKOWSKI, RINDLER, CavityGeometry, ModeSpec,
                               cancelling_coast_duration, coast_period,
                               degradation_period, minkowski_frequency,
                               mode_components_at_t0, proper_time_from_u,
                               proper_time_from_v, rapidity_from_proper_time,
                               rindler_frequency, u_parameter, v_parameter)


def test_from_delta_h():
    geom = CavityGeometry.from_delta_h(1.0, 0.1)
    assert geom.a == pytest.approx(9.5)
    assert geom.b == pytest.approx(10.5)
    assert geom.delta == pytest.approx(1.0)
    assert geom.h == pytest.approx(0.1)
    assert geom.s == 0.0
    assert geom.theta == 0.0


def test_invalid_geometry():
    with pytest.raises(ValueError):
        CavityGeometry(0.0, 1.0)
    with pytest.raises(ValueError):
        CavityGeometry(2.0, 1.0)
    with pytest.raises(ValueError):
        CavityGeometry(1.0, float("nan"))
    with pytest.raises(ValueError):
        CavityGeometry(1.0, 2.0, s=1.0)
    with pytest.raises(ValueError):
        CavityGeometry(1.0, 2.0, theta=2 * math.pi)
    with pytest.raises(ValueError):
        CavityGeometry.from_delta_h(1.0, 2.0)
    with pytest.raises(ValueError):
        CavityGeometry.from_delta_h(-1.0, 0.1)


@seed(1)
@given(
    delta=st.floats(min_value=1e-3, max_value=1e3),
    h=st.floats(min_value=1e-8, max_value=1.5),
)
def test_log_ratio_matches_atanh(delta, h):
    geom = CavityGeometry.from_delta_h(delta, h)
    assert geom.log_ratio == pytest.approx(2 * math.atanh(geom.h / 2),
                                           rel=1e-13)


def test_frequencies():
    geom = CavityGeometry.from_delta_h(2.0, 0.1, s=0.25)
    assert minkowski_frequency(geom, 1) == pytest.approx(1.25 * math.pi / 2)
    assert rindler_frequency(geom, -3) == pytest.approx(
        -2.75 * math.pi / geom.log_ratio)
    zero = CavityGeometry.from_delta_h(2.0, 0.1)
    assert minkowski_frequency(zero, 0) == 0.0
    assert rindler_frequency(zero, 0) == 0.0


def test_mode_spec():
    geom = CavityGeometry.from_delta_h(1.0, 0.1, s=0.5)
    assert geom.mode_spec(2).charge == "+"
    assert geom.mode_spec(0).sign == 1
    assert ModeSpec(-1).charge == "-"
    assert ModeSpec(-1).sign == -1
    assert ModeSpec(np.int64(3)) == ModeSpec(3)
    assert ModeSpec(2).minkowski_frequency(geom) == \
        minkowski_frequency(geom, 2)
    with pytest.raises(TypeError):
        ModeSpec(1.5)
    with pytest.raises(TypeError):
        ModeSpec(True)


def test_periods_and_parameters():
    geom = CavityGeometry.from_delta_h(1.0, 0.1)
    assert degradation_period(geom) == pytest.approx(
        2 * geom.log_ratio / 0.1)
    assert coast_period(geom) == pytest.approx(2.0)
    tau1 = proper_time_from_u(geom, 0.3)
    assert u_parameter(geom, tau1) == pytest.approx(0.3)
    assert v_parameter(geom, proper_time_from_v(geom, 0.45)) == \
        pytest.approx(0.45)
    # phase of a full degradation period: eta / (2 ln(b/a)) = 1
    eta = rapidity_from_proper_time(geom, degradation_period(geom))
    assert eta / (2 * geom.log_ratio) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        rapidity_from_proper_time(geom, -1.0)
    with pytest.raises(ValueError):
        u_parameter(geom, -1.0)


def test_cancelling_coast_duration():
    geom = CavityGeometry.from_delta_h(1.0, 0.2)
    tau1 = proper_time_from_u(geom, 0.3)
    v = v_parameter(geom, cancelling_coast_duration(geom, tau1))
    assert v == pytest.approx(0.7)
    v = v_parameter(geom, cancelling_coast_duration(geom, tau1, 2))
    assert v == pytest.approx(2.7)
    with pytest.raises(ValueError):
        cancelling_coast_duration(geom, tau1, -1)


def test_mode_components_at_left_wall():
    geom = CavityGeometry.from_delta_h(1.0, 0.1, s=0.25, theta=1.0)
    plus, minus = mode_components_at_t0(geom, 2, geom.a, MINKOWSKI)
    assert plus == pytest.approx(1 / math.sqrt(2))
    assert minus == pytest.approx(np.exp(1j) / math.sqrt(2))
    plus, minus = mode_components_at_t0(geom, 2, geom.a, RINDLER)
    assert plus == pytest.approx(1 / math.sqrt(2 * geom.a * geom.log_ratio))
    assert abs(minus) == pytest.approx(abs(plus))


def test_mode_components_boundary_condition():
    # the components are related by the boundary phase at both walls
    geom = CavityGeometry.from_delta_h(1.0, 0.3, s=0.25, theta=2.0)
    for frame in (MINKOWSKI, RINDLER):
        plus, minus = mode_components_at_t0(geom, 3, geom.b, frame)
        ratio = minus / plus
        expected = np.exp(1j * (geom.theta - 2 * math.pi * 3.25))
        assert ratio == pytest.approx(expected)


def test_mode_components_arrays_and_errors():
    geom = CavityGeometry.from_delta_h(1.0, 0.1)
    z = np.linspace(geom.a, geom.b, 5)
    plus, minus = mode_components_at_t0(geom, 1, z)
    assert plus.shape == (5,)
    assert np.allclose(np.abs(plus), np.abs(minus))
    with pytest.raises(ValueError):
        mode_components_at_t0(geom, 1, geom.b + 1.0)
    with pytest.raises(ValueError):
        mode_components_at_t0(geom, 1, geom.a, "galilean")


if __name__ == "__main__":
    test_from_delta_h()
    test_periods_and_parameters()
    test_cancelling_coast_duration()
