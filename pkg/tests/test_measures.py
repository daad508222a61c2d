import logging
import math

import numpy as np
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from fermicav.bogoliubov import TravelScenario, first_order_entry
from fermicav.geometry import CavityGeometry
from fermicav.measures import (DegradationInputs, EntanglementReport,
                               alpha_parameter, chsh_from_u_matrix,
                               chsh_max_two_mode, fk_closed, fk_partial_sums,
                               fk_series, interference_term,
                               negativity_charge, negativity_two_mode,
                               oneway_fk, oneway_fk_series,
                               truncation_tail_bound, two_mode_u_matrix,
                               validity_flag)
from fermicav.polylog import ONE, UnitPhase

PEAK = math.pi ** 2 / 30 + 1 / 12
SQRT8 = 2 * math.sqrt(2)


def geometry(s=0.0, h=0.1):
    return CavityGeometry.from_delta_h(1.0, h, s)


def test_alpha_parameter():
    assert alpha_parameter(geometry(0.25), -1) == pytest.approx(-1.5)


def test_peak_value():
    half = UnitPhase.from_turns(0.5)
    assert fk_closed(geometry(), 1, half) == pytest.approx(PEAK, abs=1e-10)
    assert fk_closed(geometry(), -1, half) == pytest.approx(PEAK, abs=1e-10)
    assert fk_series(geometry(), 1, half, 10000) == pytest.approx(
        PEAK, abs=1e-6)


def test_endpoints_vanish():
    for s in (0.0, 0.25, 0.5, 0.75):
        for k in (1, -1):
            assert fk_closed(geometry(s), k, UnitPhase.from_turns(0.0)) == 0.0
            assert fk_closed(geometry(s), k, UnitPhase.from_turns(1.0)) == 0.0


def test_closed_form_matches_series():
    for s in (0.0, 0.25, 0.5, 0.75):
        for k in (1, -1, 2, -2):
            for u in (0.05, 0.3, 0.5, 0.81):
                E1 = UnitPhase.from_turns(u)
                assert abs(fk_closed(geometry(s), k, E1)
                           - fk_series(geometry(s), k, E1, 1000)) <= 1e-6


def test_monotone_in_alpha_squared():
    cases = sorted((alpha_parameter(geometry(s), k) ** 2, s, k)
                   for s in (0.0, 0.25, 0.5, 0.75) for k in range(-3, 4))
    for u in np.linspace(0.05, 0.95, 10):
        E1 = UnitPhase.from_turns(float(u))
        for (a2, s, k), (b2, t, j) in zip(cases, cases[1:]):
            fa = fk_closed(geometry(s), k, E1)
            fb = fk_closed(geometry(t), j, E1)
            if b2 > a2:
                assert fb > fa
            else:
                assert fb == pytest.approx(fa, abs=1e-13)


def test_closed_forms_non_negative():
    us = [0.0, 1e-9, 1e-6, 1e-3, 0.25, 0.5, 0.999999, 1.0 - 1e-9]
    for s in (0.0, 0.5):
        geom = geometry(s)
        for k in (2, 1, 0, -1, -2):
            for u in us:
                E1 = UnitPhase.from_turns(u)
                assert fk_closed(geom, k, E1) >= -1e-15
                for v in us:
                    E2 = UnitPhase.from_turns(v)
                    assert oneway_fk(geom, k, E1, E2) >= -1e-14


def test_boundary_offset_ordering():
    for u in np.linspace(0.05, 0.95, 19):
        E1 = UnitPhase.from_turns(float(u))
        base = fk_closed(geometry(), 1, E1)
        for s in (0.25, 0.5, 0.75):
            assert fk_closed(geometry(s), 1, E1) > base > \
                fk_closed(geometry(s), -1, E1)


@seed(1)
@given(u=st.floats(min_value=0.0, max_value=1.0))
def test_closed_form_symmetric_in_period(u):
    geom = geometry(0.25)
    assert fk_closed(geom, 1, UnitPhase.from_turns(u)) == pytest.approx(
        fk_closed(geom, 1, UnitPhase.from_turns(1.0 - u)), abs=1e-13)


def test_partial_sums_split_by_charge():
    geom = geometry(0.25)
    E1 = UnitPhase.from_turns(0.4)
    f_plus, f_minus = fk_partial_sums(geom, 2, E1, 200)
    assert f_plus > 0 and f_minus > 0
    assert f_plus + f_minus == pytest.approx(fk_series(geom, 2, E1, 200))


def test_oneway_zero_loci():
    geom = geometry()
    assert oneway_fk(geom, 1, UnitPhase.from_turns(0.3),
                     UnitPhase.from_turns(0.7)) <= 1e-12
    for v in (0.0, 0.2, 0.9):
        assert oneway_fk(geom, 1, ONE, UnitPhase.from_turns(v)) == 0.0
    assert oneway_fk(geom, 1, UnitPhase.from_turns(0.3),
                     UnitPhase.from_turns(0.2)) > 1e-8


def test_oneway_matches_series():
    geom = geometry()
    half = UnitPhase.from_turns(0.5)
    # no coast: sum_p |E1^d - 1|^4 |A1_kp|^2
    assert oneway_fk(geom, 1, half, ONE) == pytest.approx(
        oneway_fk_series(geom, 1, half, ONE, 1000), abs=1e-6)
    for u, v in ((0.2, 0.3), (0.45, 0.85), (0.9, 0.05)):
        E1, E2 = UnitPhase.from_turns(u), UnitPhase.from_turns(v)
        assert oneway_fk(geom, -1, E1, E2) == pytest.approx(
            oneway_fk_series(geom, -1, E1, E2, 1000), abs=1e-6)


def test_two_mode_measures():
    assert negativity_two_mode(PEAK, 0.0) == 0.5
    assert chsh_max_two_mode(PEAK, 0.0) == pytest.approx(SQRT8)
    assert negativity_two_mode(fk_closed(geometry(), 1, UnitPhase.from_turns(
        0.5)), 0.1) == pytest.approx(0.4979384, abs=1e-7)
    assert chsh_max_two_mode(1.0, 0.1) == pytest.approx(SQRT8 * 0.995)
    with pytest.raises(ValueError):
        negativity_two_mode(200.0, 0.1)


def test_chsh_from_u_matrix():
    f, h = PEAK, 0.05
    chsh = chsh_from_u_matrix(two_mode_u_matrix(f, h))
    assert chsh == pytest.approx(SQRT8 * math.sqrt(1 - f * h * h))
    assert chsh == pytest.approx(chsh_max_two_mode(f, h), abs=10 * h ** 4)
    assert chsh_from_u_matrix(np.eye(3)) == pytest.approx(SQRT8)


def test_interference_term():
    geom = geometry(0.25)
    E1 = UnitPhase.from_turns(0.3)
    assert interference_term(geom, 1, -1, E1) == 0.0
    assert interference_term(geom, 2, -4, E1) == 0.0
    a1 = first_order_entry(1, -2, 0.25)
    gap = abs((E1 ** 3).value - 1) ** 2
    assert interference_term(geom, 1, -2, E1) == pytest.approx(
        0.5 * gap * a1 * a1)
    E2 = UnitPhase.from_turns(0.45)
    gap2 = abs(((E1 * E2) ** 3).value - 1) ** 2
    assert interference_term(geom, 1, -2, E1, E2) == pytest.approx(
        0.5 * gap * gap2 * a1 * a1)
    with pytest.raises(ValueError):
        interference_term(geom, -1, -2, E1)


def test_charge_matches_two_mode_at_zero_offset():
    geom = geometry()
    for u in (0.1, 0.5, 0.77):
        E1 = UnitPhase.from_turns(u)
        for k in (1, 2):
            negativity, term = negativity_charge(geom, k, -k, E1)
            assert term == 0.0
            assert negativity == pytest.approx(
                negativity_two_mode(fk_closed(geom, k, E1), geom.h),
                abs=1e-12)


def test_interference_raises_negativity():
    geom = geometry()
    E1 = UnitPhase.from_turns(0.3)
    negativity, term = negativity_charge(geom, 1, -2, E1, h_numeric=0.1)
    f_sum = fk_closed(geom, 1, E1) + fk_closed(geom, -2, E1)
    assert term > 0
    assert negativity == pytest.approx(0.5 - (0.25 * f_sum - term) * 0.01)
    assert negativity > 0.5 - 0.25 * f_sum * 0.01


def test_zero_mode_continuity():
    E2 = UnitPhase.from_turns(0.3)
    for k in (1, -1):
        for u in np.linspace(0.0, 1.0, 21):
            E1 = UnitPhase.from_turns(float(u))
            for func in (lambda g: fk_closed(g, k, E1),
                         lambda g: oneway_fk(g, k, E1, E2)):
                assert abs(func(geometry(1e-6)) - func(geometry())) <= 1e-5


def test_truncation_tail_bound():
    geom = geometry(0.25)
    half = UnitPhase.from_turns(0.5)
    tail = fk_closed(geom, 1, half) - fk_series(geom, 1, half, 50)
    assert 0 < tail <= truncation_tail_bound(1, 0.25, 50)
    assert truncation_tail_bound(1, 0.0, 100) < \
        truncation_tail_bound(1, 0.0, 50)
    assert truncation_tail_bound(3, 0.0, 2) == math.inf


def test_validity_flag(caplog):
    with caplog.at_level(logging.WARNING):
        assert validity_flag(1, 0.3)
    assert "perturbative regime" in caplog.text
    assert not validity_flag(2, 0.1)
    assert validity_flag(2, 0.1, threshold=0.2)


def test_degradation_inputs():
    geom = geometry(h=0.05)
    scenario = TravelScenario.single(geom, 3.0)
    inputs = DegradationInputs(geom, 1, scenario)
    assert inputs.h_numeric == pytest.approx(0.05)
    assert not inputs.flag
    assert DegradationInputs(geom, 1, scenario, -2, h_numeric=0.2).flag
    with pytest.raises(ValueError):
        DegradationInputs(geom, 1, scenario, 2)
    with pytest.raises(ValueError):
        DegradationInputs(geom, 1, scenario, h_numeric=-0.1)
    with pytest.raises(ValueError):
        DegradationInputs(geometry(0.5), 1, scenario)


def test_entanglement_report():
    report = EntanglementReport(0.4, 0.49, 2.8, 0.0, 0.3, 0.1, u=0.5)
    d = report.to_dict()
    assert d["f_k"] == 0.4
    assert d["u"] == 0.5
    assert "chsh_max=2.8" in repr(report)


if __name__ == "__main__":
    test_peak_value()
    test_closed_form_matches_series()
    test_oneway_zero_loci()
