import math

import numpy as np
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from fermicav.polylog import (BERNOULLI_POLYNOMIALS, ONE, UnitPhase,
                              fold_turns, q_function, re_polylog,
                              re_polylog_series, series_tail_bound)

ZETA4 = math.pi ** 4 / 90
ZETA6 = math.pi ** 6 / 945

turns = st.floats(min_value=-10.0, max_value=10.0)


def test_fold_turns():
    assert fold_turns(0.75) == -0.25
    assert fold_turns(0.5) == -0.5
    assert fold_turns(-0.5) == -0.5
    assert fold_turns(3.0) == 0.0


def test_unit_phase():
    z = UnitPhase.from_turns(0.25)
    assert z.value == pytest.approx(1j)
    assert z.conjugate().signed_turns == -0.25
    assert z.conjugate().turns == 0.75
    assert (z * z.conjugate()).is_one()
    assert (z ** 4).is_one()
    assert UnitPhase.from_turns(1.0).is_one()
    assert UnitPhase(math.pi).turns == pytest.approx(0.5)
    assert UnitPhase(math.pi).phi == pytest.approx(math.pi)
    assert ONE == UnitPhase()


def test_polylog_at_special_points():
    minus_one = UnitPhase.from_turns(0.5)
    assert re_polylog(4, ONE) == pytest.approx(ZETA4, rel=1e-14)
    assert re_polylog(6, ONE) == pytest.approx(ZETA6, rel=1e-14)
    assert re_polylog(4, minus_one) == pytest.approx(-7 / 8 * ZETA4,
                                                     rel=1e-14)
    assert re_polylog(6, minus_one) == pytest.approx(-31 / 32 * ZETA6,
                                                     rel=1e-14)


def test_polylog_at_one_is_exact():
    assert re_polylog(4, ONE) == pytest.approx(ZETA4, rel=1e-15)
    assert re_polylog(6, ONE) == pytest.approx(ZETA6, rel=1e-15)


def test_bernoulli_polynomials():
    b4, b6 = BERNOULLI_POLYNOMIALS[4], BERNOULLI_POLYNOMIALS[6]
    assert b4[-1] == -1 / 30
    assert b6[-1] == 1 / 42
    # B_6'' = 30 B_4
    assert np.polyder(b6, 2) == pytest.approx(30 * b4, abs=1e-15)
    for b in (b4, b6):
        assert np.polyval(np.polyint(b), 1.0) == pytest.approx(0.0, abs=1e-15)
        assert np.polyval(b, 0.3) == pytest.approx(np.polyval(b, 0.7),
                                                   abs=1e-15)


def test_unsupported_order():
    with pytest.raises(ValueError):
        re_polylog(3, ONE)
    with pytest.raises(ValueError):
        re_polylog_series(5, ONE)


@seed(1)
@given(t=turns)
def test_polylog_even(t):
    z = UnitPhase.from_turns(t)
    for order in (4, 6):
        assert re_polylog(order, z) == re_polylog(order, z.conjugate())


@seed(1)
@given(t=turns, shift=st.integers(min_value=-5, max_value=5))
def test_polylog_periodic(t, shift):
    for order in (4, 6):
        assert re_polylog(order, UnitPhase.from_turns(t)) == pytest.approx(
            re_polylog(order, UnitPhase.from_turns(t + shift)), abs=1e-12)


def test_closed_form_matches_series():
    for t in (0.0, 0.1, 0.3, 0.5, -0.2, 0.45):
        z = UnitPhase.from_turns(t)
        for order in (4, 6):
            assert abs(re_polylog(order, z)
                       - re_polylog_series(order, z, 20000)) <= 1e-12


def test_series_tail_bound():
    assert series_tail_bound(4, 10) == pytest.approx(1 / 3000)
    z = UnitPhase.from_turns(0.0)
    gap = re_polylog(4, z) - re_polylog_series(4, z, 100)
    assert 0 < gap <= series_tail_bound(4, 100)


def test_alpha_squared_coefficient_non_negative():
    def six(z):
        return re_polylog(6, z) - re_polylog(6, z ** 2) / 64

    d = np.arange(1, 2001, 2, dtype=float)
    for t in np.linspace(0.0, 1.0, 101):
        z = UnitPhase.from_turns(float(t))
        coefficient = 2 / math.pi ** 4 * (six(ONE) - six(z))
        odd_sum = 2 / math.pi ** 4 * np.sum(
            (1 - np.cos(2 * np.pi * t * d)) / d ** 6)
        assert coefficient >= -1e-15
        assert coefficient == pytest.approx(odd_sum, abs=1e-13)
        if 0.0 < t < 1.0:
            assert coefficient > 0


def test_q_function_peak_gap():
    gap = q_function(2.0, ONE) - q_function(2.0, UnitPhase.from_turns(0.5))
    assert gap == pytest.approx(math.pi ** 2 / 60 + 1 / 24, abs=1e-14)


if __name__ == "__main__":
    test_polylog_at_special_points()
    test_closed_form_matches_series()
