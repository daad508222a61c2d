"""Real parts of the even-order polylogarithms on the unit circle.

For z = exp(2 pi i x) and even order n = 2m the real part of Li_n is a
periodic Bernoulli polynomial,

    Re Li_n(z) = (-1)^(m-1) (2 pi)^n / (2 n!) B_n(x mod 1),

which is the production path. The defining cosine series is kept as an
independent oracle.
"""
import functools
import math

import numpy as np

SUPPORTED_ORDERS = (4, 6)


def fold_turns(t: float) -> float:
    """Reduce a phase measured in turns to [-1/2, 1/2)"""
    t = float(t)
    return t - math.floor(t + 0.5)


class UnitPhase:
    """
    Point z = exp(i phi) on the unit circle

    The phase is held in turns (phi / 2 pi) folded to [-1/2, 1/2), so that
    complex conjugation is an exact sign flip.

    Args:
        phi: phase in radians, reduced modulo 2 pi
    """

    def __init__(self, phi: float = 0.0) -> None:
        self._turns = fold_turns(float(phi) / (2 * math.pi))

    @classmethod
    def from_turns(cls, turns: float) -> "UnitPhase":
        z = cls.__new__(cls)
        z._turns = fold_turns(turns)
        return z

    @property
    def turns(self) -> float:
        """Phase in turns, reduced to [0, 1)"""
        return self._turns + 1.0 if self._turns < 0 else self._turns

    @property
    def signed_turns(self) -> float:
        return self._turns

    @property
    def phi(self) -> float:
        """Phase in radians, reduced to [0, 2 pi)"""
        return 2 * math.pi * self.turns

    @property
    def value(self) -> complex:
        return complex(math.cos(2 * math.pi * self._turns),
                       math.sin(2 * math.pi * self._turns))

    def is_one(self) -> bool:
        return self._turns == 0.0

    def conjugate(self) -> "UnitPhase":
        return UnitPhase.from_turns(-self._turns)

    def __mul__(self, other: "UnitPhase") -> "UnitPhase":
        if not isinstance(other, UnitPhase):
            return NotImplemented
        return UnitPhase.from_turns(self._turns + other._turns)

    def __pow__(self, n: int) -> "UnitPhase":
        return UnitPhase.from_turns(n * self._turns)

    def __eq__(self, other):
        return isinstance(other, UnitPhase) and self._turns == other._turns

    def __hash__(self):
        return hash(self._turns)

    def __repr__(self):
        return "UnitPhase(turns=%r)" % self.turns


ONE = UnitPhase.from_turns(0.0)


# B_n(x), highest power first for polyval
BERNOULLI_POLYNOMIALS = {
    4: np.array([1.0, -2.0, 1.0, 0.0, -1.0 / 30]),
    6: np.array([1.0, -3.0, 2.5, 0.0, -0.5, 0.0, 1.0 / 42]),
}


@functools.lru_cache(maxsize=None)
def _closed_form_prefactor(n):
    m = n // 2
    return (-1) ** (m - 1) * (2 * math.pi) ** n / (2 * math.factorial(n))


def _check_order(order):
    if order not in SUPPORTED_ORDERS:
        raise ValueError("Unsupported polylogarithm order %s, only %s are "
                         "supported" % (order, SUPPORTED_ORDERS))


def re_polylog(order: int, z: UnitPhase) -> float:
    """Re Li_order(z) on the unit circle from the periodic Bernoulli
    polynomial"""
    _check_order(order)
    # even order: B_n(x) = B_n(1 - x), evaluate on [0, 1/2]
    x = abs(z.signed_turns)
    return _closed_form_prefactor(order) * float(
        np.polyval(BERNOULLI_POLYNOMIALS[order], x))


def series_tail_bound(order: int, terms: int) -> float:
    """Bound on sum_{k > terms} 1/k^order"""
    return 1.0 / ((order - 1) * terms ** (order - 1))


def re_polylog_series(order: int, z: UnitPhase, terms: int = 20000) -> float:
    """Re Li_order(z) = sum_k cos(k phi)/k^order, truncated after `terms`
    terms"""
    _check_order(order)
    if terms < 1:
        raise ValueError("At least one series term is required")
    k = np.arange(1, terms + 1, dtype=float)
    reduced = np.mod(k * z.signed_turns, 1.0)
    # smallest terms first
    return float(np.sum((np.cos(2 * np.pi * reduced) / k ** order)[::-1]))


def q_function(alpha: float, z: UnitPhase) -> float:
    """
    Degradation kernel

        Q(alpha, z) = (2/pi^4) Re[alpha^2 (Li6(z) - Li6(z^2)/64)
                                  + Li4(z) - Li4(z^2)/16]

    i.e. (2/pi^4) sum over odd d of (alpha^2/d^6 + 1/d^4) cos(d phi).
    """
    z2 = z ** 2
    six = re_polylog(6, z) - re_polylog(6, z2) / 64
    four = re_polylog(4, z) - re_polylog(4, z2) / 16
    return 2 / math.pi ** 4 * (alpha * alpha * six + four)
