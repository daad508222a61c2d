import math
from typing import Tuple, Union

import numpy as np

MINKOWSKI = "minkowski"
RINDLER = "rindler"


class CavityGeometry:
    """
    Rigid cavity a <= z <= b with self-adjoint boundary data

    Args:
        a: Rindler position of the left wall
        b: Rindler position of the right wall, b > a
        s: boundary spectrum offset in [0, 1)
        theta: boundary phase in [0, 2 pi)
    """

    def __init__(
            self,
            a: float,
            b: float,
            s: float = 0.0,
            theta: float = 0.0,
    ) -> None:
        a = float(a)
        b = float(b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError("Cavity walls must be finite, got a=%s, b=%s"
                             % (a, b))
        if not 0 < a < b:
            raise ValueError("Cavity walls must satisfy 0 < a < b, got a=%s, "
                             "b=%s" % (a, b))
        if not 0 <= s < 1:
            raise ValueError("Boundary offset s must lie in [0, 1), got %s"
                             % s)
        if not 0 <= theta < 2 * math.pi:
            raise ValueError("Boundary phase theta must lie in [0, 2 pi), "
                             "got %s" % theta)
        self.a = a
        self.b = b
        self.s = float(s)
        self.theta = float(theta)

    @classmethod
    def from_delta_h(
            cls,
            delta: float,
            h: float,
            s: float = 0.0,
            theta: float = 0.0,
    ) -> "CavityGeometry":
        """Recover the wall positions from the length and the acceleration
        parameter"""
        if not delta > 0:
            raise ValueError("Cavity length must be positive, got %s" % delta)
        if not 0 < h < 2:
            raise ValueError("Acceleration parameter h must lie in (0, 2), "
                             "got %s" % h)
        return cls(delta * (1 / h - 0.5), delta * (1 / h + 0.5), s, theta)

    @property
    def delta(self) -> float:
        return self.b - self.a

    @property
    def h(self) -> float:
        return 2 * self.delta / (self.a + self.b)

    @property
    def log_ratio(self) -> float:
        # ln(b/a) without cancellation for thin cavities
        return math.log1p(self.delta / self.a)

    def mode_spec(self, n: int) -> "ModeSpec":
        return ModeSpec(n)

    def with_boundary(self, s: float = None,
                      theta: float = None) -> "CavityGeometry":
        return CavityGeometry(self.a, self.b,
                              self.s if s is None else s,
                              self.theta if theta is None else theta)

    def __eq__(self, other):
        if not isinstance(other, CavityGeometry):
            return False
        return (self.a, self.b, self.s, self.theta) == (
            other.a, other.b, other.s, other.theta)

    def __repr__(self):
        return "CavityGeometry(a=%r, b=%r, s=%r, theta=%r)" % (
            self.a, self.b, self.s, self.theta)


class ModeSpec:
    """
    Cavity mode label

    Args:
        n: integer mode index, particles for n >= 0 and antiparticles for n < 0
    """

    def __init__(self, n: int) -> None:
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise TypeError("Mode index must be an integer, got %r" % (n,))
        self.n = int(n)

    @property
    def charge(self) -> str:
        return "+" if self.n >= 0 else "-"

    @property
    def sign(self) -> int:
        return 1 if self.n >= 0 else -1

    def minkowski_frequency(self, geom: CavityGeometry) -> float:
        return minkowski_frequency(geom, self.n)

    def rindler_frequency(self, geom: CavityGeometry) -> float:
        return rindler_frequency(geom, self.n)

    def __eq__(self, other):
        return isinstance(other, ModeSpec) and self.n == other.n

    def __hash__(self):
        return hash(self.n)

    def __repr__(self):
        return "ModeSpec(n=%d, charge=%s)" % (self.n, self.charge)


def minkowski_frequency(geom: CavityGeometry, n: int) -> float:
    return (n + geom.s) * math.pi / geom.delta


def rindler_frequency(geom: CavityGeometry, n: int) -> float:
    return (n + geom.s) * math.pi / geom.log_ratio


def rapidity_from_proper_time(geom: CavityGeometry, tau: float) -> float:
    """Rapidity elapsed at the cavity centre after proper time tau of
    uniform acceleration"""
    if not tau >= 0:
        raise ValueError("Proper time must be non-negative, got %s" % tau)
    return 2 * tau / (geom.a + geom.b)


def degradation_period(geom: CavityGeometry) -> float:
    """Proper time at the cavity centre between sending and recapturing a
    light ray that bounces once off each wall"""
    return 2 * geom.delta * geom.log_ratio / geom.h


def coast_period(geom: CavityGeometry) -> float:
    return 2 * geom.delta


def u_parameter(geom: CavityGeometry, tau1: float) -> float:
    if not tau1 >= 0:
        raise ValueError("Proper time must be non-negative, got %s" % tau1)
    return tau1 / degradation_period(geom)


def v_parameter(geom: CavityGeometry, tau2: float) -> float:
    if not tau2 >= 0:
        raise ValueError("Proper time must be non-negative, got %s" % tau2)
    return tau2 / coast_period(geom)


def proper_time_from_u(geom: CavityGeometry, u: float) -> float:
    if not u >= 0:
        raise ValueError("u must be non-negative, got %s" % u)
    return u * degradation_period(geom)


def proper_time_from_v(geom: CavityGeometry, v: float) -> float:
    if not v >= 0:
        raise ValueError("v must be non-negative, got %s" % v)
    return v * coast_period(geom)


def cancelling_coast_duration(
        geom: CavityGeometry,
        tau1: float,
        n: int = 0,
) -> float:
    """
    Inertial coast of a one-way trip after which the order h^2 degradation
    cancels (E1 E2 = 1)

    Args:
        geom: cavity geometry
        tau1: proper time of each accelerated segment
        n: index of the cancelling duration, 0 for the shortest
    """
    if n < 0:
        raise ValueError("n must be non-negative, got %s" % n)
    v = (-u_parameter(geom, tau1)) % 1.0
    return (v + n) * coast_period(geom)


def mode_components_at_t0(
        geom: CavityGeometry,
        n: int,
        z: Union[float, np.ndarray],
        frame: str = MINKOWSKI,
) -> Tuple[Union[complex, np.ndarray], Union[complex, np.ndarray]]:
    """
    Coefficients of the U+ and U- spinors of mode n on the surface t = 0

    Args:
        geom: cavity geometry
        n: mode index
        z: position(s) inside the cavity
        frame: "minkowski" for the inertial modes, "rindler" for the
            uniformly accelerated ones
    """
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr < geom.a) or np.any(z_arr > geom.b):
        raise ValueError("Position %s lies outside the cavity [%s, %s]" % (
            z, geom.a, geom.b))
    boundary = np.exp(1j * geom.theta)
    if frame == MINKOWSKI:
        phase = minkowski_frequency(geom, n) * (z_arr - geom.a)
        norm = 1 / math.sqrt(2 * geom.delta)
    elif frame == RINDLER:
        phase = rindler_frequency(geom, n) * np.log1p(
            (z_arr - geom.a) / geom.a)
        norm = 1 / np.sqrt(2 * z_arr * geom.log_ratio)
    else:
        raise ValueError("Unknown frame %s, expected %s or %s" % (
            frame, MINKOWSKI, RINDLER))
    plus = norm * np.exp(1j * phase)
    minus = norm * boundary * np.exp(-1j * phase)
    if np.ndim(z) == 0:
        return complex(plus), complex(minus)
    return plus, minus
