import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from .config import config
from .geometry import (CavityGeometry, rapidity_from_proper_time, u_parameter,
                       v_parameter)
from .polylog import UnitPhase

logger = logging.getLogger(__name__)

RIGHT = "accelerate-right"
LEFT = "accelerate-left"
INERTIAL = "inertial"
SEGMENT_KINDS = (RIGHT, LEFT, INERTIAL)

SINGLE = "single"
ONE_WAY = "one-way"
ROUND_TRIP = "round-trip"
GENERAL = "general"


def first_order_entry(m: int, n: int, s: float = 0.0) -> float:
    """Coefficient of h in the Minkowski to Rindler overlap A_mn"""
    d = m - n
    if d % 2 == 0:
        return 0.0
    return -(m + n + 2 * s) / (math.pi ** 2 * d ** 3)


def second_order_entry(m: int, n: int, s: float = 0.0) -> float:
    """Coefficient of h^2 in the Minkowski to Rindler overlap A_mn"""
    if m == n:
        return -(1 / 96 + math.pi ** 2 * (n + s) ** 2 / 240)
    d = m - n
    if d % 2 != 0:
        return 0.0
    ms = m + s
    ns = n + s
    return (ms ** 2 + 3 * ns ** 2 + 8 * ms * ns) / (4 * math.pi ** 2 * d ** 4)


def window_indices(window: int) -> np.ndarray:
    return np.arange(-window, window + 1)


def first_order_values(m, n, s: float = 0.0) -> np.ndarray:
    """first_order_entry broadcast over integer arrays m, n"""
    d = m - n
    odd = d % 2 != 0
    safe = np.where(d == 0, 1, d).astype(float)
    return np.where(odd, -(m + n + 2 * s) / (math.pi ** 2 * safe ** 3), 0.0)


def first_order_matrix(window: int, s: float = 0.0) -> np.ndarray:
    idx = window_indices(window)
    return first_order_values(idx[:, None], idx[None, :], s)


def second_order_matrix(window: int, s: float = 0.0) -> np.ndarray:
    idx = window_indices(window)
    m = (idx + s)[:, None]
    n = (idx + s)[None, :]
    d = idx[:, None] - idx[None, :]
    even = (d % 2 == 0) & (d != 0)
    safe = np.where(d == 0, 1, d).astype(float)
    off = (m ** 2 + 3 * n ** 2 + 8 * m * n) / (4 * math.pi ** 2 * safe ** 4)
    result = np.where(even, off, 0.0)
    np.fill_diagonal(result, -(1 / 96 + math.pi ** 2 * (idx + s) ** 2 / 240))
    return result


def phase_diagonal(window: int, s: float, turns: float) -> np.ndarray:
    """exp(2 pi i (n+s) turns) for n in -window..window"""
    reduced = np.mod((window_indices(window) + s) * turns, 1.0)
    return np.exp(2j * np.pi * reduced)


def parity_signs(window: int) -> np.ndarray:
    idx = window_indices(window)
    return np.where((idx[:, None] + idx[None, :]) % 2 == 0, 1.0, -1.0)


class PerturbativeMatrix:
    """
    Bogoliubov matrix expanded to second order in the acceleration
    parameter, X = X0 + h X1 + h^2 X2, over the mode window -M..M

    Args:
        order0: diagonal of the zeroth order (unit-modulus phases)
        order1: coefficient of h
        order2: coefficient of h^2
    """

    def __init__(
            self,
            order0: np.ndarray,
            order1: np.ndarray,
            order2: np.ndarray,
    ) -> None:
        order0 = np.array(order0, dtype=complex)
        order1 = np.array(order1, dtype=complex)
        order2 = np.array(order2, dtype=complex)
        size = order0.shape[0]
        if order0.ndim != 1 or size % 2 != 1 or size < 3:
            raise ValueError("order0 must be a diagonal over -M..M with M >= "
                             "1, got shape %s" % (order0.shape,))
        if order1.shape != (size, size) or order2.shape != (size, size):
            raise ValueError("Order shapes %s, %s do not match window of size "
                             "%s" % (order1.shape, order2.shape, size))
        if np.max(np.abs(np.abs(order0) - 1)) > 1e-12:
            raise ValueError("order0 entries must have unit modulus")
        for arr in (order0, order1, order2):
            arr.flags.writeable = False
        self.order0 = order0
        self.order1 = order1
        self.order2 = order2
        self.window = size // 2

    @classmethod
    def identity(cls, window: int) -> "PerturbativeMatrix":
        size = 2 * window + 1
        return cls(np.ones(size), np.zeros((size, size)),
                   np.zeros((size, size)))

    @property
    def indices(self) -> np.ndarray:
        return window_indices(self.window)

    def position(self, n: int) -> int:
        if abs(n) > self.window:
            raise IndexError("Mode %s lies outside the window -%s..%s" % (
                n, self.window, self.window))
        return n + self.window

    def entry(self, m: int, n: int, h: float) -> complex:
        i, j = self.position(m), self.position(n)
        value = h * self.order1[i, j] + h * h * self.order2[i, j]
        if i == j:
            value += self.order0[i]
        return complex(value)

    def evaluate(self, h: float) -> np.ndarray:
        return np.diag(self.order0) + h * self.order1 + h * h * self.order2

    def __matmul__(self, other: "PerturbativeMatrix") -> "PerturbativeMatrix":
        """Product truncated at order h^2"""
        if not isinstance(other, PerturbativeMatrix):
            return NotImplemented
        if other.window != self.window:
            raise ValueError("Cannot multiply windows %s and %s" % (
                self.window, other.window))
        x0 = self.order0[:, None]
        y0 = other.order0[None, :]
        order1 = x0 * other.order1 + self.order1 * y0
        order2 = x0 * other.order2 + self.order1 @ other.order1 \
            + self.order2 * y0
        return PerturbativeMatrix(self.order0 * other.order0, order1, order2)

    def conjugate_transpose(self) -> "PerturbativeMatrix":
        return PerturbativeMatrix(self.order0.conj(), self.order1.conj().T,
                                  self.order2.conj().T)

    def allclose(self, other: "PerturbativeMatrix", atol: float = 1e-12
                 ) -> bool:
        return self.window == other.window and all(
            np.allclose(x, y, rtol=0, atol=atol) for x, y in zip(
                (self.order0, self.order1, self.order2),
                (other.order0, other.order1, other.order2)))

    def __repr__(self):
        return "PerturbativeMatrix(window=%d)" % self.window


def flip_direction(matrix: PerturbativeMatrix) -> PerturbativeMatrix:
    """Entries multiplied by (-1)^(m+n), equivalent to h -> -h"""
    signs = parity_signs(matrix.window)
    return PerturbativeMatrix(matrix.order0, matrix.order1 * signs,
                              matrix.order2 * signs)


def _check_window(window):
    if window is None:
        window = config["window"]
    if isinstance(window, bool) or not isinstance(window, (int, np.integer)) \
            or window < 1:
        raise ValueError("Window must be an integer >= 1, got %r" % (window,))
    return int(window)


def segment_matrix_accel(
        geom: CavityGeometry,
        eta1: float,
        direction: str = RIGHT,
        window: Optional[int] = None,
) -> PerturbativeMatrix:
    """
    Bogoliubov matrix of a uniformly accelerated segment of rapidity eta1,
    composed from the inertial to Rindler overlap, free Rindler evolution
    and the overlap back

    Args:
        geom: cavity geometry
        eta1: rapidity elapsed at the cavity centre
        direction: accelerate-right or accelerate-left
        window: truncation window M, defaults to config["window"]
    """
    window = _check_window(window)
    if not eta1 >= 0:
        raise ValueError("Rapidity must be non-negative, got %s" % eta1)
    if direction not in (RIGHT, LEFT):
        raise ValueError("Unknown acceleration direction %s" % direction)
    g = phase_diagonal(window, geom.s, eta1 / (2 * geom.log_ratio))
    a1 = first_order_matrix(window, geom.s)
    a2 = second_order_matrix(window, geom.s)
    # A1 is real antisymmetric, so A1^dagger G A1 = -A1 G A1
    sandwich = (a1.T * g.real) @ a1 + 1j * ((a1.T * g.imag) @ a1)
    order1 = g[:, None] * a1 - a1 * g[None, :]
    order2 = g[:, None] * a2 + a2.T * g[None, :] + sandwich
    matrix = PerturbativeMatrix(g, order1, order2)
    if direction == LEFT:
        matrix = flip_direction(matrix)
    return matrix


def inertial_phase_matrix(
        geom: CavityGeometry,
        tau: float,
        window: Optional[int] = None,
) -> PerturbativeMatrix:
    """Free inertial evolution, diagonal with entries exp(i omega_n tau)"""
    window = _check_window(window)
    if not tau >= 0:
        raise ValueError("Proper time must be non-negative, got %s" % tau)
    size = 2 * window + 1
    g = phase_diagonal(window, geom.s, tau / (2 * geom.delta))
    return PerturbativeMatrix(g, np.zeros((size, size)),
                              np.zeros((size, size)))


class Segment:
    """
    Trajectory segment

    Args:
        kind: accelerate-right, accelerate-left or inertial
        duration: proper time at the cavity centre
    """

    def __init__(self, kind: str, duration: float) -> None:
        if kind not in SEGMENT_KINDS:
            raise ValueError("Unknown segment kind %s, expected one of %s" % (
                kind, SEGMENT_KINDS))
        duration = float(duration)
        if not (math.isfinite(duration) and duration >= 0):
            raise ValueError("Segment duration must be finite and "
                             "non-negative, got %s" % duration)
        self.kind = kind
        self.duration = duration

    def matrix(self, geom: CavityGeometry, window: int) -> PerturbativeMatrix:
        if self.kind == INERTIAL:
            return inertial_phase_matrix(geom, self.duration, window)
        eta = rapidity_from_proper_time(geom, self.duration)
        return segment_matrix_accel(geom, eta, self.kind, window)

    def to_dict(self):
        return {"kind": self.kind, "duration": self.duration}

    def __eq__(self, other):
        return isinstance(other, Segment) and (self.kind, self.duration) == \
            (other.kind, other.duration)

    def __repr__(self):
        return "Segment(%s, %r)" % (self.kind, self.duration)


class TravelScenario:
    """
    Cavity trajectory grafted from inertial and uniformly accelerated
    segments

    Args:
        geometry: cavity geometry
        segments: segments in the order they are travelled
    """

    def __init__(
            self,
            geometry: CavityGeometry,
            segments: List[Segment],
    ) -> None:
        if len(segments) == 0:
            raise ValueError("A scenario needs at least one segment")
        for seg in segments:
            if not isinstance(seg, Segment):
                raise TypeError("Expected Segment, got %r" % (seg,))
        self.geometry = geometry
        self.segments = list(segments)

    @classmethod
    def single(cls, geometry: CavityGeometry, tau1: float
               ) -> "TravelScenario":
        return cls(geometry, [Segment(RIGHT, tau1)])

    @classmethod
    def one_way(cls, geometry: CavityGeometry, tau1: float, tau2: float
                ) -> "TravelScenario":
        """Accelerate for tau1, coast for tau2, brake for tau1"""
        return cls(geometry, [Segment(RIGHT, tau1), Segment(INERTIAL, tau2),
                              Segment(LEFT, tau1)])

    @classmethod
    def round_trip(cls, geometry: CavityGeometry, tau1: float, tau2: float
                   ) -> "TravelScenario":
        """One-way trip out followed by its mirror image back"""
        return cls(geometry, [
            Segment(RIGHT, tau1), Segment(INERTIAL, tau2), Segment(LEFT, tau1),
            Segment(LEFT, tau1), Segment(INERTIAL, tau2), Segment(RIGHT, tau1),
        ])

    @property
    def pattern(self) -> str:
        kinds = [seg.kind for seg in self.segments]
        durations = [seg.duration for seg in self.segments]
        if kinds == [RIGHT]:
            return SINGLE
        if kinds == [RIGHT, INERTIAL, LEFT] and durations[0] == durations[2]:
            return ONE_WAY
        if kinds == [RIGHT, INERTIAL, LEFT, LEFT, INERTIAL, RIGHT] and \
                len({durations[i] for i in (0, 2, 3, 5)}) == 1 and \
                durations[1] == durations[4]:
            return ROUND_TRIP
        return GENERAL

    def to_dict(self):
        return {"segments": [seg.to_dict() for seg in self.segments]}

    def __repr__(self):
        return "TravelScenario(%r, %r)" % (self.geometry, self.segments)


def scenario_phases(
        scenario: TravelScenario,
) -> Tuple[Optional[UnitPhase], Optional[UnitPhase]]:
    """(E1, E2) of a single segment or a one-way trip, (None, None) for
    trajectories without a closed form"""
    pattern = scenario.pattern
    geom = scenario.geometry
    if pattern == SINGLE:
        u = u_parameter(geom, scenario.segments[0].duration)
        return UnitPhase.from_turns(u), None
    if pattern == ONE_WAY:
        u = u_parameter(geom, scenario.segments[0].duration)
        v = v_parameter(geom, scenario.segments[1].duration)
        return UnitPhase.from_turns(u), UnitPhase.from_turns(v)
    return None, None


def graft(
        scenario: TravelScenario,
        window: Optional[int] = None,
) -> PerturbativeMatrix:
    """Compose the segment matrices of a trajectory, later segments acting on
    the left, truncating every product at order h^2"""
    window = _check_window(window)
    logger.debug("Grafting %d segments with window %d" % (
        len(scenario.segments), window))
    result = None
    for seg in scenario.segments:
        mat = seg.matrix(scenario.geometry, window)
        result = mat if result is None else mat @ result
    return result


def _inner_slice(matrix, inner):
    if inner is None:
        inner = config["residual_inner_window"]
    inner = min(inner, matrix.window)
    return slice(matrix.window - inner, matrix.window + inner + 1)


def unitarity_residuals(
        matrix: PerturbativeMatrix,
        inner: Optional[int] = None,
) -> Tuple[float, float]:
    """
    Max-norm residuals of the unitarity relations at orders h and h^2,

        G* X1 + X1^dagger G
        G* X2 + X2^dagger G + X1^dagger X1

    measured on the index block |m|, |n| <= inner
    """
    sl = _inner_slice(matrix, inner)
    g = matrix.order0
    x1 = matrix.order1
    x2 = matrix.order2
    r1 = g.conj()[:, None] * x1 + x1.conj().T * g[None, :]
    block = x1[:, sl]
    r2 = (g.conj()[:, None] * x2 + x2.conj().T * g[None, :])[sl, sl] \
        + block.conj().T @ block
    return float(np.max(np.abs(r1[sl, sl]))), float(np.max(np.abs(r2)))


def leakage_weights(matrix: PerturbativeMatrix, k: int) -> Tuple[float, float]:
    """Squared first order column k, summed over particle (p >= 0) and
    antiparticle (p < 0) modes"""
    col = np.abs(matrix.order1[:, matrix.position(k)]) ** 2
    plus = matrix.indices >= 0
    return float(np.sum(col[plus])), float(np.sum(col[~plus]))


def scenario_fk(
        scenario: TravelScenario,
        k: int,
        window: Optional[int] = None,
) -> Tuple[float, float]:
    """
    Leakage weights (f+, f-) of mode k along an arbitrary trajectory, as
    coefficients of h^2

    Args:
        scenario: trajectory
        k: reference mode
        window: truncation window M
    """
    return leakage_weights(graft(scenario, window), k)


class VMatrix:
    """
    First order coefficients V_pq of the exponent of the transformed vacuum,
    p in 0..M and q in -M..-1

    Args:
        window: truncation window M
        entries: (M+1) x M array, rows p = 0..M, columns q = -M..-1
    """

    def __init__(self, window: int, entries: np.ndarray) -> None:
        entries = np.array(entries, dtype=complex)
        if entries.shape != (window + 1, window):
            raise ValueError("V entries must have shape %s, got %s" % (
                (window + 1, window), entries.shape))
        entries.flags.writeable = False
        self.window = window
        self.entries = entries

    def entry(self, p: int, q: int) -> complex:
        if not (0 <= p <= self.window and -self.window <= q < 0):
            raise IndexError("V is indexed by p in 0..%d and q in -%d..-1, "
                             "got (%s, %s)" % (self.window, self.window, p, q))
        return complex(self.entries[p, q + self.window])

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.entries) ** 2))

    def deficit(self, h: float) -> float:
        """1 - N to order h^2"""
        return 0.5 * self.norm_squared() * h * h

    def normalisation(self, h: float) -> float:
        return 1 - self.deficit(h)


def vacuum_v_matrix(
        matrix: PerturbativeMatrix,
        form: str = "row",
) -> VMatrix:
    """
    V_pq = -X1_qp G*_p ("row") or, equivalently by first order unitarity,
    V_pq = X1*_pq G_q ("column")
    """
    w = matrix.window
    g = matrix.order0
    x1 = matrix.order1
    p = slice(w, 2 * w + 1)
    q = slice(0, w)
    if form == "row":
        entries = -x1[q, p].T * g[p].conj()[:, None]
    elif form == "column":
        entries = x1[p, q].conj() * g[q][None, :]
    else:
        raise ValueError("Unknown V form %s, expected row or column" % form)
    return VMatrix(w, entries)
