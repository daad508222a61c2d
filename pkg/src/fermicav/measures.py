import logging
import math
from typing import Optional, Tuple

import numpy as np

from .bogoliubov import TravelScenario, first_order_entry, first_order_values
from .config import config
from .geometry import CavityGeometry
from .oracle import horodecki_chsh
from .polylog import ONE, UnitPhase, q_function

logger = logging.getLogger(__name__)

SQRT8 = 2 * math.sqrt(2)


def alpha_parameter(geom: CavityGeometry, k: int) -> float:
    return 2 * (k + geom.s)


def _phase_gap(d, turns):
    """|z^d - 1|^2 for z = exp(2 pi i turns)"""
    return 4 * np.sin(np.pi * np.mod(d * turns, 1.0)) ** 2


def _window(window, key="sum_window"):
    if window is None:
        window = config[key]
    if window < 1:
        raise ValueError("Window must be >= 1, got %s" % window)
    return window


def _leakage_terms(geom, k, E1, E2, window):
    p = np.arange(-window, window + 1)
    d = k - p
    terms = _phase_gap(d, E1.signed_turns) \
        * first_order_values(k, p, geom.s) ** 2
    if E2 is not None:
        terms = terms * _phase_gap(d, (E1 * E2).signed_turns)
    return p, terms


def fk_partial_sums(
        geom: CavityGeometry,
        k: int,
        E1: UnitPhase,
        window: Optional[int] = None,
        E2: Optional[UnitPhase] = None,
) -> Tuple[float, float]:
    """(f+, f-) of a single segment (or of a one-way trip when E2 is given)
    as truncated sums over p >= 0 and p < 0"""
    window = _window(window)
    p, terms = _leakage_terms(geom, k, E1, E2, window)
    return float(np.sum(terms[p >= 0])), float(np.sum(terms[p < 0]))


def fk_series(
        geom: CavityGeometry,
        k: int,
        E1: UnitPhase,
        window: Optional[int] = None,
) -> float:
    """
    f_k = sum_p |E1^(k-p) - 1|^2 |A1_kp|^2, coefficient of h^2, truncated
    to p in -M..M

    Args:
        geom: cavity geometry
        k: reference mode
        E1: phase acquired over the accelerated segment
        window: truncation window M, defaults to config["sum_window"]
    """
    return sum(fk_partial_sums(geom, k, E1, window))


def fk_closed(geom: CavityGeometry, k: int, E1: UnitPhase) -> float:
    """f_k = 2[Q(alpha, 1) - Q(alpha, E1)] with alpha = 2(k+s)"""
    if E1.is_one():
        return 0.0
    alpha = alpha_parameter(geom, k)
    return 2 * (q_function(alpha, ONE) - q_function(alpha, E1))


def oneway_fk(
        geom: CavityGeometry,
        k: int,
        E1: UnitPhase,
        E2: UnitPhase,
) -> float:
    """Degradation coefficient of a one-way trip: accelerate, coast with
    phase E2, brake"""
    E12 = E1 * E2
    if E1.is_one() or E12.is_one():
        return 0.0
    alpha = alpha_parameter(geom, k)
    return 2 * (2 * q_function(alpha, ONE) - 2 * q_function(alpha, E1)
                + q_function(alpha, E2) - 2 * q_function(alpha, E12)
                + q_function(alpha, E1 * E12))


def oneway_fk_series(
        geom: CavityGeometry,
        k: int,
        E1: UnitPhase,
        E2: UnitPhase,
        window: Optional[int] = None,
) -> float:
    """sum_p |E1^d - 1|^2 |(E1 E2)^d - 1|^2 |A1_kp|^2 with d = k - p"""
    return sum(fk_partial_sums(geom, k, E1, window, E2))


def _check_small(f, h):
    if f * h * h > 1:
        raise ValueError("f h^2 = %s exceeds 1, outside the perturbative "
                         "regime" % (f * h * h))


def negativity_two_mode(f: float, h_numeric: float) -> float:
    _check_small(f, h_numeric)
    return 0.5 * (1 - f * h_numeric ** 2)


def chsh_max_two_mode(f: float, h_numeric: float) -> float:
    _check_small(f, h_numeric)
    return SQRT8 * (1 - 0.5 * f * h_numeric ** 2)


def two_mode_u_matrix(f: float, h_numeric: float) -> np.ndarray:
    """U = T^T T of the degraded two-mode state to order h^2"""
    _check_small(f, h_numeric)
    x = 1 - f * h_numeric ** 2
    return np.diag([x, x, x * x])


def chsh_from_u_matrix(u_matrix: np.ndarray) -> float:
    """Horodecki maximum 2 sqrt(mu1 + mu2)"""
    return horodecki_chsh(np.asarray(u_matrix))


def _check_charge_modes(k, k_prime):
    if k < 0 or k_prime >= 0:
        raise ValueError("The charge state needs k >= 0 and k' < 0, got "
                         "k=%s, k'=%s" % (k, k_prime))


def interference_term(
        geom: CavityGeometry,
        k: int,
        k_prime: int,
        E1: UnitPhase,
        E2: Optional[UnitPhase] = None,
) -> float:
    """
    Coefficient of h^2 by which the overlap of the two charge branches
    raises the negativity, 1/2 |E1^(k-k') - 1|^2 |A1_kk'|^2, times
    |(E1 E2)^(k-k') - 1|^2 for a one-way trip. Zero when k - k' is even.
    """
    _check_charge_modes(k, k_prime)
    d = k - k_prime
    if d % 2 == 0:
        return 0.0
    a1 = first_order_entry(k, k_prime, geom.s)
    value = 0.5 * float(_phase_gap(d, E1.signed_turns)) * a1 * a1
    if E2 is not None:
        value *= float(_phase_gap(d, (E1 * E2).signed_turns))
    return value


def negativity_charge(
        geom: CavityGeometry,
        k: int,
        k_prime: int,
        E1: UnitPhase,
        E2: Optional[UnitPhase] = None,
        h_numeric: Optional[float] = None,
) -> Tuple[float, float]:
    """
    Negativity of the charge-entangled state and its interference term

        N = 1/2 - 1/4 (f_k + f_k') h^2 + I h^2

    Returns:
        (negativity, interference coefficient I)
    """
    _check_charge_modes(k, k_prime)
    h = geom.h if h_numeric is None else h_numeric
    if E2 is None:
        f_sum = fk_closed(geom, k, E1) + fk_closed(geom, k_prime, E1)
    else:
        f_sum = oneway_fk(geom, k, E1, E2) + oneway_fk(geom, k_prime, E1, E2)
    term = interference_term(geom, k, k_prime, E1, E2)
    return 0.5 - (0.25 * f_sum - term) * h * h, term


def truncation_tail_bound(
        k: int,
        s: float,
        window: int,
        weight: float = 4.0,
) -> float:
    """Bound on the part of sum_p weight |A1_kp|^2 lying outside -M..M;
    weight bounds the phase factors (4 for f_k, 16 for a one-way trip)"""
    gap = window - abs(k)
    if gap < 1:
        return math.inf
    alpha = 2 * (k + s)
    return weight * 2 / math.pi ** 4 * (
        alpha ** 2 / (5 * gap ** 5) + abs(alpha) / (2 * gap ** 4)
        + 1 / (3 * gap ** 3))


def validity_flag(k: int, h: float, threshold: Optional[float] = None
                  ) -> bool:
    """True when |k| h is outside the perturbative regime"""
    if threshold is None:
        threshold = config["validity_threshold"]
    flagged = abs(k) * h >= threshold
    if flagged:
        logger.warning("|k| h = %.3g >= %.3g, results are outside the "
                       "perturbative regime" % (abs(k) * h, threshold))
    return flagged


class DegradationInputs:
    """
    Inputs of one degradation evaluation

    Args:
        geom: cavity geometry
        k: Rob's mode (particle mode of the charge state)
        scenario: Rob's trajectory
        k_prime: antiparticle mode of the charge state
        h_numeric: acceleration parameter at which measures are evaluated,
            defaults to geom.h
    """

    def __init__(
            self,
            geom: CavityGeometry,
            k: int,
            scenario: TravelScenario,
            k_prime: Optional[int] = None,
            h_numeric: Optional[float] = None,
    ) -> None:
        if k_prime is not None:
            _check_charge_modes(k, k_prime)
        if scenario.geometry != geom:
            raise ValueError("Scenario geometry %r differs from %r" % (
                scenario.geometry, geom))
        h = geom.h if h_numeric is None else float(h_numeric)
        if not h >= 0:
            raise ValueError("h must be non-negative, got %s" % h)
        self.geom = geom
        self.k = k
        self.k_prime = k_prime
        self.scenario = scenario
        self.h_numeric = h
        self.flag = validity_flag(max(abs(k), abs(k_prime or 0)), h)


class EntanglementReport:
    """
    Degradation of one state family along one trajectory

    Args:
        f_k: degradation coefficient of h^2
        negativity: negativity at h_numeric
        chsh_max: Horodecki CHSH maximum, None for the charge family
        interference_term: charge-state interference coefficient
        fk_plus: particle part of f_k
        fk_minus: antiparticle part of f_k
    """

    def __init__(
            self,
            f_k: float,
            negativity: float,
            chsh_max: Optional[float] = None,
            interference_term: float = 0.0,
            fk_plus: float = 0.0,
            fk_minus: float = 0.0,
            **diagnostics,
    ) -> None:
        self.f_k = f_k
        self.negativity = negativity
        self.chsh_max = chsh_max
        self.interference_term = interference_term
        self.fk_plus = fk_plus
        self.fk_minus = fk_minus
        self.diagnostics = diagnostics

    def to_dict(self):
        d = {
            "f_k": self.f_k,
            "negativity": self.negativity,
            "chsh_max": self.chsh_max,
            "interference_term": self.interference_term,
            "fk_plus": self.fk_plus,
            "fk_minus": self.fk_minus,
        }
        d.update(self.diagnostics)
        return d

    def __repr__(self):
        return "EntanglementReport(%s)" % ", ".join(
            "%s=%r" % kv for kv in self.to_dict().items())
