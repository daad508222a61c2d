"""Exact Minkowski to Rindler overlaps by adaptive quadrature.

On the surface t = 0 the boundary phases of the two spinor components
cancel and the overlap of Minkowski mode n with Rindler mode m reduces to

    A_mn = int_a^b cos(Omega_m ln(z/a) - omega_n (z - a)) / sqrt(delta z L) dz

with L = ln(b/a).
"""
import logging
import math
from typing import Optional

import numpy as np
from scipy import integrate

from .config import config
from .errors import QuadratureError
from .geometry import (MINKOWSKI, RINDLER, CavityGeometry, minkowski_frequency,
                       mode_components_at_t0, rindler_frequency)

logger = logging.getLogger(__name__)


def panel_count(geom: CavityGeometry, m: int, n: int) -> int:
    """Number of equal panels in z, two per oscillation of the integrand"""
    turns = (abs(rindler_frequency(geom, m)) * geom.log_ratio
             + abs(minkowski_frequency(geom, n)) * geom.delta) / (2 * math.pi)
    return max(8, int(math.ceil(2 * turns)))


def _integrate_panels(func, geom, panels, tolerance, limit, what):
    edges = np.linspace(geom.a, geom.b, panels + 1)
    total = 0.0
    error = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        result = integrate.quad(func, lo, hi, epsabs=tolerance / panels,
                                epsrel=0.0, limit=limit, full_output=1)
        total += result[0]
        error += result[1]
        if len(result) > 3:
            logger.warning("Quadrature of %s on [%.6g, %.6g]: %s" % (
                what, lo, hi, result[3]))
    if error > tolerance:
        raise QuadratureError("Quadrature of %s did not converge" % what,
                              estimate=error, target=tolerance)
    return total, error


def exact_coefficient(
        geom: CavityGeometry,
        m: int,
        n: int,
        eta_surface: float = 0.0,
        tolerance: Optional[float] = None,
        limit: Optional[int] = None,
) -> complex:
    """
    Overlap of Minkowski mode n with Rindler mode m on the surface t = 0

    Args:
        geom: cavity geometry
        m: Rindler mode index
        n: Minkowski mode index
        eta_surface: rapidity of the comparison surface, only 0 is supported
        tolerance: absolute error target, defaults to
            config["quadrature_tolerance"]
        limit: subdivision limit per panel, defaults to
            config["quadrature_limit"]
    """
    if eta_surface != 0:
        raise ValueError("Overlaps are only available on the surface t = 0")
    if tolerance is None:
        tolerance = config["quadrature_tolerance"]
    if limit is None:
        limit = config["quadrature_limit"]
    a = geom.a
    omega_r = rindler_frequency(geom, m)
    omega_m = minkowski_frequency(geom, n)
    scale = 1 / math.sqrt(geom.delta * geom.log_ratio)

    def integrand(z):
        x = z - a
        return math.cos(omega_r * math.log1p(x / a) - omega_m * x) \
            * scale / math.sqrt(z)

    value, _ = _integrate_panels(integrand, geom, panel_count(geom, m, n),
                                 tolerance, limit, "A[%d, %d]" % (m, n))
    return complex(value, 0.0)


def exact_column(
        geom: CavityGeometry,
        n: int,
        window: Optional[int] = None,
        tolerance: Optional[float] = None,
) -> np.ndarray:
    """Overlaps A_mn for m in -window..window"""
    if window is None:
        window = config["window"]
    return np.array([exact_coefficient(geom, m, n, tolerance=tolerance)
                     for m in range(-window, window + 1)])


def mode_norm(
        geom: CavityGeometry,
        n: int,
        frame: str = MINKOWSKI,
        tolerance: Optional[float] = None,
) -> float:
    """int_a^b (|c+|^2 + |c-|^2) dz of the t = 0 mode components"""
    if tolerance is None:
        tolerance = config["quadrature_tolerance"]

    def density(z):
        plus, minus = mode_components_at_t0(geom, n, z, frame)
        return abs(plus) ** 2 + abs(minus) ** 2

    value, _ = _integrate_panels(density, geom, 8, tolerance,
                                 config["quadrature_limit"],
                                 "norm of %s mode %d" % (frame, n))
    return value


def overlap_from_components(
        geom: CavityGeometry,
        m: int,
        n: int,
        tolerance: Optional[float] = None,
) -> complex:
    """Overlap built directly from the two-component mode functions,
    including the boundary phase"""
    if tolerance is None:
        tolerance = config["quadrature_tolerance"]

    def product(z):
        mp, mm = mode_components_at_t0(geom, n, z, MINKOWSKI)
        rp, rm = mode_components_at_t0(geom, m, z, RINDLER)
        return mp.conjugate() * rp + mm.conjugate() * rm

    panels = panel_count(geom, m, n)
    limit = config["quadrature_limit"]
    re, _ = _integrate_panels(lambda z: product(z).real, geom, panels,
                              tolerance, limit, "Re A[%d, %d]" % (m, n))
    im, _ = _integrate_panels(lambda z: product(z).imag, geom, panels,
                              tolerance, limit, "Im A[%d, %d]" % (m, n))
    return complex(re, im)
