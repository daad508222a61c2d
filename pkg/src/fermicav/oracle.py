"""Entanglement of the transformed states from explicit density matrices.

The reduced states are assembled from the grafted Bogoliubov matrix,
partially transposed on Alice's factor and diagonalised block by block
with closed-form eigenvalues, so the result does not depend on the
closed-form degradation functions.
"""
import logging
import math
from typing import List, Optional

import numpy as np

from .bogoliubov import (PerturbativeMatrix, TravelScenario, graft,
                         leakage_weights)
from .config import config
from .errors import ToleranceError
from .geometry import CavityGeometry

logger = logging.getLogger(__name__)

TWO_MODE_PLUS = "two-mode-plus"
TWO_MODE_MINUS = "two-mode-minus"
CHARGE = "charge"
STATE_FAMILIES = (TWO_MODE_PLUS, TWO_MODE_MINUS, CHARGE)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def hermitian_eigenvalues_2x2(a: float, b: float, x: complex) -> List[float]:
    """Eigenvalues of [[a, x*], [x, b]] in ascending order"""
    mean = 0.5 * (a + b)
    radius = math.hypot(0.5 * (a - b), abs(x))
    return [mean - radius, mean + radius]


def _det3(m):
    return (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))


def hermitian_eigenvalues_3x3(mat: np.ndarray) -> List[float]:
    """Eigenvalues of a Hermitian 3x3 matrix in ascending order, from the
    trigonometric solution of the characteristic cubic"""
    mat = np.asarray(mat, dtype=complex)
    p1 = abs(mat[0, 1]) ** 2 + abs(mat[0, 2]) ** 2 + abs(mat[1, 2]) ** 2
    diag = mat.diagonal().real
    if p1 == 0:
        return sorted(float(d) for d in diag)
    q = float(np.sum(diag)) / 3
    p2 = float(np.sum((diag - q) ** 2)) + 2 * p1
    p = math.sqrt(p2 / 6)
    shifted = (mat - q * np.eye(3)) / p
    r = _det3(shifted).real / 2
    r = min(1.0, max(-1.0, r))
    phi = math.acos(r) / 3
    largest = q + 2 * p * math.cos(phi)
    smallest = q + 2 * p * math.cos(phi + 2 * math.pi / 3)
    return [smallest, 3 * q - largest - smallest, largest]


def _blocks(mat):
    """Index sets of the connected blocks of a Hermitian matrix"""
    size = mat.shape[0]
    coupled = mat != 0
    seen = set()
    blocks = []
    for start in range(size):
        if start in seen:
            continue
        block = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            block.append(i)
            for j in np.nonzero(coupled[i])[0]:
                j = int(j)
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        blocks.append(sorted(block))
    return blocks


def block_eigenvalues(mat: np.ndarray) -> List[float]:
    """Eigenvalues of a Hermitian matrix whose connected blocks are at most
    3x3"""
    mat = np.asarray(mat, dtype=complex)
    values = []
    for block in _blocks(mat):
        sub = mat[np.ix_(block, block)]
        if len(block) == 1:
            values.append(float(sub[0, 0].real))
        elif len(block) == 2:
            values.extend(hermitian_eigenvalues_2x2(
                sub[0, 0].real, sub[1, 1].real, sub[1, 0]))
        elif len(block) == 3:
            values.extend(hermitian_eigenvalues_3x3(sub))
        else:
            raise ValueError("Block of size %d has no closed-form "
                             "eigenvalues" % len(block))
    return sorted(values)


def partial_transpose(
        rho: np.ndarray,
        dims: tuple,
        subsystem: int = 0,
) -> np.ndarray:
    """Partial transpose of a bipartite density matrix"""
    da, db = dims
    t = np.asarray(rho).reshape(da, db, da, db)
    if subsystem == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(da * db, da * db)


def negativity_of(rho: np.ndarray, dims: tuple) -> float:
    eigs = block_eigenvalues(partial_transpose(rho, dims))
    return float(sum(-e for e in eigs if e < 0))


def correlation_matrix(rho: np.ndarray) -> np.ndarray:
    """t_ij = Tr[rho sigma_i (x) sigma_j] of a two-qubit state"""
    t = np.empty((3, 3))
    for i, si in enumerate(PAULI):
        for j, sj in enumerate(PAULI):
            t[i, j] = np.trace(rho @ np.kron(si, sj)).real
    return t


def horodecki_chsh(u_matrix: np.ndarray) -> float:
    """2 sqrt(mu1 + mu2) from the two largest eigenvalues of U = T^T T"""
    eigs = hermitian_eigenvalues_3x3(u_matrix)
    return 2 * math.sqrt(max(0.0, eigs[1] + eigs[2]))


def chsh_of(rho: np.ndarray) -> float:
    t = correlation_matrix(rho)
    return horodecki_chsh(t.T @ t)


def two_mode_density(
        matrix: PerturbativeMatrix,
        k: int,
        h: float,
        sign: int = 1,
        alice_charge: str = "+",
) -> np.ndarray:
    """
    Alice-Rob state of (|0>|0> + sign |1>|1_k>)/sqrt(2) after Rob's cavity
    follows the trajectory of `matrix`, basis |n_A n_k>

    Args:
        matrix: grafted Bogoliubov matrix of Rob's cavity
        k: Rob's mode
        h: acceleration parameter
        sign: relative sign of the superposition
        alice_charge: charge of Alice's excitation, an antiparticle picks up
            a fermionic ordering sign
    """
    h2 = h * h
    pos = matrix.position(k)
    f_plus, f_minus = leakage_weights(matrix, k)
    c = matrix.order0[pos] + h2 * matrix.order2[pos, pos]
    if k < 0:
        c = c.conjugate()
        f_plus, f_minus = f_minus, f_plus
    kappa = 1 if alice_charge == "+" else -1
    rho = np.diag([1 - f_minus * h2, f_minus * h2, f_plus * h2,
                   1 - f_plus * h2]).astype(complex) / 2
    rho[0, 3] = 0.5 * sign * kappa * c
    rho[3, 0] = 0.5 * sign * kappa * c.conjugate()
    return rho


def charge_density(
        matrix: PerturbativeMatrix,
        k: int,
        k_prime: int,
        h: float,
        sign: int = 1,
        ordering_sign: int = 1,
) -> np.ndarray:
    """
    Alice-Rob state of (|a>|1_k'^-> + sign |b>|1_k^+>)/sqrt(2) after Rob's
    cavity follows the trajectory of `matrix`

    Alice's basis is {a, b} = {1_k^+, 1_k'^-}; Rob's basis is
    |n_k n_k'> = 00, 01, 10, 11. ordering_sign flips the off-diagonal
    elements, which is the freedom in ordering the two-particle basis.
    """
    h2 = h * h
    pk = matrix.position(k)
    pkp = matrix.position(k_prime)
    g_k = matrix.order0[pk]
    g_kp = matrix.order0[pkp]
    a1sq = abs(matrix.order1[pk, pkp]) ** 2
    fp_k, fm_k = leakage_weights(matrix, k)
    fp_kp, fm_kp = leakage_weights(matrix, k_prime)
    col_k = matrix.order1[:, pk].conj()
    col_kp = matrix.order1[:, pkp]
    plus = matrix.indices >= 0
    phase = g_k * g_kp.conjugate()
    x_minus = phase * np.sum(col_k[~plus] * col_kp[~plus])
    x_plus = phase * np.sum(col_k[plus] * col_kp[plus])

    r_minus = np.diag([fm_kp * h2, 1 - (fm_kp + fm_k - a1sq) * h2, 0.0,
                       (fm_k - a1sq) * h2]).astype(complex)
    r_minus[0, 3] = ordering_sign * x_minus * h2
    r_minus[3, 0] = r_minus[0, 3].conjugate()
    r_plus = np.diag([fp_k * h2, 0.0, 1 - (fp_kp + fp_k - a1sq) * h2,
                      (fp_kp - a1sq) * h2]).astype(complex)
    r_plus[0, 3] = -ordering_sign * x_plus * h2
    r_plus[3, 0] = r_plus[0, 3].conjugate()
    y = g_k.conjugate() * g_kp.conjugate() * (1 + a1sq * h2) + h2 * (
        g_kp.conjugate() * matrix.order2[pk, pk].conjugate()
        + g_k.conjugate() * matrix.order2[pkp, pkp].conjugate())

    rho = np.zeros((8, 8), dtype=complex)
    rho[:4, :4] = 0.5 * r_minus
    rho[4:, 4:] = 0.5 * r_plus
    # |a>|01> <-> |b>|10>
    rho[1, 6] = 0.5 * sign * ordering_sign * y.conjugate()
    rho[6, 1] = 0.5 * sign * ordering_sign * y
    return rho


class OracleResult:
    """
    Entanglement read off an explicit density matrix

    Args:
        negativity: sum of |negative eigenvalues| of the partial transpose
        chsh: Horodecki CHSH maximum, None for the charge family
        density: the reduced density matrix
    """

    def __init__(
            self,
            negativity: float,
            chsh: Optional[float],
            density: np.ndarray,
    ) -> None:
        self.negativity = negativity
        self.chsh = chsh
        self.density = density

    def __repr__(self):
        return "OracleResult(negativity=%r, chsh=%r)" % (self.negativity,
                                                         self.chsh)


def density_matrix_oracle(
        geom: CavityGeometry,
        state_family: str,
        k: int,
        k_prime: Optional[int] = None,
        scenario: Optional[TravelScenario] = None,
        h_numeric: Optional[float] = None,
        window: Optional[int] = None,
        matrix: Optional[PerturbativeMatrix] = None,
        alice_charge: str = "+",
        ordering_sign: int = 1,
) -> OracleResult:
    """
    Negativity and CHSH maximum of a transformed state from its explicit
    density matrix

    Args:
        geom: cavity geometry
        state_family: two-mode-plus, two-mode-minus or charge
        k: Rob's mode (particle mode of the charge state)
        k_prime: antiparticle mode of the charge state
        scenario: Rob's trajectory
        h_numeric: acceleration parameter, defaults to geom.h
        window: truncation window M of the graft
        matrix: previously grafted matrix of the scenario
        alice_charge: charge of Alice's excitation in the two-mode states
        ordering_sign: two-particle basis ordering of the charge state
    """
    if state_family not in STATE_FAMILIES:
        raise ValueError("Unknown state family %s, expected one of %s" % (
            state_family, STATE_FAMILIES))
    if state_family == CHARGE:
        if k_prime is None or k < 0 or k_prime >= 0:
            raise ValueError("The charge state needs k >= 0 and k' < 0, got "
                             "k=%s, k'=%s" % (k, k_prime))
    elif k_prime is not None:
        raise ValueError("Two-mode states take a single mode, got k'=%s"
                         % k_prime)
    if alice_charge not in ("+", "-") or ordering_sign not in (1, -1):
        raise ValueError("Invalid state variant (%s, %s)" % (
            alice_charge, ordering_sign))
    if matrix is None:
        if scenario is None:
            raise ValueError("Either a scenario or a grafted matrix is "
                             "required")
        if scenario.geometry != geom:
            raise ValueError("Scenario geometry %r differs from %r" % (
                scenario.geometry, geom))
        matrix = graft(scenario, window)
    h = geom.h if h_numeric is None else h_numeric

    if state_family == CHARGE:
        rho = charge_density(matrix, k, k_prime, h,
                             ordering_sign=ordering_sign)
        dims = (2, 4)
    else:
        sign = 1 if state_family == TWO_MODE_PLUS else -1
        rho = two_mode_density(matrix, k, h, sign, alice_charge)
        dims = (2, 2)
    trace_error = abs(np.trace(rho) - 1)
    if trace_error > config["absolute_tolerance"]:
        raise ToleranceError("Reduced state has trace error %.3e" %
                             trace_error)
    chsh = chsh_of(rho) if state_family != CHARGE else None
    result = OracleResult(negativity_of(rho, dims), chsh, rho)
    logger.debug("Oracle %s k=%s k'=%s h=%s: %r" % (
        state_family, k, k_prime, h, result))
    return result
