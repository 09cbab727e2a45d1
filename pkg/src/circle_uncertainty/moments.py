"""Circular and angular-momentum moments, and the 2x2 covariance matrix.

Conventions (fixed once, used everywhere):

* E denotes the unitary shift-down operator on the ladder, acting as
  multiplication by e^{-i phi} on the angle grid.  Its Hermitian parts
  are the cosine and sine multiplication operators,

      C = (E + E^dag)/2,     S = i (E - E^dag)/2,

  so <C> = Re<E> and <S> = -Im<E>, and since E is unitary

      <C^2> = (1 + Re<E^2>)/2,  <S^2> = (1 - Re<E^2>)/2,
      <CS>  = -Im<E^2>/2.

* The covariance matrix is ordered with the sine variance first,

      Gamma = [[(dS)^2, d(CS)], [d(CS), (dC)^2]],

  which pairs its first axis with <C> in the frame-optimization bound
  (see :mod:`circle_uncertainty.bounds`).

All functions are pure; inputs are never mutated.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, NumericalError
from .states import CircleState, require_normalized, to_grid

#: Most negative covariance eigenvalue tolerated before declaring the
#: matrix broken; anything in [-EIG_CLAMP, 0) is clamped to zero.
EIG_CLAMP = 1e-12


@dataclass(frozen=True)
class AngularMoments:
    """First and second moments of the shift operator and of L."""

    e1: complex
    e2: complex
    l1: float
    l2: float


@dataclass(frozen=True)
class CovarianceMatrix:
    """Covariance of the sine/cosine pair with its derived invariants."""

    var_s: float
    var_c: float
    cov_cs: float
    trace: float
    det: float
    gamma_minus: float
    gamma_plus: float


def moments_from_coeffs(state: CircleState) -> AngularMoments:
    """Ladder-sum moments: <E> = sum c*_{l-1} c_l, <E^2> = sum c*_{l-2} c_l,
    <L> = sum l |c_l|^2, <L^2> = sum l^2 |c_l|^2."""
    require_normalized(state)
    e1, e2, l1, l2 = _kernels.coeff_moments(state.coeffs, state.l_min)
    return AngularMoments(e1=e1, e2=e2, l1=l1, l2=l2)


def quadrature_oracle(state: CircleState, n_points: int) -> AngularMoments:
    """Independent moment path: circular moments as grid sums of e^{-i phi}
    and e^{-2 i phi} against the sampled density.  L moments come from the
    coefficients (L has no bounded angle representation)."""
    m = state.l_max - state.l_min + 1
    if n_points < 4 * m:
        raise DomainError(f"n_points must be >= {4 * m} for this window")
    grid = to_grid(state, n_points)
    e1, e2 = _kernels.grid_e_moments(grid.values)
    ells = state.ells.astype(float)
    p = np.abs(state.coeffs) ** 2
    return AngularMoments(
        e1=e1,
        e2=e2,
        l1=float(np.dot(ells, p)),
        l2=float(np.dot(ells * ells, p)),
    )


def covariance(m: AngularMoments) -> CovarianceMatrix:
    """Assemble the sine/cosine covariance matrix from the moments."""
    c_mean = m.e1.real
    s_mean = -m.e1.imag
    var_c = (1.0 + m.e2.real) / 2.0 - c_mean * c_mean
    var_s = (1.0 - m.e2.real) / 2.0 - s_mean * s_mean
    cov_cs = -m.e2.imag / 2.0 - c_mean * s_mean
    trace = var_s + var_c
    det = var_s * var_c - cov_cs * cov_cs
    # (tr^2 - 4 det) rewritten without cancellation; exactly >= 0.
    disc = math.sqrt((var_s - var_c) ** 2 + 4.0 * cov_cs * cov_cs)
    g_minus = (trace - disc) / 2.0
    g_plus = (trace + disc) / 2.0
    if g_minus < 0.0:
        if g_minus < -EIG_CLAMP:
            raise NumericalError(
                f"covariance matrix has eigenvalue {g_minus:.3e} < -{EIG_CLAMP}"
            )
        g_minus = 0.0
    return CovarianceMatrix(
        var_s=var_s,
        var_c=var_c,
        cov_cs=cov_cs,
        trace=trace,
        det=det,
        gamma_minus=g_minus,
        gamma_plus=g_plus,
    )


def dispersion_e(m: AngularMoments) -> float:
    """Circular variance 1 - |<E>|^2, in [0, 1]."""
    val = 1.0 - abs(m.e1) ** 2
    return min(1.0, max(0.0, val))


def dispersion_l(m: AngularMoments) -> float:
    """Angular-momentum variance <L^2> - <L>^2."""
    return max(0.0, m.l2 - m.l1 * m.l1)


def resultant_vector(m: AngularMoments) -> tuple[float, float]:
    """Mean resultant of <E> in the complex plane, (Re<E>, Im<E>).

    This equals (<C>, -<S>) and is the vector that enters the
    frame-optimized bound; its squared length is 1 - tr Gamma.
    """
    return (m.e1.real, m.e1.imag)


def rotate_moments(m: AngularMoments, phi_prime: float) -> AngularMoments:
    """Moments of the rotated state: e1 -> e^{-i phi'} e1, e2 -> e^{-2i phi'} e2."""
    return AngularMoments(
        e1=m.e1 * cmath.exp(-1j * phi_prime),
        e2=m.e2 * cmath.exp(-2j * phi_prime),
        l1=m.l1,
        l2=m.l2,
    )


def aligned_covariance(m: AngularMoments) -> CovarianceMatrix:
    """Covariance in the mean-aligned frame (the rotation that makes <E>
    real and positive).  For a vanishing resultant the frame is left as is."""
    if abs(m.e1) > 0.0:
        m = rotate_moments(m, cmath.phase(m.e1))
    return covariance(m)


def rotated_frame_stats(m: AngularMoments, alpha: float):
    """Means and covariances of the frame-rotated pair

        C_a = C cos a - S sin a,   S_a = S cos a + C sin a.

    Returns (c_mean_a, s_mean_a, var_c_a, var_s_a, cov_a).
    """
    g = covariance(m)
    c_mean = m.e1.real
    s_mean = -m.e1.imag
    ca, sa = math.cos(alpha), math.sin(alpha)
    c_mean_a = c_mean * ca - s_mean * sa
    s_mean_a = s_mean * ca + c_mean * sa
    var_s_a = g.var_s * ca * ca + 2.0 * g.cov_cs * sa * ca + g.var_c * sa * sa
    var_c_a = g.var_c * ca * ca - 2.0 * g.cov_cs * sa * ca + g.var_s * sa * sa
    cov_a = (g.var_c - g.var_s) * sa * ca + g.cov_cs * (ca * ca - sa * sa)
    return c_mean_a, s_mean_a, var_c_a, var_s_a, cov_a


def resultant_identity_gap(m: AngularMoments) -> float:
    """|<E>|^2 - (1 - tr Gamma); identically zero up to roundoff."""
    g = covariance(m)
    return abs(m.e1) ** 2 - (1.0 - g.trace)


def second_moment_identity(m: AngularMoments) -> tuple[float, float, float]:
    """The two readings of the squared-spread identity.

    Returns (pseudo, matrix, printed) where

    * pseudo  = |<E^2> - <E>^2|^2, the squared modulus of the complex
      second central moment of E,
    * matrix  = (tr Gamma)^2 - 4 det Gamma, the squared eigenvalue gap,
    * printed = (1 - |<E>|^2)^2, the square of the real circular variance.

    ``pseudo == matrix`` is an exact identity.  ``printed`` generally
    differs from both (for an L eigenstate it is 1 while the others are 0);
    it is reported so the discrepancy is visible rather than asserted away.
    """
    g = covariance(m)
    pseudo = abs(m.e2 - m.e1 * m.e1) ** 2
    matrix = g.trace * g.trace - 4.0 * g.det
    printed = (1.0 - abs(m.e1) ** 2) ** 2
    return pseudo, matrix, printed
