"""Uncertainty bounds for the angular-momentum variance.

Three nested lower bounds on (dL)^2 are computed for any normalized state:

* standard:   (1 - (dE)^2) / (4 (dE)^2), the Robertson bound written with
  the circular variance (dE)^2 = 1 - |<E>|^2.
* invariant (v2):   |<E>|^2 / (4 gamma_plus), built from the two basic
  invariants of the sine/cosine covariance matrix.
* frame-optimized (u2):   (1/4) max over frame angles of
  <C_a>^2 / (dS_a)^2, equal in closed form to (1/4) c^t Gamma^{-1} c with
  c = (Re<E>, Im<E>) the mean resultant vector.

The chain (dL)^2 >= u2 >= v2 >= standard always holds; von Mises states
saturate the first two links.  Note the closed form takes the resultant
vector (Re<E>, Im<E>) = (<C>, -<S>), not (<C>, <S>): pairing <C> with the
sine-variance axis of Gamma requires conjugating the sign of the sine
component, and the alpha sweep cross-checks this exactly.

u2 and v2 are invariant under rotations of the state, unlike the
individual entries of the covariance matrix.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .moments import (
    AngularMoments,
    CovarianceMatrix,
    aligned_covariance,
    covariance,
    dispersion_e,
    dispersion_l,
    moments_from_coeffs,
    resultant_vector,
)
from .states import CircleState

#: Allowed negative slack when asserting the ordering chain.
CHAIN_SLACK = 1e-10

#: Default absolute tolerance for saturation diagnostics (scaled by
#: max(1, (dL)^2) where bound differences are compared).
SATURATION_TOL = 1e-8

_DEGENERATE = 1e-14

#: Golden-section shrink factor.
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SaturationFlags:
    """Diagnostics for the saturation structure of the bound chain.

    The first two conditions are evaluated in the mean-aligned frame
    (resultant rotated onto the positive cosine axis), where together they
    are exactly equivalent to u2 == v2.
    """

    symmetric_cov: bool  # d(CS) == 0 in the aligned frame
    spread_ordered: bool  # (dS)^2 >= (dC)^2 in the aligned frame
    u2_equals_v2: bool
    u2_equals_var_l: bool


@dataclass(frozen=True)
class BoundsReport:
    """All bounds and saturation flags for one state."""

    var_l: float
    var_e: float
    standard: float
    v2: float
    u2: float
    alpha_star: float
    sat_u2: bool
    sat_symmetry: bool
    sat_ordering_chain: bool


def standard_bound(var_e: float) -> float:
    """(1 - var_e) / (4 var_e) for var_e in (0, 1]."""
    if not (0.0 < var_e <= 1.0):
        raise DomainError(f"circular variance must lie in (0, 1], got {var_e!r}")
    return 0.25 * (1.0 - var_e) / var_e


def v2_bound(gamma: CovarianceMatrix) -> float:
    """Invariant bound |<E>|^2 / (4 gamma_plus) from trace and determinant."""
    if gamma.trace <= _DEGENERATE:
        raise NumericalError(
            f"degenerate covariance (trace {gamma.trace:.3e}); "
            "no normalizable state reaches this"
        )
    resultant_sq = max(0.0, 1.0 - gamma.trace)
    return 0.25 * 2.0 * resultant_sq / (gamma.trace + (gamma.gamma_plus - gamma.gamma_minus))


def u2_closed_form(gamma: CovarianceMatrix, c_vec: tuple[float, float]) -> float:
    """(1/4) c^t Gamma^{-1} c for a 2-vector c.

    Callers computing the frame-optimized bound pass the mean resultant
    (Re<E>, Im<E>).  Returns 0 for c = 0 (the maximized ratio is
    identically zero); raises for a singular matrix with c != 0.
    """
    cx, cy = c_vec
    norm_sq = cx * cx + cy * cy
    if norm_sq == 0.0:
        return 0.0
    if gamma.det <= _DEGENERATE:
        raise NumericalError(
            f"singular covariance (det {gamma.det:.3e}) with nonzero resultant"
        )
    quad = (
        cx * cx * gamma.var_c - 2.0 * cx * cy * gamma.cov_cs + cy * cy * gamma.var_s
    )
    return 0.25 * quad / gamma.det


def _sweep_objective(gamma: CovarianceMatrix, c_vec, alphas):
    """(1/4) <C_a>^2 / (dS_a)^2 on an array of frame angles.

    <C_a> = <C> cos a - <S> sin a and (dS_a)^2 = x^t Gamma x with
    x = (cos a, sin a).
    """
    cx, cy = c_vec  # (Re<E>, Im<E>) = (<C>, -<S>)
    ca = np.cos(alphas)
    sa = np.sin(alphas)
    num = (cx * ca + cy * sa) ** 2
    den = gamma.var_s * ca * ca + 2.0 * gamma.cov_cs * sa * ca + gamma.var_c * sa * sa
    return 0.25 * num / den


def u2_alpha_sweep(state: CircleState, n_alpha: int = 720) -> tuple[float, float]:
    """Maximize the frame-rotated ratio by dense scan plus golden-section
    refinement.  Returns (maximum, maximizer in [0, 2 pi))."""
    if n_alpha < 360:
        raise DomainError(f"n_alpha must be >= 360, got {n_alpha}")
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    c_vec = resultant_vector(m)
    if c_vec[0] == 0.0 and c_vec[1] == 0.0:
        return 0.0, 0.0
    alphas = np.linspace(0.0, 2.0 * math.pi, n_alpha, endpoint=False)
    vals = _sweep_objective(gamma, c_vec, alphas)
    i = int(np.argmax(vals))
    step = 2.0 * math.pi / n_alpha
    lo, hi = alphas[i] - step, alphas[i] + step

    def f(a):
        return float(_sweep_objective(gamma, c_vec, np.array([a]))[0])

    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > 1e-10:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
    alpha_star = ((a + b) / 2.0) % (2.0 * math.pi)
    ca, sa = math.cos(alpha_star), math.sin(alpha_star)
    var_s_a = (
        gamma.var_s * ca * ca + 2.0 * gamma.cov_cs * sa * ca + gamma.var_c * sa * sa
    )
    if var_s_a < _DEGENERATE:
        raise NumericalError(
            f"degenerate rotated variance {var_s_a:.3e} at the maximizer"
        )
    return f(alpha_star), float(alpha_star)


def saturation_flags(state: CircleState, tol: float = SATURATION_TOL) -> SaturationFlags:
    """Evaluate the saturation conditions of the bound chain."""
    if not (0.0 < tol <= 1e-4):
        raise DomainError(f"tol must lie in (0, 1e-4], got {tol!r}")
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    aligned = aligned_covariance(m)
    var_l = dispersion_l(m)
    scale = max(1.0, var_l)
    u2 = u2_closed_form(gamma, resultant_vector(m))
    v2 = v2_bound(gamma)
    return SaturationFlags(
        symmetric_cov=abs(aligned.cov_cs) <= tol,
        spread_ordered=aligned.var_s >= aligned.var_c - tol,
        u2_equals_v2=abs(u2 - v2) <= tol * scale,
        u2_equals_var_l=abs(var_l - u2) <= tol * scale,
    )


def chain_holds(var_l: float, u2: float, v2: float, standard: float,
                slack: float = CHAIN_SLACK) -> bool:
    return var_l >= u2 - slack and u2 >= v2 - slack and v2 >= standard - slack


def full_report(state: CircleState, sat_tol: float = SATURATION_TOL) -> BoundsReport:
    """Compute every bound and flag for one normalized state."""
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    var_l = dispersion_l(m)
    var_e = dispersion_e(m)
    c_vec = resultant_vector(m)
    u2 = u2_closed_form(gamma, c_vec)
    v2 = v2_bound(gamma)
    std = standard_bound(var_e) if var_e > 0.0 else float("inf")
    if c_vec[0] == 0.0 and c_vec[1] == 0.0:
        alpha_star = 0.0
    else:
        _, alpha_star = u2_alpha_sweep(state)
    flags = saturation_flags(state, tol=sat_tol)
    return BoundsReport(
        var_l=var_l,
        var_e=var_e,
        standard=std,
        v2=v2,
        u2=u2,
        alpha_star=alpha_star,
        sat_u2=flags.u2_equals_var_l,
        sat_symmetry=flags.symmetric_cov,
        sat_ordering_chain=chain_holds(var_l, u2, v2, std),
    )
