"""The exponentially weighted ladder operator and its quadrature pair.

The operator X lowers the ladder index with an exponential weight,

    X |l> = e^{-l + 1/2} |l - 1>,

equivalently X = e^{L^2/2} E e^{-L^2/2} (the weight is evaluated on the
index *after* the shift; the similarity form is sensitive to that ordering
and pins it down).  It obeys the same commutation relation with L as the
unitary shift does, [X, L] = X, so the whole bound construction can be
replayed with the quadrature-like Hermitian pair

    Q = (X + X^dag)/2,     P = i (X - X^dag)/2,

whose means are <Q> = Re<X> and <P> = -Im<X>, mirroring the sine/cosine
conventions of :mod:`circle_uncertainty.moments`.

The exponential weights blow up on the negative half ladder, so moments
are guarded: first moments need |l| + 1 <= 700, second moments
2|l| + 2 <= 700 (exponent magnitude within double range).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .states import CircleState, require_normalized

#: Largest exponent magnitude allowed in the ladder weights.
EXP_LIMIT = 700.0


class ShiftedVector(NamedTuple):
    """Unnormalized coefficient vector produced by applying X."""

    l_min: int
    coeffs: np.ndarray


@dataclass(frozen=True)
class XMoments:
    """Moments of X and of its quadrature pair."""

    x1: complex
    x2: complex
    xdx: float  # <X^dag X>
    q1: float
    p1: float
    var_q: float
    var_p: float
    cov_qp: float


def _weights(ells: np.ndarray) -> np.ndarray:
    # weight attached to the source index: X|l> = e^{-l + 1/2} |l - 1>
    return np.exp(-ells.astype(float) + 0.5)


def apply_x(state: CircleState) -> ShiftedVector:
    """Coefficients of X psi on the window [l_min - 1, l_max - 1].

    (X psi)_m = e^{-m - 1/2} c_{m+1}.
    """
    if state.l_min <= -4096:
        raise DomainError("no room to shift below l_min = -4096")
    _check_exponents(np.abs(state.ells) + 1)
    return ShiftedVector(state.l_min - 1, _weights(state.ells) * state.coeffs)


def _check_exponents(magnitudes) -> None:
    worst = float(np.max(magnitudes))
    if worst > EXP_LIMIT:
        raise DomainError(
            f"ladder weight exponent {worst:.0f} exceeds {EXP_LIMIT:.0f}; "
            "window too wide for the exponential weights"
        )


def x_moments(state: CircleState) -> XMoments:
    """First and second moments of X, Q, P for a normalized state."""
    require_normalized(state)
    ells = state.ells.astype(float)
    _check_exponents(2.0 * np.abs(ells) + 2.0)
    c = state.coeffs
    p = np.abs(c) ** 2
    # <X> = sum_m c*_m c_{m+1} e^{-m-1/2}, m over [l_min, l_max-1]
    x1 = complex(np.sum(np.conj(c[:-1]) * c[1:] * np.exp(-ells[:-1] - 0.5)))
    # <X^2> = sum_m c*_m c_{m+2} e^{-2m-2}
    x2 = (
        complex(np.sum(np.conj(c[:-2]) * c[2:] * np.exp(-2.0 * ells[:-2] - 2.0)))
        if c.size > 2
        else 0.0 + 0.0j
    )
    xdx = float(np.sum(p * np.exp(-2.0 * ells + 1.0)))
    xxd = float(np.sum(p * np.exp(-2.0 * ells - 1.0)))
    q1 = x1.real
    p1 = -x1.imag
    q2 = (2.0 * x2.real + xdx + xxd) / 4.0
    p2 = (xdx + xxd - 2.0 * x2.real) / 4.0
    # Symmetrized product: <(QP + PQ)/2> = -Im<X^2>/2.
    cov_qp = -x2.imag / 2.0 - q1 * p1
    return XMoments(
        x1=x1,
        x2=x2,
        xdx=xdx,
        q1=q1,
        p1=p1,
        var_q=max(0.0, q2 - q1 * q1),
        var_p=max(0.0, p2 - p1 * p1),
        cov_qp=cov_qp,
    )


def commutator_residual(state: CircleState) -> float:
    """|([X, L] - X) psi| / |X psi|; zero when [X, L] = X holds."""
    xs = apply_x(state)
    # X L psi: scale c_l by l before shifting; L X psi: scale the shifted
    # vector by its own indices.
    ells = state.ells.astype(float)
    xl = _weights(state.ells) * (ells * state.coeffs)
    out_ells = np.arange(xs.l_min, xs.l_min + xs.coeffs.size, dtype=np.float64)
    lx = out_ells * xs.coeffs
    resid = (xl - lx) - xs.coeffs
    denom = float(np.linalg.norm(xs.coeffs))
    if denom == 0.0:
        return 0.0
    return float(np.linalg.norm(resid)) / denom


def similarity_residual(state: CircleState) -> float:
    """Componentwise defect of X psi against e^{L^2/2} E e^{-L^2/2} psi,
    relative to |X psi|.  Requires a narrow window (|l| <= 37) so the
    Gaussian factors stay representable."""
    ells = state.ells.astype(float)
    out_ells = np.arange(state.l_min - 1, state.l_max, dtype=np.float64)
    _check_exponents(np.maximum(ells * ells, out_ells * out_ells) / 2.0)
    damped = state.coeffs * np.exp(-(ells**2) / 2.0)
    # E shifts every slot down one index, so the damped vector lands
    # unchanged on the window [l_min - 1, l_max - 1].
    similar = np.exp(out_ells**2 / 2.0) * damped
    xs = apply_x(state)
    denom = float(np.linalg.norm(xs.coeffs))
    if denom == 0.0:
        return 0.0
    return float(np.linalg.norm(xs.coeffs - similar)) / denom


def u2_from_x_moments(xm: XMoments) -> float:
    """Frame-optimized lower bound on (dL)^2 built from the Q/P pair.

    Same closed form as the circular case with (Q, P) in place of (C, S):
    (1/4) c^t Gamma_X^{-1} c with c = (Re<X>, Im<X>) and Gamma_X the
    covariance of the pair ordered (P, Q).  Returns 0 for c = 0.
    """
    cx, cy = xm.q1, -xm.p1
    if cx == 0.0 and cy == 0.0:
        return 0.0
    det = xm.var_p * xm.var_q - xm.cov_qp * xm.cov_qp
    if det <= 1e-14:
        raise DomainError(f"singular quadrature covariance (det {det:.3e})")
    quad = cx * cx * xm.var_q - 2.0 * cx * cy * xm.cov_qp + cy * cy * xm.var_p
    return 0.25 * quad / det
