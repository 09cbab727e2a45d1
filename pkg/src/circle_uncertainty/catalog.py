"""Constructors for the named state families.

* von Mises states: the minimum-uncertainty (intelligent) states of the
  angle/angular-momentum pair, with wavefunction

      psi(phi) = exp[i lam phi + kappa cos(phi + alpha)] / sqrt(2 pi I_0(2 kappa)).

  lam is the mean angular momentum (an integer, or the wavefunction would
  not be single-valued on the circle), kappa the angular concentration,
  alpha the orientation of the symmetry axis (density peaks at -alpha).

* the angular cat state: an equal superposition of the kappa-concentrated
  von Mises states with mean angular momentum 0 and 1,

      psi(phi) = [exp(kappa cos phi) - i exp(i phi + kappa cos phi)]
                 / sqrt(4 pi I_0(2 kappa)),

  whose density e^{2 kappa cos phi} (1 + sin phi) / (2 pi I_0(2 kappa))
  has no reflection symmetry for kappa > 0.

* angular-momentum eigenstates.

* Gaussian-damped von Mises states (coefficients multiplied by
  e^{-l^2/2} and renormalized), the transformed extremal family of the
  exponentially weighted ladder operator in :mod:`circle_uncertainty.ladder`.

The default truncation tolerance here is much tighter than the general
one in :mod:`circle_uncertainty.states`: the intelligent-state residual
check needs edge amplitudes around 1e-12, i.e. edge probabilities around
1e-24, and the super-exponential coefficient decay makes that cheap.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .special import bessel_i
from .states import TWO_PI, CircleState, from_wavefunction, make_state

MAX_KAPPA = 50.0

#: Edge-pair probability for catalog constructors (see module docstring).
CATALOG_TAIL_TOL = 1e-24


@dataclass(frozen=True)
class VonMisesParams:
    """Parameters (kappa, lam, alpha) of a von Mises state."""

    kappa: float
    lam: int = 0
    alpha: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.kappa <= MAX_KAPPA):
            raise DomainError(
                f"kappa must lie in [0, {MAX_KAPPA}], got {self.kappa!r}"
            )
        if self.lam != int(self.lam):
            raise DomainError(f"lam must be an integer, got {self.lam!r}")
        object.__setattr__(self, "lam", int(self.lam))
        object.__setattr__(self, "kappa", float(self.kappa))
        object.__setattr__(self, "alpha", float(self.alpha))


def von_mises(p: VonMisesParams, tail_tol: float = CATALOG_TAIL_TOL) -> CircleState:
    """Truncated ladder expansion of the von Mises wavefunction."""
    norm = 1.0 / math.sqrt(TWO_PI * bessel_i(0, 2.0 * p.kappa))

    def psi(phi):
        return norm * np.exp(1j * p.lam * phi + p.kappa * np.cos(phi + p.alpha))

    hint = max(64, abs(p.lam) + 32)
    return from_wavefunction(psi, l_max_hint=hint, tail_tol=tail_tol)


def cat_state(kappa: float, tail_tol: float = CATALOG_TAIL_TOL) -> CircleState:
    """Angular cat state at concentration kappa."""
    if not (0.0 <= kappa <= MAX_KAPPA):
        raise DomainError(f"kappa must lie in [0, {MAX_KAPPA}], got {kappa!r}")
    norm = 1.0 / math.sqrt(2.0 * TWO_PI * bessel_i(0, 2.0 * kappa))

    def psi(phi):
        envelope = np.exp(kappa * np.cos(phi))
        return norm * envelope * (1.0 - 1j * np.exp(1j * phi))

    return from_wavefunction(psi, tail_tol=tail_tol)


def l_eigenstate(l: int) -> CircleState:
    """Eigenstate of the angular momentum: c_l = 1, all circular moments zero."""
    if abs(l) > 4096:
        raise DomainError(f"|l| must be <= 4096, got {l}")
    l = int(l)
    l_min, l_max = min(l, 0), max(l, 0)
    coeffs = np.zeros(l_max - l_min + 1, dtype=np.complex128)
    coeffs[l - l_min] = 1.0
    return make_state(l_min, coeffs)


def x_extremal_state(p: VonMisesParams, tail_tol: float = CATALOG_TAIL_TOL) -> CircleState:
    """Von Mises coefficients damped by e^{-l^2/2}, renormalized."""
    base = von_mises(p, tail_tol=tail_tol)
    damped = base.coeffs * np.exp(-base.ells.astype(float) ** 2 / 2.0)
    return make_state(base.l_min, damped, normalize=True)


def intelligent_residual(
    state: CircleState, kappa: float, lam: int, alpha: float
) -> float:
    """Norm of the minimum-uncertainty defect (L - i kappa M_alpha - lam) psi.

    M_alpha is multiplication by sin(phi + alpha), the angular component
    conjugate to the density's symmetry axis; on the ladder it maps
    c_l -> (e^{i alpha} c_{l-1} - e^{-i alpha} c_{l+1}) / (2i).  Von Mises
    states with matching parameters annihilate this up to truncation.
    """
    pad = np.zeros(state.coeffs.size + 2, dtype=np.complex128)
    pad[1:-1] = state.coeffs
    ells = np.arange(state.l_min - 1, state.l_max + 2, dtype=np.float64)
    lower = np.concatenate(([0.0], pad[:-1]))  # c_{l-1}
    upper = np.concatenate((pad[1:], [0.0]))  # c_{l+1}
    # (L - lam) psi - i kappa M_alpha psi, with the 1/(2i) of M_alpha and
    # the -i prefactor combining to -1/2.
    resid = (ells - lam) * pad - 0.5 * kappa * (
        np.exp(1j * alpha) * lower - np.exp(-1j * alpha) * upper
    )
    return float(np.linalg.norm(resid))
