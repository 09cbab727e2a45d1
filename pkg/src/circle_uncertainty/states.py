"""Quantum states on the circle in the angular-momentum basis.

A state is a finite window of complex amplitudes c_l, l = l_min..l_max
(the window always contains l = 0), with the wavefunction

    psi(phi) = (1 / sqrt(2 pi)) sum_l c_l e^{i l phi},   phi in [0, 2 pi).

In this convention the shift-down operator (the complex exponential of
the angle) acts as multiplication by e^{-i phi} on the grid, and the
angular momentum operator is -i d/dphi.  Rotation by phi' multiplies c_l
by e^{-i l phi'} and translates the density by +phi'.

States are immutable values; every operation returns a new object.
"""

import json
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .errors import DomainError, NumericalError

TWO_PI = 2.0 * math.pi

#: Edge-pair probability allowed to remain outside a truncation window.
DEFAULT_TAIL_TOL = 1e-14

#: Hard cap on the truncation window growth in from_wavefunction.
MAX_L = 4096

NORM_TOL = 1e-12


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class CircleState:
    """Normalized amplitudes on the truncated angular-momentum ladder."""

    l_min: int
    l_max: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not (self.l_min <= 0 <= self.l_max):
            raise DomainError(
                f"window [{self.l_min}, {self.l_max}] must contain l = 0"
            )
        arr = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size != self.l_max - self.l_min + 1:
            raise DomainError("coefficient vector does not match the window")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def ells(self) -> np.ndarray:
        """Angular-momentum indices of the window."""
        return np.arange(self.l_min, self.l_max + 1)

    def coeff(self, l: int) -> complex:
        """Amplitude at ladder index l (zero outside the window)."""
        if self.l_min <= l <= self.l_max:
            return complex(self.coeffs[l - self.l_min])
        return 0.0 + 0.0j

    def norm_error(self) -> float:
        """|sum |c_l|^2 - 1|."""
        return abs(float(np.sum(np.abs(self.coeffs) ** 2)) - 1.0)


@dataclass(frozen=True)
class AngularGrid:
    """Wavefunction samples on the uniform grid phi_k = 2 pi k / n_points."""

    n_points: int
    values: np.ndarray

    def __post_init__(self):
        if not _is_pow2(self.n_points):
            raise DomainError(f"n_points must be a power of two, got {self.n_points}")
        arr = np.ascontiguousarray(self.values, dtype=np.complex128)
        if arr.ndim != 1 or arr.size != self.n_points:
            raise DomainError("sample vector does not match n_points")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def phis(self) -> np.ndarray:
        return TWO_PI * np.arange(self.n_points) / self.n_points


def make_state(l_min: int, coeffs, normalize: bool = False) -> CircleState:
    """Build a state from a coefficient vector starting at ladder index l_min."""
    arr = np.ascontiguousarray(coeffs, dtype=np.complex128)
    if normalize:
        nrm = math.sqrt(float(np.sum(np.abs(arr) ** 2)))
        if nrm == 0.0:
            raise DomainError("cannot normalize the zero vector")
        arr = arr / nrm
    return CircleState(l_min=int(l_min), l_max=int(l_min) + arr.size - 1, coeffs=arr)


def require_normalized(state: CircleState, tol: float = 1e-9) -> None:
    if state.norm_error() > tol:
        raise DomainError(
            f"state is not normalized (norm error {state.norm_error():.3e})"
        )


def to_grid(state: CircleState, n_points: int) -> AngularGrid:
    """Sample the wavefunction on a uniform angular grid.

    Requires n_points to be a power of two at least twice the window size,
    so the analysis transform can recover the coefficients exactly.
    """
    m = state.l_max - state.l_min + 1
    if not _is_pow2(n_points) or n_points < 2 * m:
        raise DomainError(
            f"n_points must be a power of two >= {2 * m}, got {n_points}"
        )
    values = _kernels.synthesize(state.coeffs, state.l_min, n_points)
    return AngularGrid(n_points=n_points, values=values)


def from_grid(grid: AngularGrid, l_min: int, l_max: int) -> np.ndarray:
    """Raw Fourier coefficients of grid samples over [l_min, l_max]."""
    if l_max - l_min + 1 > grid.n_points:
        raise DomainError("requested window exceeds the grid resolution")
    return _kernels.analyze(grid.values, int(l_min), int(l_max))


def rotate(state: CircleState, phi_prime: float) -> CircleState:
    """Rotate the state: c_l -> e^{-i l phi'} c_l.

    Unitary, so the norm and all angular-momentum moments are preserved;
    the density translates by +phi'.
    """
    phases = np.exp(-1j * phi_prime * state.ells)
    return CircleState(state.l_min, state.l_max, state.coeffs * phases)


def _trim(coeffs: np.ndarray, l_min: int, tail_tol: float):
    """Shrink a window, keeping l = 0 inside and the edge-pair mass under
    tail_tol.  Discards only coefficients whose cumulative mass stays below
    tail_tol per side."""
    p = np.abs(coeffs) ** 2
    lo, hi = 0, coeffs.size - 1
    i_zero = -l_min
    budget_lo = 0.0
    budget_hi = 0.0
    moved = True
    while moved and hi - lo >= 2:
        moved = False
        if lo < i_zero and budget_lo + p[lo] <= tail_tol and p[lo + 1] + p[hi] <= tail_tol:
            budget_lo += p[lo]
            lo += 1
            moved = True
        if hi > i_zero and budget_hi + p[hi] <= tail_tol and p[lo] + p[hi - 1] <= tail_tol:
            budget_hi += p[hi]
            hi -= 1
            moved = True
    return coeffs[lo : hi + 1], l_min + lo


def from_wavefunction(
    psi: Callable[[np.ndarray], np.ndarray],
    l_max_hint: int = 64,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> CircleState:
    """Expand a wavefunction on [0, 2 pi) into ladder coefficients.

    The coefficients c_l = (1/sqrt(2 pi)) integral e^{-i l phi} psi(phi) dphi
    are computed on an oversampled grid over a symmetric window [-L, L];
    the window doubles until the edge-pair mass drops below tail_tol, then
    is trimmed back to the actual support.  The result is normalized.

    psi may accept a numpy array of angles or a single float.  Raises
    NumericalError if tail_tol is unreachable at L = 4096 (the state is
    too broad on the ladder for this representation).
    """
    if not (0.0 < tail_tol <= 1e-6):
        raise DomainError(f"tail_tol must lie in (0, 1e-6], got {tail_tol!r}")
    L = max(8, int(l_max_hint))
    while True:
        m = 2 * L + 1
        n = 1 << max(6, (4 * m - 1).bit_length())
        phis = TWO_PI * np.arange(n) / n
        vals = _sample(psi, phis)
        grid_mass = float(TWO_PI / n * np.sum(np.abs(vals) ** 2))
        if grid_mass <= 0.0:
            raise DomainError("wavefunction vanishes on the grid")
        # Cheap pre-filter: a band of four coefficients per side, not just
        # the edge pair (a lone edge coefficient can vanish by parity while
        # the tail is still fat).  Only a passing band pays for the full
        # window transform.
        band = np.concatenate(
            [_kernels.analyze(vals, -L, -L + 3), _kernels.analyze(vals, L - 3, L)]
        )
        p_edge = float(np.sum(np.abs(band) ** 2)) / grid_mass
        if p_edge <= tail_tol:
            coeffs = _kernels.analyze(vals, -L, L)
            p = np.abs(coeffs) ** 2
            total = float(np.sum(p))
            if total <= 0.0:
                raise DomainError("wavefunction has zero projection on the window")
            if float(np.sum(p[:4]) + np.sum(p[-4:])) <= tail_tol * total:
                coeffs = coeffs / math.sqrt(total)
                trimmed, new_lmin = _trim(coeffs, -L, tail_tol)
                nrm = math.sqrt(float(np.sum(np.abs(trimmed) ** 2)))
                return make_state(new_lmin, trimmed / nrm)
        if L >= MAX_L:
            raise NumericalError(
                f"edge-band mass {p_edge:.3e} still exceeds tail_tol={tail_tol:.1e} "
                f"at window [-{MAX_L}, {MAX_L}]; state too broad in angular momentum"
            )
        L = min(2 * L, MAX_L)


def _sample(psi, phis: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(psi(phis), dtype=np.complex128)
        if vals.shape == phis.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([psi(float(p)) for p in phis], dtype=np.complex128)


def save_state(state: CircleState, path) -> None:
    """Write the JSON state file ({"l_min", "l_max", "coeffs"}, 17 significant
    digits, coefficients ordered l_min..l_max)."""
    pairs = ",\n    ".join(
        f"[{c.real:.17g}, {c.imag:.17g}]" for c in state.coeffs
    )
    text = (
        "{\n"
        f'  "l_min": {state.l_min},\n'
        f'  "l_max": {state.l_max},\n'
        f'  "coeffs": [\n    {pairs}\n  ]\n'
        "}\n"
    )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def load_state(path) -> CircleState:
    """Read a JSON state file written by :func:`save_state`.

    Raises ValueError on malformed content, including denormalized
    coefficient vectors (norm error above 1e-12).
    """
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    try:
        l_min = int(doc["l_min"])
        l_max = int(doc["l_max"])
        pairs = doc["coeffs"]
        coeffs = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state file {path}: {exc}") from exc
    if coeffs.size != l_max - l_min + 1:
        raise ValueError(
            f"state file {path}: {coeffs.size} coefficients for window "
            f"[{l_min}, {l_max}]"
        )
    state = CircleState(l_min=l_min, l_max=l_max, coeffs=coeffs)
    if state.norm_error() > NORM_TOL:
        raise ValueError(
            f"state file {path}: coefficients are not normalized "
            f"(norm error {state.norm_error():.3e})"
        )
    return state
