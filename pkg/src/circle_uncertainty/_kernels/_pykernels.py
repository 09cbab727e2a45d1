"""Pure-Python implementations of the numerical kernels.

This module mirrors the compiled extension ``_core`` function for function.
It is selected automatically when the extension is unavailable (or when
``CIRCLE_UNCERTAINTY_PURE=1``), and it is the reference the extension is
tested against.  The grid transforms evaluate the direct Fourier sums with
numpy broadcasting; no FFT is used, so both backends share the same
algorithm and error behaviour.
"""

import math

import numpy as np

_TWO_PI = 2.0 * math.pi
_SQRT_TWO_PI = math.sqrt(_TWO_PI)

# Largest block of angular-momentum indices expanded at once in the direct
# Fourier sums; bounds the transient (n_points x block) phase matrix.
_BLOCK = 256


def bessel_i(n, x):
    """Modified Bessel function of the first kind, integer order.

    Power series for small arguments, normalized downward (Miller)
    recurrence otherwise.  Domain validation is the caller's job.
    """
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x < 10.0:
        return _bessel_series(n, x)
    return _bessel_miller(n, x)


def _bessel_series(n, x):
    half = 0.5 * x
    term = 1.0
    for k in range(1, n + 1):
        term *= half / k
    total = term
    r = half * half
    for k in range(1, 600):
        term *= r / (k * (n + k))
        total += term
        if term <= total * 1e-17:
            break
    return total


def _log_bessel_asymptotic(m, x):
    # Leading behaviour of log I_m(x), used only to choose a safe start
    # order for the downward recurrence.
    s = math.sqrt(m * m + x * x)
    val = s - 0.5 * math.log(_TWO_PI * s)
    if m > 0:
        val += m * math.log(x / (m + s))
    return val


def _miller_start(n, x):
    # Start deep enough that the contamination of the downward recurrence,
    # which scales like (I_start / I_n)^2, and the truncation of the
    # normalization sum, which scales like I_start / I_n, are both below
    # double roundoff.
    eta_n = _log_bessel_asymptotic(n, x)
    m = n + 8
    while eta_n - _log_bessel_asymptotic(m, x) < 40.0:
        m += 4
    return m


def _bessel_miller(n, x):
    m = _miller_start(n, x)
    fp1 = 0.0
    f = 1e-255
    acc = f  # running sum of f_k for k >= 1 (start order is always >= 8)
    target = f if m == n else 0.0
    for k in range(m, 0, -1):
        fm1 = fp1 + (2.0 * k / x) * f
        fp1 = f
        f = fm1
        idx = k - 1
        if idx == n:
            target = f
        if idx >= 1:
            acc += f
        if f > 1e250:
            fp1 *= 1e-250
            f *= 1e-250
            acc *= 1e-250
            target *= 1e-250
    # f is now f_0; normalize with e^x = I_0 + 2 sum_{k>=1} I_k.
    return (target / (f + 2.0 * acc)) * math.exp(x)


def synthesize(coeffs, l_min, n_points):
    """Angle-grid samples (1/sqrt(2 pi)) sum_l c_l e^{i l phi_k}."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    phi = _TWO_PI * np.arange(n_points) / n_points
    out = np.zeros(n_points, dtype=np.complex128)
    for start in range(0, coeffs.size, _BLOCK):
        ells = np.arange(l_min + start, l_min + min(start + _BLOCK, coeffs.size))
        out += np.exp(1j * np.outer(phi, ells)) @ coeffs[start : start + _BLOCK]
    return out / _SQRT_TWO_PI


def analyze(values, l_min, l_max):
    """Fourier coefficients (sqrt(2 pi)/N) sum_k v_k e^{-i l phi_k}."""
    values = np.asarray(values, dtype=np.complex128)
    n = values.size
    phi = _TWO_PI * np.arange(n) / n
    m = l_max - l_min + 1
    out = np.empty(m, dtype=np.complex128)
    for start in range(0, m, _BLOCK):
        ells = np.arange(l_min + start, l_min + min(start + _BLOCK, m))
        out[start : start + ells.size] = np.exp(-1j * np.outer(ells, phi)) @ values
    return out * (_SQRT_TWO_PI / n)


def coeff_moments(coeffs, l_min):
    """First and second ladder moments from coefficients.

    Returns (e1, e2, l1, l2) with e1 = sum c*_{l-1} c_l, e2 = sum c*_{l-2} c_l,
    l1 = sum l |c_l|^2 and l2 = sum l^2 |c_l|^2.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    ells = np.arange(l_min, l_min + coeffs.size, dtype=np.float64)
    p = np.abs(coeffs) ** 2
    e1 = complex(np.sum(np.conj(coeffs[:-1]) * coeffs[1:])) if coeffs.size > 1 else 0.0 + 0.0j
    e2 = complex(np.sum(np.conj(coeffs[:-2]) * coeffs[2:])) if coeffs.size > 2 else 0.0 + 0.0j
    l1 = float(np.dot(ells, p))
    l2 = float(np.dot(ells * ells, p))
    return e1, e2, l1, l2


def grid_e_moments(values):
    """Circular moments (2 pi / N) sum_k e^{-i n phi_k} |v_k|^2 for n = 1, 2."""
    values = np.asarray(values, dtype=np.complex128)
    n = values.size
    phi = _TWO_PI * np.arange(n) / n
    dens = np.abs(values) ** 2
    w = _TWO_PI / n
    e1 = complex(w * np.sum(np.exp(-1j * phi) * dens))
    e2 = complex(w * np.sum(np.exp(-2j * phi) * dens))
    return e1, e2
