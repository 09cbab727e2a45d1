"""Independent reference computations for the test suite.

Everything here deliberately avoids the package's kernel code paths:
Bessel values come from an explicit factorial series or scipy, Fourier
coefficients and circular moments from high-resolution trapezoid sums,
and ladder moments from plain einsum-style numpy expressions.
"""

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import iv

TWO_PI = 2.0 * math.pi


def series_bessel_i(n: int, x: float, terms: int = 400) -> float:
    """Power series sum_k (x/2)^(n+2k) / (k! (n+k)!), float arithmetic."""
    half = 0.5 * x
    total = 0.0
    for k in range(terms):
        term = half ** (n + 2 * k) / (math.factorial(k) * math.factorial(n + k))
        total += term
        if term and term < total * 1e-18:
            break
    return total


def quad_bessel_i(n: int, x: float) -> float:
    """(1/pi) integral_0^pi e^{x cos t} cos(n t) dt."""
    val, _ = quad(lambda t: math.exp(x * math.cos(t)) * math.cos(n * t), 0.0, math.pi,
                  limit=200, epsabs=1e-13, epsrel=1e-13)
    return val / math.pi


def fourier_coeff(psi, l: int, n: int = 1 << 15) -> complex:
    """(1/sqrt(2 pi)) integral e^{-i l phi} psi(phi) dphi by trapezoid sum."""
    phi = TWO_PI * np.arange(n) / n
    vals = np.asarray(psi(phi), dtype=complex)
    return complex(np.sum(np.exp(-1j * l * phi) * vals) * (TWO_PI / n) / math.sqrt(TWO_PI))


def density_moment(psi, k: int, n: int = 1 << 15) -> complex:
    """integral e^{-i k phi} |psi(phi)|^2 dphi by trapezoid sum."""
    phi = TWO_PI * np.arange(n) / n
    dens = np.abs(np.asarray(psi(phi), dtype=complex)) ** 2
    return complex(np.sum(np.exp(-1j * k * phi) * dens) * (TWO_PI / n))


def vm_psi(kappa: float, lam: int, alpha: float):
    norm = 1.0 / math.sqrt(TWO_PI * iv(0, 2.0 * kappa))

    def psi(phi):
        return norm * np.exp(1j * lam * phi + kappa * np.cos(phi + alpha))

    return psi


def cat_psi(kappa: float):
    norm = 1.0 / math.sqrt(2.0 * TWO_PI * iv(0, 2.0 * kappa))

    def psi(phi):
        return norm * np.exp(kappa * np.cos(phi)) * (1.0 - 1j * np.exp(1j * phi))

    return psi


def vm_coeff_exact(kappa: float, lam: int, alpha: float, l: int) -> complex:
    """c_l = e^{i (l - lam) alpha} I_{l-lam}(kappa) / sqrt(I_0(2 kappa))."""
    return complex(
        np.exp(1j * (l - lam) * alpha) * iv(abs(l - lam), kappa) / math.sqrt(iv(0, 2 * kappa))
    )


def cat_coeff_exact(kappa: float, l: int) -> complex:
    """c_l = [I_l(kappa) - i I_{l-1}(kappa)] / sqrt(2 I_0(2 kappa))."""
    return complex(
        (iv(abs(l), kappa) - 1j * iv(abs(l - 1), kappa)) / math.sqrt(2 * iv(0, 2 * kappa))
    )


def moments_direct(ells: np.ndarray, coeffs: np.ndarray):
    """Ladder moments written as plain vector expressions."""
    p = np.abs(coeffs) ** 2
    e1 = complex(np.vdot(coeffs[:-1], coeffs[1:])) if coeffs.size > 1 else 0j
    e2 = complex(np.vdot(coeffs[:-2], coeffs[2:])) if coeffs.size > 2 else 0j
    return e1, e2, float(ells @ p), float((ells**2) @ p)


def covariance_direct(e1: complex, e2: complex):
    """Sine-first covariance matrix as a numpy array."""
    c_mean, s_mean = e1.real, -e1.imag
    var_c = (1 + e2.real) / 2 - c_mean**2
    var_s = (1 - e2.real) / 2 - s_mean**2
    cov = -e2.imag / 2 - c_mean * s_mean
    return np.array([[var_s, cov], [cov, var_c]])


def dense_u2_max(e1: complex, e2: complex, n: int = 2_000_001):
    """Brute-force scan of (1/4) <C_a>^2 / (dS_a)^2 over the frame angle."""
    g = covariance_direct(e1, e2)
    c_mean, s_mean = e1.real, -e1.imag
    a = np.linspace(0.0, TWO_PI, n)
    num = (c_mean * np.cos(a) - s_mean * np.sin(a)) ** 2
    den = (
        g[0, 0] * np.cos(a) ** 2
        + 2 * g[0, 1] * np.sin(a) * np.cos(a)
        + g[1, 1] * np.sin(a) ** 2
    )
    vals = 0.25 * num / den
    i = int(np.argmax(vals))
    return float(vals[i]), float(a[i])
