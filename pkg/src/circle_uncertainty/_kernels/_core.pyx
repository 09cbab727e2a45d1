# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same contract as ``_pykernels``: Bessel I_n, the direct Fourier-sum grid
transforms, and the ladder-moment accumulations.  The grid transforms walk
the unit-circle phases with a multiplicative recurrence and resynchronize
against libm every 32 steps to keep the phase error at roundoff level.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, log, sin, sqrt

cnp.import_array()

cdef double TWO_PI = 6.283185307179586476925286766559
cdef double SQRT_TWO_PI = 2.5066282746310005024157652848110
cdef int RESYNC = 32


def bessel_i(int n, double x):
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x < 10.0:
        return _bessel_series(n, x)
    return _bessel_miller(n, x)


cdef double _bessel_series(int n, double x):
    cdef double half = 0.5 * x
    cdef double term = 1.0
    cdef double total, r
    cdef int k
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


cdef double _log_bessel_asymptotic(double m, double x):
    cdef double s = sqrt(m * m + x * x)
    cdef double val = s - 0.5 * log(TWO_PI * s)
    if m > 0.0:
        val += m * log(x / (m + s))
    return val


cdef int _miller_start(int n, double x):
    cdef double eta_n = _log_bessel_asymptotic(n, x)
    cdef int m = n + 8
    while eta_n - _log_bessel_asymptotic(m, x) < 40.0:
        m += 4
    return m


cdef double _bessel_miller(int n, double x):
    cdef int m = _miller_start(n, x)
    cdef double fp1 = 0.0
    cdef double f = 1e-255
    cdef double acc = f
    cdef double target = f if m == n else 0.0
    cdef double fm1
    cdef int k, idx
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
    return (target / (f + 2.0 * acc)) * exp(x)


def synthesize(cnp.ndarray coeffs_in, long l_min, long n_points):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] coeffs = np.ascontiguousarray(
        coeffs_in, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(
        n_points, dtype=np.complex128)
    cdef Py_ssize_t m = coeffs.shape[0]
    cdef Py_ssize_t k, j
    cdef double phi, ang
    cdef double complex w, z, acc
    for k in range(n_points):
        phi = TWO_PI * k / n_points
        w = cos(phi) + 1j * sin(phi)
        ang = l_min * phi
        z = cos(ang) + 1j * sin(ang)
        acc = 0.0
        for j in range(m):
            if j % RESYNC == 0 and j > 0:
                ang = (l_min + j) * phi
                z = cos(ang) + 1j * sin(ang)
            acc += coeffs[j] * z
            z *= w
        out[k] = acc / SQRT_TWO_PI
    return out


def analyze(cnp.ndarray values_in, long l_min, long l_max):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] values = np.ascontiguousarray(
        values_in, dtype=np.complex128)
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t m = l_max - l_min + 1
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(m, dtype=np.complex128)
    cdef Py_ssize_t i, k
    cdef long ell
    cdef double phi, ang
    cdef double complex w, z, acc
    for i in range(m):
        ell = l_min + i
        phi = -TWO_PI * ell / n
        w = cos(phi) + 1j * sin(phi)
        z = 1.0
        acc = 0.0
        for k in range(n):
            if k % RESYNC == 0 and k > 0:
                ang = phi * k
                z = cos(ang) + 1j * sin(ang)
            acc += values[k] * z
            z *= w
        out[i] = acc * (SQRT_TWO_PI / n)
    return out


def coeff_moments(cnp.ndarray coeffs_in, long l_min):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] coeffs = np.ascontiguousarray(
        coeffs_in, dtype=np.complex128)
    cdef Py_ssize_t m = coeffs.shape[0]
    cdef double complex e1 = 0.0
    cdef double complex e2 = 0.0
    cdef double l1 = 0.0
    cdef double l2 = 0.0
    cdef double p, ell
    cdef Py_ssize_t j
    for j in range(m):
        ell = l_min + j
        p = coeffs[j].real * coeffs[j].real + coeffs[j].imag * coeffs[j].imag
        l1 += ell * p
        l2 += ell * ell * p
        if j >= 1:
            e1 += coeffs[j - 1].conjugate() * coeffs[j]
        if j >= 2:
            e2 += coeffs[j - 2].conjugate() * coeffs[j]
    return complex(e1), complex(e2), l1, l2


def grid_e_moments(cnp.ndarray values_in):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] values = np.ascontiguousarray(
        values_in, dtype=np.complex128)
    cdef Py_ssize_t n = values.shape[0]
    cdef double complex e1 = 0.0
    cdef double complex e2 = 0.0
    cdef double phi, dens
    cdef double complex z1, z2
    cdef Py_ssize_t k
    for k in range(n):
        phi = TWO_PI * k / n
        dens = values[k].real * values[k].real + values[k].imag * values[k].imag
        z1 = cos(phi) - 1j * sin(phi)
        z2 = cos(2.0 * phi) - 1j * sin(2.0 * phi)
        e1 += z1 * dens
        e2 += z2 * dens
    cdef double w = TWO_PI / n
    return complex(e1 * w), complex(e2 * w)
