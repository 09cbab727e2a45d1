"""Named state families against analytic coefficient oracles."""

import math

import numpy as np
import pytest
from scipy.special import iv

from circle_uncertainty import (
    DomainError,
    VonMisesParams,
    cat_state,
    intelligent_residual,
    l_eigenstate,
    moments_from_coeffs,
    rotate,
    to_grid,
    von_mises,
    x_extremal_state,
)
from circle_uncertainty.states import TWO_PI

from _oracles import cat_coeff_exact, vm_coeff_exact


def test_von_mises_kappa_zero_is_ladder_eigenstate():
    st = von_mises(VonMisesParams(0.0, 0, 0.0))
    assert abs(st.coeff(0)) == pytest.approx(1.0, abs=1e-13)
    st3 = von_mises(VonMisesParams(0.0, 3, 0.0))
    assert abs(st3.coeff(3)) == pytest.approx(1.0, abs=1e-13)


@pytest.mark.parametrize("kappa,lam,alpha", [
    (1.0, 0, 0.0), (1.0, 2, 0.0), (2.5, 0, 1.1), (5.0, -1, 2.0), (0.3, 1, -0.4),
])
def test_von_mises_coefficients_analytic(kappa, lam, alpha):
    st = von_mises(VonMisesParams(kappa, lam, alpha))
    for l in range(max(st.l_min, lam - 8), min(st.l_max, lam + 8) + 1):
        assert st.coeff(l) == pytest.approx(
            vm_coeff_exact(kappa, lam, alpha, l), abs=1e-12
        )


def test_von_mises_mean_resultant():
    st = von_mises(VonMisesParams(1.0, 0, 0.0))
    m = moments_from_coeffs(st)
    expected = iv(1, 2.0) / iv(0, 2.0)
    assert m.e1.real == pytest.approx(expected, abs=1e-12)
    assert abs(m.e1.imag) < 1e-12


def test_von_mises_mean_angular_momentum():
    for lam in (0, 2, -3):
        st = von_mises(VonMisesParams(1.0, lam, 0.0))
        assert moments_from_coeffs(st).l1 == pytest.approx(lam, abs=1e-9)


@pytest.mark.parametrize("kappa", [0.1, 0.5, 1.0, 2.0, 5.0, 10.0])
@pytest.mark.parametrize("lam", [0, 1, 3])
@pytest.mark.parametrize("alpha", [0.0, 1.1])
def test_intelligent_state_residual(kappa, lam, alpha):
    st = von_mises(VonMisesParams(kappa, lam, alpha))
    assert intelligent_residual(st, kappa, lam, alpha) <= 1e-8


def test_residual_is_discriminating():
    # Wrong parameters must not annihilate the state.
    st = von_mises(VonMisesParams(1.0, 0, 0.0))
    assert intelligent_residual(st, 1.0, 1, 0.0) > 0.5
    assert intelligent_residual(st, 3.0, 0, 0.0) > 0.1


def test_von_mises_frame_equals_rotated_base():
    alpha = 0.9
    shifted = von_mises(VonMisesParams(1.5, 0, alpha))
    rotated = rotate(von_mises(VonMisesParams(1.5, 0, 0.0)), -alpha)
    g1 = to_grid(shifted, 128)
    g2 = to_grid(rotated, 128)
    # Same density; the states differ by a global phase only.
    assert np.max(np.abs(np.abs(g1.values) ** 2 - np.abs(g2.values) ** 2)) < 1e-10


def test_von_mises_range_guard():
    with pytest.raises(DomainError):
        VonMisesParams(50.5, 0, 0.0)
    with pytest.raises(DomainError):
        VonMisesParams(-0.1, 0, 0.0)
    with pytest.raises(DomainError):
        VonMisesParams(1.0, 0.5, 0.0)
    with pytest.raises(DomainError):
        cat_state(51.0)
    with pytest.raises(DomainError):
        l_eigenstate(5000)


def test_tail_tol_precondition():
    from circle_uncertainty import from_wavefunction

    with pytest.raises(DomainError):
        from_wavefunction(lambda phi: np.exp(np.cos(phi)), tail_tol=1e-3)


def test_cat_kappa_zero_two_level():
    st = cat_state(0.0)
    assert st.coeff(0) == pytest.approx(1 / math.sqrt(2), abs=1e-13)
    assert st.coeff(1) == pytest.approx(-1j / math.sqrt(2), abs=1e-13)
    m = moments_from_coeffs(st)
    assert m.l2 - m.l1**2 == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("kappa", [0.5, 1.0, 3.0])
def test_cat_coefficients_analytic(kappa):
    st = cat_state(kappa)
    for l in range(-6, 8):
        assert st.coeff(l) == pytest.approx(cat_coeff_exact(kappa, l), abs=1e-12)


@pytest.mark.parametrize("kappa", [0.0, 1.0, 4.0])
def test_cat_mean_angular_momentum_is_half(kappa):
    st = cat_state(kappa)
    assert moments_from_coeffs(st).l1 == pytest.approx(0.5, abs=1e-10)


def test_cat_density_pointwise():
    kappa = 1.0
    st = cat_state(kappa)
    grid = to_grid(st, 256)
    dens = np.abs(grid.values) ** 2
    expected = (
        np.exp(2 * kappa * np.cos(grid.phis))
        * (1.0 + np.sin(grid.phis))
        / (TWO_PI * iv(0, 2 * kappa))
    )
    assert np.max(np.abs(dens - expected)) < 1e-10


def test_cat_density_integrates_to_one():
    st = cat_state(2.0)
    grid = to_grid(st, 512)
    mass = (TWO_PI / 512) * np.sum(np.abs(grid.values) ** 2)
    assert mass == pytest.approx(1.0, abs=1e-10)


def test_l_eigenstate_properties():
    for l in (0, 5, -3):
        st = l_eigenstate(l)
        m = moments_from_coeffs(st)
        assert m.l1 == l and m.l2 == l * l
        assert m.e1 == 0 and m.e2 == 0


def test_x_extremal_damping():
    p = VonMisesParams(1.0, 0, 0.0)
    base = von_mises(p)
    st = x_extremal_state(p)
    damped = base.coeffs * np.exp(-base.ells.astype(float) ** 2 / 2)
    damped /= np.linalg.norm(damped)
    for l in range(st.l_min, st.l_max + 1):
        assert st.coeff(l) == pytest.approx(damped[l - base.l_min], abs=1e-13)
    assert st.norm_error() < 1e-12


def test_x_extremal_kappa_zero_unchanged():
    st = x_extremal_state(VonMisesParams(0.0, 0, 0.0))
    assert abs(st.coeff(0)) == pytest.approx(1.0, abs=1e-13)
