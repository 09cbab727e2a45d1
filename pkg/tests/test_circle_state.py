"""State representation: grid transforms, rotation, file round-trips."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circle_uncertainty import (
    CircleState,
    DomainError,
    NumericalError,
    from_grid,
    from_wavefunction,
    load_state,
    make_state,
    rotate,
    save_state,
    to_grid,
)
from circle_uncertainty.states import TWO_PI

from _oracles import fourier_coeff, vm_psi

INV_SQRT_2PI = 1.0 / math.sqrt(TWO_PI)


def test_uniform_wavefunction_is_ground_ladder_state():
    st_ = from_wavefunction(lambda phi: np.full_like(phi, INV_SQRT_2PI, dtype=complex))
    assert st_.coeff(0) == pytest.approx(1.0, abs=1e-13)
    off = [abs(st_.coeff(l)) for l in range(st_.l_min, st_.l_max + 1) if l != 0]
    assert max(off, default=0.0) < 1e-12


def test_pure_mode_wavefunction():
    st_ = from_wavefunction(lambda phi: INV_SQRT_2PI * np.exp(3j * phi))
    assert abs(st_.coeff(3)) == pytest.approx(1.0, abs=1e-13)


def test_von_mises_coefficients_match_quadrature_oracle():
    psi = vm_psi(1.0, 0, 0.0)
    st_ = from_wavefunction(psi, tail_tol=1e-20)
    for l in range(-6, 7):
        assert st_.coeff(l) == pytest.approx(fourier_coeff(psi, l), abs=1e-12)


def test_to_grid_constant_state():
    st_ = make_state(0, [1.0])
    grid = to_grid(st_, 8)
    assert np.allclose(grid.values, INV_SQRT_2PI)


def test_to_grid_single_mode():
    st_ = make_state(0, [0.0, 1.0])  # c_1 = 1
    grid = to_grid(st_, 8)
    expected = INV_SQRT_2PI * np.exp(1j * grid.phis)
    assert np.allclose(grid.values, expected, atol=1e-14)


def test_to_grid_von_mises_density_matches_analytic():
    from scipy.special import iv

    kappa = 2.0
    st_ = from_wavefunction(vm_psi(kappa, 0, 0.0), tail_tol=1e-20)
    grid = to_grid(st_, 256)
    dens = np.abs(grid.values) ** 2
    analytic = np.exp(2 * kappa * np.cos(grid.phis)) / (TWO_PI * iv(0, 2 * kappa))
    assert np.max(np.abs(dens - analytic)) < 1e-10


def test_grid_size_validation():
    st_ = make_state(-2, np.ones(5) / math.sqrt(5))
    with pytest.raises(DomainError):
        to_grid(st_, 8)  # below 2 * window
    with pytest.raises(DomainError):
        to_grid(st_, 24)  # not a power of two


def test_round_trip_coefficients():
    rng = np.random.default_rng(3)
    c = rng.standard_normal(33) + 1j * rng.standard_normal(33)
    st_ = make_state(-16, c, normalize=True)
    grid = to_grid(st_, 128)
    back = from_grid(grid, -16, 16)
    assert np.max(np.abs(back - st_.coeffs)) < 1e-10


def test_parseval_on_grid():
    rng = np.random.default_rng(4)
    c = rng.standard_normal(21) + 1j * rng.standard_normal(21)
    st_ = make_state(-10, c, normalize=True)
    grid = to_grid(st_, 64)
    assert (TWO_PI / 64) * np.sum(np.abs(grid.values) ** 2) == pytest.approx(
        1.0, abs=1e-10
    )


def test_rotate_identity_and_ground_state():
    st_ = make_state(0, [1.0])
    assert np.array_equal(rotate(st_, 1.234).coeffs, st_.coeffs)
    two = make_state(0, [1 / math.sqrt(2), 1j / math.sqrt(2)])
    assert np.array_equal(rotate(two, 0.0).coeffs, two.coeffs)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(
    a=st.floats(-10, 10, allow_nan=False),
    b=st.floats(-10, 10, allow_nan=False),
    seed=st.integers(0, 2**16),
)
def test_rotate_composition(a, b, seed):
    rng = np.random.default_rng(seed)
    c = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    state = make_state(-4, c, normalize=True)
    once = rotate(rotate(state, a), b)
    combined = rotate(state, a + b)
    assert np.max(np.abs(once.coeffs - combined.coeffs)) < 1e-12
    assert once.norm_error() < 1e-12


def test_rotate_shifts_resultant_phase():
    from circle_uncertainty import moments_from_coeffs

    st_ = from_wavefunction(vm_psi(1.0, 0, 0.0))
    phi = 0.77
    m0 = moments_from_coeffs(st_)
    m1 = moments_from_coeffs(rotate(st_, phi))
    assert m1.e1 == pytest.approx(m0.e1 * np.exp(-1j * phi), abs=1e-12)


def test_window_must_contain_zero():
    with pytest.raises(DomainError):
        CircleState(l_min=1, l_max=3, coeffs=np.ones(3, dtype=complex))


def test_tail_failure_for_discontinuous_wavefunction():
    # A step function has |c_l| ~ 1/l, far too slow for any tail goal.
    def psi(phi):
        return np.where(phi < math.pi, math.sqrt(1.0 / math.pi), 0.0).astype(complex)

    with pytest.raises(NumericalError):
        from_wavefunction(psi, l_max_hint=512, tail_tol=1e-10)


def test_state_file_round_trip(tmp_path):
    rng = np.random.default_rng(5)
    c = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    st_ = make_state(-3, c, normalize=True)
    path = tmp_path / "state.json"
    save_state(st_, path)
    loaded = load_state(path)
    assert loaded.l_min == st_.l_min and loaded.l_max == st_.l_max
    assert np.array_equal(loaded.coeffs, st_.coeffs)  # 17 digits round-trip exactly
    doc = json.loads(path.read_text())
    assert set(doc) == {"l_min", "l_max", "coeffs"}


def test_load_rejects_malformed_and_denormalized(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"l_min": 0, "l_max": 1, "coeffs": [[1.0, 0.0]]}')
    with pytest.raises(ValueError):
        load_state(bad)
    denorm = tmp_path / "denorm.json"
    denorm.write_text(
        '{"l_min": 0, "l_max": 1, "coeffs": [[0.9, 0.0], [0.1, 0.0]]}'
    )
    with pytest.raises(ValueError):
        load_state(denorm)


def test_operations_preserve_normalization():
    rng = np.random.default_rng(6)
    for _ in range(25):
        c = rng.standard_normal(13) + 1j * rng.standard_normal(13)
        state = make_state(-6, c, normalize=True)
        assert state.norm_error() < 1e-12
        assert rotate(state, rng.uniform(0, TWO_PI)).norm_error() < 1e-12
