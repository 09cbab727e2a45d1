"""Modified Bessel function checks against independent oracles."""

import numpy as np
import pytest

from circle_uncertainty import DomainError, bessel_i
from circle_uncertainty.special import bessel_i_result

from _oracles import quad_bessel_i, series_bessel_i


def test_value_at_zero():
    assert bessel_i(0, 0.0) == 1.0
    assert bessel_i(1, 0.0) == 0.0
    assert bessel_i(7, 0.0) == 0.0


def test_series_oracle_small_argument():
    # Frozen from the power-series oracle summed to machine convergence.
    oracle = series_bessel_i(0, 2.0)
    assert oracle == pytest.approx(2.2795853023360673, rel=1e-15)
    assert bessel_i(0, 2.0) == pytest.approx(oracle, rel=1e-12)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 5, 8, 13, 21, 40])
@pytest.mark.parametrize("x", [0.3, 1.0, 4.2, 9.5, 12.0, 25.0, 38.0])
def test_series_oracle_grid(n, x):
    # The factorial series stays float-exact up to x ~ 40, covering both
    # internal branches (series below 10, normalized recurrence above).
    assert bessel_i(n, x) == pytest.approx(series_bessel_i(n, x), rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 1.0, 5.0, 20.0])
def test_three_term_recurrence(x):
    for n in range(1, 51):
        lhs = bessel_i(n - 1, x) - bessel_i(n + 1, x)
        rhs = (2.0 * n / x) * bessel_i(n, x)
        assert abs(lhs - rhs) <= 1e-10 * bessel_i(n - 1, x)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.5, 5.0, 20.0, 100.0])
def test_decreasing_in_order(x):
    values = [bessel_i(n, x) for n in range(0, 30)]
    assert all(a >= b > 0.0 for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_quadrature_agreement(n, x):
    # Values here are O(1e2) at most, so the absolute comparison is sharp.
    assert abs(bessel_i(n, x) - quad_bessel_i(n, x)) <= 1e-10


@pytest.mark.parametrize("n,x", [(0, 50.0), (3, 117.0), (11, 400.0), (0, 700.0)])
def test_quadrature_agreement_large_argument(n, x):
    ref = quad_bessel_i(n, x)
    assert bessel_i(n, x) == pytest.approx(ref, rel=1e-11)


def test_domain_errors():
    with pytest.raises(DomainError):
        bessel_i(0, -0.5)
    with pytest.raises(DomainError):
        bessel_i(-1, 1.0)
    with pytest.raises(DomainError):
        bessel_i(201, 1.0)
    with pytest.raises(DomainError):
        bessel_i(0, 700.5)


def test_result_record():
    res = bessel_i_result(2, 3.0)
    assert res.order == 2
    assert res.argument == 3.0
    assert res.value == bessel_i(2, 3.0)
    assert res.value > 0.0


def test_positive_and_finite_on_domain_grid():
    for x in np.linspace(0.01, 700.0, 57):
        v = bessel_i(0, float(x))
        assert np.isfinite(v) and v >= 1.0
