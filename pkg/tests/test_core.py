import cmath
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import rel
from fraczeta.core import (SeriesBudget, a_coeff, binomial_weights, compensated_sum, cpow,
                           falling_factorial, gen_binom, phase, sum_series)
from fraczeta.errors import DomainError

orders = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


def test_budget_invariants():
    with pytest.raises(ValueError):
        SeriesBudget(max_terms_per_axis=0)
    with pytest.raises(ValueError):
        SeriesBudget(max_terms_per_axis=40, hard_cap=10)
    with pytest.raises(ValueError):
        SeriesBudget(tail_tol=0.0)
    SeriesBudget(max_terms_per_axis=10, hard_cap=10)


def test_cpow_principal_branch():
    # negative reals sit on the upper side of the cut, -0.0 included
    assert rel(cpow(-2.0, 0.5), 1j * math.sqrt(2)) < 1e-15
    assert rel(cpow(complex(-2.0, -0.0), 0.5), 1j * math.sqrt(2)) < 1e-15
    assert rel(cpow(-1.0, 0.3), phase(0.3)) < 1e-15
    assert cpow(0.0, 0.5) == 0
    with pytest.raises(DomainError):
        cpow(0.0, -0.5)


@given(st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False)
       .filter(lambda z: abs(z) > 1e-3),
       st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_cpow_matches_mpmath(z, w):
    ref = complex(mpmath.power(mpmath.mpc(z), mpmath.mpc(w)))
    if z.imag == 0 and z.real < 0:
        ref = complex(mpmath.exp(w * (mpmath.log(abs(z)) + 1j * mpmath.pi)))
    assert rel(cpow(z, w), ref) < 1e-12


@given(orders, st.integers(min_value=0, max_value=40))
def test_gen_binom_matches_mpmath(alpha, k):
    ref = float(mpmath.binomial(alpha, k))
    assert abs(gen_binom(alpha, k) - ref) <= 1e-13 * max(1.0, abs(ref))


@given(orders, st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_a_coeff_is_falling_factorial_over_factorials(alpha, r, k, l):
    ref = falling_factorial(alpha, r + k + l) / (
        math.factorial(r) * math.factorial(k) * math.factorial(l))
    assert abs(a_coeff(alpha, r, k, l) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_binomial_weights_recurrence():
    w = binomial_weights(0.5, 50)
    for m in range(50):
        assert abs(w[m] - (-1) ** m * gen_binom(0.5, m)) < 1e-15
    # weights of a positive order sum to zero
    assert abs(sum(binomial_weights(0.7, 200000))) < 1e-4


def test_compensated_sum_beats_naive():
    terms = [1.0, 1e100, 1.0, -1e100] * 1000
    assert compensated_sum(terms) == 2000.0
    with pytest.raises(DomainError):
        compensated_sum([1.0, float("inf")])


def test_sum_series_convergent():
    r = sum_series((0.5 ** n for n in range(200)), 1e-15, 200)
    assert r.converged and r.meta["regime"] == "convergent"
    assert abs(r.value - 2.0) < 1e-14


def test_sum_series_asymptotic_cuts_at_smallest_term():
    # sum n! (-x)^n at x = 0.1: terms shrink to n ~ 10, then grow
    x = 0.1
    terms = [math.factorial(n) * (-x) ** n for n in range(60)]
    r = sum_series(iter(terms), 1e-30, 60)
    assert not r.converged
    assert r.meta["regime"] == "asymptotic"
    assert r.meta["stop"] == "blowup"
    assert 8 <= r.terms_used <= 12
    # the Stieltjes value sits within the envelope of the optimal cut
    ref = float(mpmath.quad(lambda t: mpmath.exp(-t) / (1 + x * t), [0, mpmath.inf]))
    assert abs(r.value - ref) < 2 * r.err_estimate


def test_sum_series_budget_exhaustion():
    r = sum_series((1.0 / (n + 1) ** 2 for n in range(10 ** 6)), 1e-12, 20)
    assert not r.converged and r.meta["stop"] == "max_terms"
