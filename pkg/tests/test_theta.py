import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import rel
from fraczeta.core import SeriesBudget
from fraczeta.errors import DomainError
from fraczeta.theta import gaussian_cutoff, theta, theta_fe_residual


def mp_theta(s):
    return complex(mpmath.jtheta(3, 0, mpmath.exp(-mpmath.pi * mpmath.mpc(s))))


@given(st.builds(complex, st.floats(0.03, 5), st.floats(-3, 3)))
def test_theta_matches_mpmath(s):
    assert abs(theta(s).value - mp_theta(s)) <= 1e-11 * max(1.0, abs(mp_theta(s)))


def test_theta_one():
    ref = mpmath.pi ** 0.25 / mpmath.gamma(0.75)
    assert rel(theta(1.0).value, ref) < 1e-15


@given(st.builds(complex, st.floats(0.2, 5), st.floats(-2, 2)))
def test_inversion(s):
    assert theta_fe_residual(s) < 1e-12 * max(1.0, abs(theta(s).value))


def test_small_real_part_uses_inversion():
    r = theta(complex(0.01, 0.0))
    assert r.meta.get("path") == "functional-equation"
    assert rel(r.value, mp_theta(0.01)) < 1e-12


def test_monotone_on_real_axis():
    xs = [0.3 + 0.2 * k for k in range(30)]
    vals = [theta(x).value.real for x in xs]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_domain_and_cutoff():
    with pytest.raises(DomainError):
        theta(complex(0.0, 1.0))
    with pytest.raises(DomainError):
        gaussian_cutoff(1e-6, 1e-12, 10)
    assert gaussian_cutoff(1.0, 1e-12, 100) == 3
    # starving the budget is an error, not a silently short sum
    with pytest.raises(DomainError):
        theta(0.06, SeriesBudget(max_terms_per_axis=2, hard_cap=2))
