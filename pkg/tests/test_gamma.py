import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import rel
from fraczeta.errors import OrderCapError, PoleError
from fraczeta.gamma import (ORDER_CAP, bernoulli, gamma, gamma_derivs, polygamma, recip_gamma,
                            recip_gamma_derivs)

plane = st.builds(complex, st.floats(-30, 30), st.floats(-30, 30)).filter(
    lambda z: min(abs(z - round(z.real)), 10) > 1e-3 or z.real > 0.5)


@given(plane)
def test_gamma_matches_mpmath(z):
    ref = complex(mpmath.gamma(z))
    assert rel(gamma(z), ref) < 1e-12


def test_gamma_poles():
    for n in range(0, 6):
        with pytest.raises(PoleError):
            gamma(-n)
    assert recip_gamma(-3) == 0


def test_gamma_half():
    assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-15


@given(plane, st.integers(0, 6))
def test_polygamma_matches_mpmath(z, m):
    ref = complex(mpmath.polygamma(m, z))
    assert abs(polygamma(z, m) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_polygamma_far_left_uses_reflection():
    z = complex(-55.3, 2.0)
    for m in (0, 2):
        assert rel(polygamma(z, m), complex(mpmath.polygamma(m, z))) < 1e-10


def test_psi_one_is_minus_euler_gamma():
    assert abs(polygamma(1.0, 0) + float(mpmath.euler)) < 1e-15


def test_bernoulli_exact():
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(1) == -0.5 and bernoulli(7) == 0


@pytest.mark.parametrize("z", [0.5, 2.5, complex(1.5, 2.0), complex(-0.5, 1.0)])
def test_gamma_derivs_match_mpmath(z):
    ds = gamma_derivs(z, 8)
    for r, d in enumerate(ds):
        ref = complex(mpmath.diff(mpmath.gamma, z, r))
        assert abs(d - ref) <= 1e-9 * max(1.0, abs(ref)), r


@pytest.mark.parametrize("z", [1.5, 2.0, complex(1.5, 0.5), 3.7])
def test_recip_gamma_derivs_high_order(z):
    ds = recip_gamma_derivs(z, ORDER_CAP)
    with mpmath.workdps(40):
        for m in (0, 1, 5, 12, 20, 30):
            ref = complex(mpmath.diff(mpmath.rgamma, z, m))
            assert abs(ds[m] - ref) <= 1e-11 * max(1.0, abs(ref)) * math.factorial(min(m, 10)), m


def test_order_cap():
    with pytest.raises(OrderCapError):
        gamma_derivs(1.5, ORDER_CAP + 1)
    with pytest.raises(ValueError):
        polygamma(1.5, -1)
