import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import rel
from fraczeta.errors import DomainError
from fraczeta.frac_theta import (ThetaVariant, _odd_ratio, double_factorial, frac_theta_fe,
                                 frac_theta_gl_discrimination, frac_theta_series)
from fraczeta.reports import Verdict
from fraczeta.theta import theta


def mp_frac_theta(s, alpha, printed=False):
    def term(n):
        ph = (-1) ** int(n) if printed else mpmath.expjpi(alpha)
        u = mpmath.pi * n * n
        return ph * u ** alpha * mpmath.exp(-u * s)
    return complex(2 * mpmath.nsum(term, [1, mpmath.inf]))


@given(st.builds(complex, st.floats(0.3, 4), st.floats(-2, 2)), st.floats(0.05, 2.5))
def test_series_matches_mpmath(s, alpha):
    ref = mp_frac_theta(s, alpha)
    assert abs(frac_theta_series(s, alpha).value - ref) <= 1e-11 * max(1.0, abs(ref))


def test_printed_phase_variant():
    s, alpha = 1.5, 0.5
    got = frac_theta_series(s, alpha, ThetaVariant.AS_PRINTED).value
    assert rel(got, mp_frac_theta(s, alpha, printed=True)) < 1e-12


def test_negative_order_is_an_integral():
    s = 1.2
    got = frac_theta_series(s, -1.0).value
    ref = -mpmath.quad(lambda t: mpmath.jtheta(3, 0, mpmath.exp(-mpmath.pi * t)) - 1,
                       [s, mpmath.inf])
    assert rel(got, complex(ref)) < 1e-10


def test_integer_order_is_ordinary_derivative():
    s = 0.8
    h = 1e-4
    d = (theta(s + h).value - theta(s - h).value) / (2 * h)
    assert abs(frac_theta_series(s, 1.0).value - d) < 1e-7


def test_domain():
    with pytest.raises(DomainError):
        frac_theta_series(0.0, 0.5)
    with pytest.raises(DomainError):
        frac_theta_series(1.0, 0.0)


@pytest.mark.parametrize("k", [0, 1, 5, 20, 160])
def test_double_factorial(k):
    assert double_factorial(k) == math.prod(range(1, 2 * k + 2, 2))
    ref = mpmath.fac2(2 * k + 1) / (2 ** k * (2 * k + 1))
    assert rel(_odd_ratio(k), complex(ref)) < 1e-12


def test_double_factorial_rejects_bad_input():
    with pytest.raises(ValueError):
        double_factorial(-1)


def test_gl_selects_principal_phase():
    pts = [(s, a) for s in (1.0, 2.0) for a in (0.3, 0.5, 0.7)]
    rep = frac_theta_gl_discrimination(pts)
    assert rep.verdict is Verdict.PASS
    assert rep.variant == ThetaVariant.CORRECTED.value


def test_inversion_formula_is_documented():
    rep = frac_theta_fe(2.0, 0.5)
    assert rep.verdict is Verdict.DOCUMENTED
    assert rep.notes
    with pytest.raises(DomainError):
        frac_theta_fe(-1.0, 0.5)
