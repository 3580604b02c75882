import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import rel
from fraczeta.errors import DomainError, PoleError
from fraczeta.zeta import (classical_fe_hurwitz, hurwitz_zeta, hurwitz_zeta_derivs,
                           periodic_log_series, zeta, zeta_reflection_residual)

offsets = st.sampled_from([0.25, 0.5, 0.7, 1.0, 0.123])
points = st.builds(complex, st.floats(-6, 6), st.floats(-8, 8)).filter(
    lambda s: abs(s - 1) > 0.2)


def _mp_hurwitz(s, a):
    # mpmath forms 1 - s internally, so tiny |s| needs enough digits to survive it
    tiny = min((abs(x) for x in (s.real, s.imag) if x), default=1.0)
    extra = max(0, int(-math.log10(tiny))) if tiny < 1e-10 else 0
    with mpmath.workdps(mpmath.mp.dps + extra):
        return complex(mpmath.zeta(s, a))


@given(points, offsets)
def test_hurwitz_matches_mpmath(s, a):
    ref = _mp_hurwitz(s, a)
    assert abs(hurwitz_zeta(s, a).value - ref) <= 1e-10 * max(1.0, abs(ref))


@pytest.mark.parametrize("s,a", [(2.5, 1.0), (-1.5, 0.5), (complex(0.5, 3.0), 0.3),
                                 (complex(-3.0, 1.0), 0.75)])
def test_s_derivatives_match_mpmath(s, a):
    rs = hurwitz_zeta_derivs(s, a, 6)
    for l, r in enumerate(rs):
        ref = complex(mpmath.zeta(s, a, l))
        assert abs(r.value - ref) <= 1e-9 * max(1.0, abs(ref)), l
        assert abs(r.value - ref) <= max(10 * r.err_estimate, 1e-12 * max(1.0, abs(ref)))


def test_classical_values():
    assert rel(zeta(2).value, mpmath.pi ** 2 / 6) < 1e-14
    assert rel(zeta(-1).value, -1 / 12) < 1e-13
    assert rel(hurwitz_zeta(0, 1.0, 1).value, -0.5 * mpmath.log(2 * mpmath.pi)) < 1e-13


def test_pole():
    with pytest.raises(PoleError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 1.5)


@given(st.builds(complex, st.floats(-4.5, -0.5), st.floats(-3, 3)))
def test_reflection_residual(s):
    assert zeta_reflection_residual(s) <= 1e-10 * max(1.0, abs(zeta(s).value))


@given(st.builds(complex, st.floats(-5, -0.5), st.floats(-2, 2)), offsets)
def test_classical_hurwitz_fe(s, a):
    ref = complex(mpmath.zeta(s, a))
    assert abs(classical_fe_hurwitz(s, a).value - ref) <= 1e-8 * max(1.0, abs(ref))


def _mp_periodic(w, num, den, l, trig):
    # sum_q log^l(q) trig(2 pi q num/den) q^{-w}, grouped by q mod den
    tot = 0
    for r in range(1, den + 1):
        f = lambda x: den ** (-x) * mpmath.zeta(x, mpmath.mpf(r) / den)
        tot += trig(2 * mpmath.pi * r * num / den) * (-1) ** l * mpmath.diff(f, w, l)
    return complex(tot)


@pytest.mark.parametrize("num,den", [(1, 2), (1, 4), (3, 10), (1, 1)])
@pytest.mark.parametrize("l", [0, 2])
def test_periodic_log_series(num, den, l):
    s = complex(-2.5, 0.5)
    for kind, trig in (("cos", mpmath.cos), ("sin", mpmath.sin)):
        ref = _mp_periodic(1 - s, num, den, l, trig)
        got = periodic_log_series(s, num / den, l, kind).value
        assert abs(got - ref) < 1e-10 * max(1.0, abs(ref)), kind


def test_periodic_irrational_needs_left_half_plane():
    with pytest.raises(DomainError):
        periodic_log_series(0.5, 0.123456789, 0, "cos")
