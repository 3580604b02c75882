import cmath
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import rel
from fraczeta.core import SeriesBudget, phase
from fraczeta.errors import ConvergenceError, DomainError
from fraczeta.frac_zeta import (FormulaVariant, FracEvalPoint, SeriesSign, SimplifiedVariant,
                                convolution_identity_residual, frac_hurwitz_fe_rational,
                                frac_hurwitz_fe_simplified, frac_hurwitz_fe_trig,
                                frac_hurwitz_fe_triple, frac_hurwitz_fe_unsimplified,
                                frac_zeta_fe_riemann, frac_zeta_fe_simplified_riemann,
                                frac_zeta_fe_trig_riemann, frac_zeta_series)
from fraczeta.reports import Verdict
from fraczeta.zeta import classical_fe_hurwitz, hurwitz_zeta


def mp_series(s, a, alpha):
    # k = 0 at a < 1 takes the principal branch of log^alpha(a)
    f = lambda k: mpmath.power(mpmath.log(k + a), alpha) * mpmath.power(k + a, -s)
    start = 1 if a == 1 else 0
    return complex(mpmath.expjpi(alpha) * mpmath.nsum(f, [start, mpmath.inf]))


def test_eval_point_guards():
    with pytest.raises(DomainError):
        FracEvalPoint(2.0, 1.5, 0.5)
    with pytest.raises(DomainError):
        FracEvalPoint(2.0, 1.0, 1.0 + 1e-8)
    with pytest.raises(DomainError):
        FracEvalPoint(2.0, 1.0, 0.0)


@pytest.mark.parametrize("s,a,alpha", [(4.0, 1.0, 0.5), (5.0, 1.0, 0.3), (4.5, 0.5, 0.5),
                                       (complex(5.0, 2.0), 0.75, 0.4)])
def test_series_matches_mpmath(s, a, alpha):
    r = frac_zeta_series(FracEvalPoint(s, a, alpha))
    ref = mp_series(s, a, alpha)
    assert abs(r.value - ref) <= 1e-10 * max(1.0, abs(ref))
    assert r.converged


@given(st.floats(4.0, 7.0), st.floats(0.05, 0.95))
def test_series_phase_at_real_s(s, alpha):
    # every term is positive, so the argument is the phase alone
    r = frac_zeta_series(FracEvalPoint(s, 1.0, alpha))
    assert abs(cmath.phase(r.value) - math.pi * alpha) < 1e-12


def test_series_domain_and_starvation():
    with pytest.raises(DomainError):
        frac_zeta_series(FracEvalPoint(0.5, 1.0, 0.5))
    with pytest.raises(DomainError):
        frac_zeta_series(FracEvalPoint(1.4, 1.0, 0.5))
    # just inside the domain the tail needs more terms than the cap allows
    with pytest.raises(ConvergenceError):
        frac_zeta_series(FracEvalPoint(2.5, 1.0, 0.7))


def test_order_limit_towards_one():
    s = 4.0
    target = hurwitz_zeta(s, 1.0, 1).value
    res = [abs(frac_zeta_series(FracEvalPoint(s, 1.0, al)).value - target)
           for al in (0.9, 0.99, 0.999)]
    assert res[0] > res[1] > res[2]
    assert res[2] < 1e-3


def test_fe_forms_need_left_half_plane():
    for fn in (frac_hurwitz_fe_triple, frac_hurwitz_fe_trig, frac_hurwitz_fe_simplified):
        with pytest.raises(DomainError):
            fn(FracEvalPoint(0.5, 1.0, 0.5))


def test_reductions_at_a_equal_one_are_bit_identical():
    s, al = complex(-2.5, 0.5), 0.4
    p = FracEvalPoint(s, 1.0, al)
    assert frac_hurwitz_fe_triple(p).value == frac_zeta_fe_riemann(s, al).value
    assert frac_hurwitz_fe_trig(p).value == frac_zeta_fe_trig_riemann(s, al).value
    assert frac_hurwitz_fe_simplified(p).value == frac_zeta_fe_simplified_riemann(s, al).value


def test_rational_form_with_unit_denominator():
    s, al = -2.5, 0.5
    r = frac_hurwitz_fe_rational(s, 1, 1, al).value
    assert abs(r - frac_zeta_fe_riemann(s, al).value) < 1e-10
    with pytest.raises(DomainError):
        frac_hurwitz_fe_rational(s, 3, 2, al)


def test_negative_log_sign_is_the_unsimplified_sum():
    p = FracEvalPoint(complex(-1.5, 1.0), 0.25, 0.3)
    neg = frac_hurwitz_fe_triple(p, FormulaVariant(SeriesSign.PAPER_NEGATIVE_LOG)).value
    pos = frac_hurwitz_fe_triple(p, FormulaVariant(SeriesSign.PROOF_POSITIVE_LOG)).value
    ref = frac_hurwitz_fe_unsimplified(p).value
    assert abs(neg - ref) <= 1e-12 * max(1.0, abs(ref))
    assert abs(pos - ref) > 1e-6


def test_simplified_variants_coincide_when_sine_sum_vanishes():
    for a in (0.5, 1.0):
        p = FracEvalPoint(-2.5, a, 0.3)
        v1 = frac_hurwitz_fe_simplified(p, variant=SimplifiedVariant.AS_PRINTED).value
        v2 = frac_hurwitz_fe_simplified(p, variant=SimplifiedVariant.CORRECTED).value
        assert abs(v1 - v2) < 1e-14


@pytest.mark.parametrize("fn", [frac_hurwitz_fe_triple, frac_hurwitz_fe_trig,
                                frac_hurwitz_fe_simplified])
def test_small_order_recovers_classical_value(fn):
    s, a = -2.5, 1.0
    target = classical_fe_hurwitz(s, a).value
    res = [abs(fn(FracEvalPoint(s, a, al)).value - target) for al in (0.1, 0.01, 0.001)]
    assert res[0] > res[1] > res[2]
    assert res[2] < 5e-3


def test_asymptotic_forms_report_their_regime():
    r = frac_hurwitz_fe_triple(FracEvalPoint(-2.5, 0.5, 0.5))
    assert r.meta["regime"] == "asymptotic" and not r.converged
    assert r.err_estimate > 0
    with pytest.raises(ConvergenceError):
        frac_hurwitz_fe_triple(FracEvalPoint(-2.5, 0.5, 0.5), strict=True)


def test_convolution_at_unit_offset():
    rep = convolution_identity_residual(6.0, 1.0, 0.5, 10 ** 5)
    assert rep.verdict is Verdict.PASS
    assert rep.variant == "shifted"


def test_convolution_off_unit_offset_is_documented():
    rep = convolution_identity_residual(6.0, 0.5, 0.5, 10 ** 4)
    assert rep.verdict is Verdict.DOCUMENTED
    assert "divisor-sum" in rep.notes
