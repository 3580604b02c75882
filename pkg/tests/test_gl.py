import cmath
import math

import pytest

from conftest import rel
from fraczeta.core import phase
from fraczeta.errors import DomainError
from fraczeta.gl import GLSchedule, consistency_sweep, gl_derivative, leibniz_residual
from fraczeta.reports import Verdict


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.5])
def test_decaying_exponential_backward(alpha):
    # D^alpha e^{-lam s} = e^{i pi alpha} lam^alpha e^{-lam s}
    lam, s = 1.3, 0.4
    f = lambda z: cmath.exp(-lam * z)
    r = gl_derivative(f, s, alpha, direction="backward")
    exact = phase(alpha) * lam ** alpha * f(s)
    assert rel(r.value, exact) < 1e-6


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.9])
def test_increasing_exponential_forward(alpha):
    lam, s = math.log(2 * math.pi), complex(0.5, 0.25)
    f = lambda z: cmath.exp(lam * z)
    r = gl_derivative(f, s, alpha)
    assert rel(r.value, lam ** alpha * f(s)) < 1e-6


def test_integer_order_is_ordinary_derivative():
    sched = GLSchedule((0.1, 0.05, 0.025, 0.0125, 0.00625), 8192, 4)
    f = lambda z: cmath.exp(-2.0 * z)
    r = gl_derivative(f, 0.3, 1.0, sched, direction="backward")
    assert rel(r.value, -2.0 * f(0.3)) < 1e-8


def test_schedule_validation():
    with pytest.raises(ValueError):
        GLSchedule((0.1, 0.1))
    with pytest.raises(ValueError):
        GLSchedule((0.1, 0.05), richardson_levels=2)
    with pytest.raises(ValueError):
        GLSchedule(m_cap=10)
    with pytest.raises(DomainError):
        gl_derivative(lambda z: z, 1.0, 0.0)


def test_domain_guard_on_ray():
    with pytest.raises(DomainError):
        gl_derivative(lambda z: 1 / z, -1.0, 0.5, direction="backward",
                      domain=lambda z: z.real < 0)


@pytest.mark.parametrize("alpha", [0.5, 0.3, 1.7])
def test_leibniz_exponential_pair(alpha):
    assert leibniz_residual(1.0, 3.0, 0.0, alpha, 60) < 1e-10
    with pytest.raises(DomainError):
        leibniz_residual(3.0, 1.0, 0.0, alpha, 10)


def test_sweep_direct_series():
    rep = consistency_sweep("hurwitz", 3.0, 1.0, (0.1, 0.01, 0.001))
    assert rep.verdict is Verdict.PASS
    res = [p.residual for p in rep.points]
    assert res[0] > res[1] > res[2]
    with pytest.raises(ValueError):
        consistency_sweep("hurwitz", 3.0, 1.0, (0.01, 0.1))
