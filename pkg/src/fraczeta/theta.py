"""Jacobi theta ``theta(s) = sum_{n in Z} exp(-pi n^2 s)`` on ``Re s > 0``."""

from __future__ import annotations

import cmath
import math

from .core import DEFAULT_BUDGET, MethodResult, SeriesBudget, compensated_sum, cpow
from .errors import DomainError

FE_SWITCH = 0.05


def gaussian_cutoff(sigma: float, tol: float, hard_cap: int) -> int:
    """Smallest ``N`` whose omitted tail ``2 sum_{n>N} e^{-pi n^2 sigma}`` is below ``tol``."""
    N = 0
    while _tail(sigma, N) > tol:
        N += 1
        if N > hard_cap:
            raise DomainError(f"theta series needs more than {hard_cap} terms at Re(s)={sigma:g}")
    return N


def _tail(sigma: float, N: int) -> float:
    x = math.pi * sigma
    first = math.exp(-x * (N + 1) ** 2)
    return 2.0 * first / (1.0 - math.exp(-x * (2 * N + 3)))


def _theta_direct(s: complex, budget: SeriesBudget) -> MethodResult:
    N = gaussian_cutoff(s.real, budget.tail_tol, budget.hard_cap)
    total = 1.0 + 2.0 * compensated_sum(cmath.exp(-math.pi * n * n * s) for n in range(1, N + 1))
    err = _tail(s.real, N)
    return MethodResult(total, err, N, err <= budget.tail_tol)


def theta(s: complex, budget: SeriesBudget = DEFAULT_BUDGET) -> MethodResult:
    """Theta series with a geometric tail bound; near the imaginary axis the
    value is taken from ``s^{-1/2} theta(1/s)`` when that side converges faster."""
    s = complex(s)
    if not s.real > 0:
        raise DomainError("theta needs Re(s) > 0")
    inv = 1.0 / s
    if s.real < FE_SWITCH and inv.real > s.real:
        r = _theta_direct(inv, budget)
        f = cpow(s, -0.5)
        err = abs(f) * r.err_estimate
        return MethodResult(f * r.value, err, r.terms_used, err <= budget.tail_tol,
                            meta={"path": "functional-equation"})
    return _theta_direct(s, budget)


def theta_fe_residual(s: complex, budget: SeriesBudget = DEFAULT_BUDGET) -> float:
    """``|theta(s) - s^{-1/2} theta(1/s)|``, both sides summed directly."""
    s = complex(s)
    if not s.real > 0:
        raise DomainError("theta needs Re(s) > 0")
    lhs = _theta_direct(s, budget).value
    rhs = cpow(s, -0.5) * _theta_direct(1.0 / s, budget).value
    return abs(lhs - rhs)
