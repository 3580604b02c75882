"""Brute-force Grunwald-Letnikov differentiation and the sanity checks built on it.

The oracle evaluates the binomially weighted difference quotient

    D_l f(s) = l^{-alpha} sum_m (-1)^m C(alpha, m) f(s - m l)

for a short schedule of step sizes and Richardson-extrapolates to ``l -> 0``.
It knows nothing about zeta or theta beyond point values of ``f``.

Functions that decay to the right (zeta, theta) cannot be probed along
``s - m l``: the ray runs into the pole at 1 or off the half plane.  For those
``direction="backward"`` sums along ``s + m l`` and multiplies by
``e^{i pi alpha}``, which is the same operator on every exponential
``e^{lambda s}`` (both give ``lambda^alpha e^{lambda s}`` on the principal
branch).  ``limit`` is the value ``f`` tends to along the ray; since the
weights sum to zero it can be subtracted termwise, which turns a slowly
converging sum into a geometrically converging one.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .core import (DEFAULT_BUDGET, CompensatedSum, MethodResult, SeriesBudget,
                   binomial_weights, compensated_sum, gen_binom, phase)
from .errors import ConvergenceError, DomainError, FracZetaError
from .reports import EvalPoint, PointResidual, ResidualReport, Verdict

_PATIENCE = 8


@dataclass(frozen=True)
class GLSchedule:
    l_values: tuple[float, ...] = (0.1, 0.05, 0.025, 0.0125)
    m_cap: int = 4096
    richardson_levels: int = 3

    def __post_init__(self) -> None:
        ls = tuple(float(x) for x in self.l_values)
        object.__setattr__(self, "l_values", ls)
        if not ls or any(x <= 0 for x in ls):
            raise ValueError("step sizes must be positive")
        if any(b >= a for a, b in zip(ls, ls[1:])):
            raise ValueError("step sizes must be strictly decreasing")
        if self.m_cap < 64:
            raise ValueError("m_cap must be at least 64")
        if not 0 <= self.richardson_levels <= len(ls) - 1:
            raise ValueError("need more step sizes than Richardson levels")


DEFAULT_SCHEDULE = GLSchedule()


def _gl_sum(f, s, l, weights, sign, limit, tail_tol, domain):
    acc = CompensatedSum()
    wsum = CompensatedSum()
    small = 0
    dev = 0j
    for m, w in enumerate(weights):
        z = s + sign * m * l
        if domain is not None and not domain(z):
            raise DomainError(f"GL ray leaves the domain at {z}")
        dev = complex(f(z)) - limit
        term = w * dev
        acc.add(term)
        wsum.add(w)
        small = small + 1 if abs(term) < tail_tol / 10 else 0
        if small >= _PATIENCE:
            break
    # the unvisited weights sum to -(visited weights); charge them the last
    # deviation, which makes the sum exact for f constant beyond the cutoff
    acc.add(-wsum.value * dev)
    return acc.value, m + 1, small >= _PATIENCE


def gl_derivative(f: Callable[[complex], complex], s: complex, alpha: float,
                  schedule: GLSchedule = DEFAULT_SCHEDULE, *,
                  direction: str = "forward", limit: complex = 0.0,
                  tail_tol: float = 1e-13, rtol: float = 1e-6,
                  domain: Callable[[complex], bool] | None = None) -> MethodResult:
    """Richardson-extrapolated GL derivative of ``f`` at ``s``.

    ``err_estimate`` is the last extrapolation delta.  ``converged`` means that
    delta is below ``rtol * max(1, |value|)`` and every step's sum met its tail
    rule before ``m_cap``.
    """
    if not alpha > 0:
        raise DomainError("GL order must be positive")
    if direction not in ("forward", "backward"):
        raise ValueError("direction must be 'forward' or 'backward'")
    s = complex(s)
    limit = complex(limit)
    sign = -1.0 if direction == "forward" else 1.0
    pref = 1.0 if direction == "forward" else phase(alpha)
    weights = binomial_weights(alpha, schedule.m_cap + 1)
    col = []
    terms = 0
    tails_ok = True
    for l in schedule.l_values:
        val, used, ok = _gl_sum(f, s, l, weights, sign, limit, tail_tol, domain)
        col.append(pref * val * l ** (-alpha))
        terms += used
        tails_ok = tails_ok and ok
    # Richardson tableau: level p removes the O(l^p) term
    table = [col]
    ls = schedule.l_values
    for p in range(1, schedule.richardson_levels + 1):
        prev = table[-1]
        nxt = []
        for i in range(len(prev) - 1):
            r = (ls[i] / ls[i + 1]) ** p
            nxt.append((r * prev[i + 1] - prev[i]) / (r - 1.0))
        table.append(nxt)
    # delta of each level: how far its newest entry moved the estimate
    deltas = [abs(table[0][-1] - table[0][-2])] if len(col) >= 2 else []
    deltas += [abs(table[p][-1] - table[p - 1][-1]) for p in range(1, len(table))]
    value = table[-1][-1]
    err = deltas[-1] if deltas else math.inf
    floor = 1e-13 * max(1.0, abs(value))
    last3 = deltas[-3:]
    if len(last3) >= 2 and any(b > a and b > floor for a, b in zip(last3, last3[1:])):
        raise ConvergenceError(f"GL extrapolation deltas not decreasing: {last3}")
    conv = tails_ok and err <= rtol * max(1.0, abs(value))
    return MethodResult(value, err, terms, conv,
                        meta={"direction": direction, "deltas": deltas, "tails_ok": tails_ok})


def leibniz_residual(c: float, d: float, s: complex, alpha: float, N: int) -> float:
    """Residual of the generalized Leibniz rule on ``e^{cs} e^{ds}``, closed forms on both sides."""
    if not 0 < c < d:
        raise DomainError("the binomial expansion needs 0 < c < d")
    if N < 1:
        raise ValueError("N must be positive")
    series = compensated_sum(gen_binom(alpha, k) * c ** k * d ** (alpha - k) for k in range(N + 1))
    exact = (c + d) ** alpha
    return abs(exact - series) * abs(cmath.exp((c + d) * complex(s)))


# -- order-limit sweeps ----------------------------------------------------------

def _sweep_target(f_id: str, s: complex, a: float, budget: SeriesBudget):
    """(evaluator alpha -> MethodResult, classical target value, note)."""
    from . import bridge, frac_theta, frac_zeta, theta, zeta

    if f_id in ("hurwitz", "frac-zeta-fe-triple"):
        if s.real < 0:
            tgt = zeta.classical_fe_hurwitz(s, a, budget).value
            ev = lambda al: frac_zeta.frac_hurwitz_fe_triple(
                frac_zeta.FracEvalPoint(s, a, al), budget=budget)
            return ev, tgt, "vs classical Hurwitz functional equation"
        # direct series: the k = 0 term log^alpha(a) drops out only at a = 1
        tgt = zeta.hurwitz_zeta(s, a, 0, budget).value - (1.0 if a == 1.0 else 0.0)
        ev = lambda al: frac_zeta.frac_zeta_series(frac_zeta.FracEvalPoint(s, a, al), budget)
        return ev, tgt, "direct series vs zeta(s,a) minus the vanishing k = 0 term"
    if f_id == "frac-zeta-fe-simplified":
        tgt = zeta.classical_fe_hurwitz(s, a, budget).value
        ev = lambda al: frac_zeta.frac_hurwitz_fe_simplified(frac_zeta.FracEvalPoint(s, a, al), budget)
        return ev, tgt, "vs classical Hurwitz functional equation"
    if f_id == "frac-zeta-fe-trig":
        tgt = zeta.classical_fe_hurwitz(s, a, budget).value
        ev = lambda al: frac_zeta.frac_hurwitz_fe_trig(frac_zeta.FracEvalPoint(s, a, al), budget=budget)
        return ev, tgt, "vs classical Hurwitz functional equation"
    if f_id == "theta":
        tgt = theta.theta(s, budget).value - 1.0
        ev = lambda al: frac_theta.frac_theta_series(s, al, frac_theta.ThetaVariant.CORRECTED, budget)
        return ev, tgt, "vs theta(s) - 1 (the n = 0 term vanishes for alpha > 0)"
    if f_id == "frac-zeta-integral":
        tgt = bridge.completed_zeta_integral(s).value
        ev = lambda al: bridge.frac_zeta_integral_value(s, al, "corrected_recip_gamma", budget)
        return ev, tgt, "vs the completed zeta integral"
    raise ValueError(f"unknown sweep target {f_id!r}")


def consistency_sweep(f_id: str, s: complex, a: float, alphas: Sequence[float],
                      budget: SeriesBudget = DEFAULT_BUDGET,
                      final_tol: float = 5e-3) -> ResidualReport:
    """Residual against the integer-order value as ``alpha -> 0+``.

    Pass iff the residuals strictly decrease and the last one is below
    ``final_tol``.
    """
    alphas = [float(x) for x in alphas]
    if not alphas:
        raise ValueError("alpha list is empty")
    if any(not 0 < x < 1 for x in alphas) or any(b >= a_ for a_, b in zip(alphas, alphas[1:])):
        raise ValueError("alphas must be strictly decreasing inside (0, 1)")
    s = complex(s)
    ev, target, note = _sweep_target(f_id, s, a, budget)
    pts = []
    for al in alphas:
        p = EvalPoint(s, a, al)
        try:
            r = ev(al)
            res = abs(r.value - target)
            pts.append(PointResidual(p, res, final_tol, r.variant,
                                     values={"value": r.value, "target": target}))
        except FracZetaError as exc:
            pts.append(PointResidual(p, math.inf, final_tol, None, error=f"{exc.kind}: {exc}"))
    res = [p.residual for p in pts]
    if any(p.error for p in pts):
        verdict = Verdict.INCONCLUSIVE
    elif all(b < a_ for a_, b in zip(res, res[1:])) and res[-1] < final_tol:
        verdict = Verdict.PASS
    else:
        verdict = Verdict.FAIL
    # per-point tolerance is only binding on the last point; earlier ones are trend data
    pts = [PointResidual(p.point, p.residual, p.tolerance if i == len(pts) - 1 else math.inf,
                         p.variant, p.values, p.error) for i, p in enumerate(pts)]
    return ResidualReport(f"alpha-limit:{f_id}", pts, verdict,
                          tolerances={"final": final_tol}, notes=note,
                          details={"residuals": res, "target": target})
