"""Fractional derivatives of theta and the inversion-formula audit.

Termwise, ``D^alpha e^{-pi n^2 s} = (-pi n^2)^alpha e^{-pi n^2 s}``, and on the
principal branch ``(-x)^alpha = e^{i pi alpha} x^alpha``.  The printed series
carries ``e^{i pi n}`` instead; both phases are implemented and the GL oracle
decides between them.
"""

from __future__ import annotations

import cmath
import enum
import math

from .core import (DEFAULT_BUDGET, MethodResult, SeriesBudget, compensated_sum, cpow,
                   gen_binom, phase, sum_series)
from .errors import ConvergenceError, DomainError, FracZetaError
from .reports import EvalPoint, PointResidual, ResidualReport, Verdict
from .theta import theta

_EXACT_DF_MAX = 150


class ThetaVariant(str, enum.Enum):
    AS_PRINTED = "as_printed_e_ipin"
    CORRECTED = "corrected_e_ipialpha"


def double_factorial(k: int) -> int:
    """``(2k+1)!! = (2k+1)(2k-1)...3.1``."""
    if k < 0 or int(k) != k:
        raise ValueError("k must be a non-negative integer")
    out = 1
    for j in range(3, 2 * int(k) + 2, 2):
        out *= j
    return out


def _odd_ratio(k: int) -> float:
    """``(2k+1)!! / (2^k (2k+1)) = (2k-1)!!/2^k``, as a float without forming the factorial."""
    if k <= _EXACT_DF_MAX:
        return double_factorial(k) / (2 ** k * (2 * k + 1))
    return math.exp(math.lgamma(k + 0.5) - 0.5 * math.log(math.pi))


def _phase_factor(n: int, order: float, variant: ThetaVariant) -> complex:
    if variant is ThetaVariant.CORRECTED:
        return phase(order)
    return -1.0 if n % 2 else 1.0


def frac_theta_series(s: complex, alpha: float, variant: ThetaVariant = ThetaVariant.CORRECTED,
                      budget: SeriesBudget = DEFAULT_BUDGET) -> MethodResult:
    """``sum_{n != 0} phase(n) (pi n^2)^alpha e^{-pi n^2 s}``, summed over ``n >= 1`` and doubled.

    Negative ``alpha`` is accepted: the closed form continues in the order.  The
    ``n = 0`` term is zero for ``alpha > 0`` and is dropped for every order.
    """
    s = complex(s)
    variant = ThetaVariant(variant)
    if not s.real > 0:
        raise DomainError("theta derivatives need Re(s) > 0")
    if alpha == 0:
        raise DomainError("order 0 is the theta function itself")
    x = math.pi * s.real
    terms = []
    n = 1
    while True:
        u = math.pi * n * n
        # log-magnitude first so large negative orders do not overflow
        logmag = alpha * math.log(u) - u * s.real
        t = math.exp(logmag) if logmag > -745 else 0.0
        past_peak = u * s.real > max(alpha, 0.0) + 1.0
        if past_peak and t < budget.tail_tol * 1e-3:
            break
        terms.append(_phase_factor(n, alpha, variant) * cmath.exp(-1j * u * s.imag) * t)
        n += 1
        if n > budget.hard_cap:
            raise ConvergenceError(f"theta series needs more than {budget.hard_cap} terms")
    # past the peak consecutive ratios are below e^{-pi sigma (2n+1)} < 1/2
    nxt = (math.pi * n * n) ** alpha * math.exp(-math.pi * n * n * s.real)
    ratio = math.exp(-x * (2 * n + 1)) * ((n + 1) / n) ** (2 * max(alpha, 0.0))
    tail = 2.0 * nxt / (1.0 - min(ratio, 0.5))
    value = 2.0 * compensated_sum(terms)
    return MethodResult(value, tail, len(terms), tail <= budget.tail_tol * max(1.0, abs(value)),
                        variant=variant.value)


def _fe_terms(s: complex, alpha: float, variant: ThetaVariant, budget: SeriesBudget,
              mags: list[float]):
    inv = 1.0 / s
    pre = phase(alpha) * cpow(s, -(2.0 * alpha + 3.0) / 2.0)
    k = 0
    while True:
        th = frac_theta_series(inv, alpha - k, variant, budget).value
        term = gen_binom(alpha, k) * _odd_ratio(k) * pre * th
        mags.append(abs(term))
        yield term
        k += 1


def frac_theta_fe(s: complex, alpha: float, variant: ThetaVariant | None = None,
                  budget: SeriesBudget = DEFAULT_BUDGET) -> ResidualReport:
    """Residual of the inversion formula for ``theta^alpha`` at ``s``.

    The right side is
    ``sum_k C(alpha,k) e^{i pi alpha} (2k-1)!!/2^k s^{-(2 alpha+3)/2} theta^{(alpha-k)}(1/s)``,
    with the lower orders from :func:`frac_theta_series`; the left side is
    :func:`frac_theta_series` at ``s``.  The k-sum is asymptotic, so it is cut at
    its smallest term.  With ``variant=None`` both phase variants are evaluated
    and the report's variant is the one with the smaller residual.
    """
    s = complex(s)
    if not s.real > 0:
        raise DomainError("theta derivatives need Re(s) > 0")
    if not alpha > 0:
        raise DomainError("fractional order must be positive")
    variants = [ThetaVariant(variant)] if variant is not None else list(ThetaVariant)
    pts = []
    details: dict = {}
    inconclusive = False
    for v in variants:
        pt = EvalPoint(s, 1.0, alpha, extra={"phase": v.value})
        try:
            lhs = frac_theta_series(s, alpha, v, budget)
            mags: list[float] = []
            rhs = sum_series(_fe_terms(s, alpha, v, budget, mags), budget.tail_tol,
                             budget.max_terms_per_axis)
        except FracZetaError as exc:
            pts.append(PointResidual(pt, math.inf, 0.0, v.value, error=f"{exc.kind}: {exc}"))
            inconclusive = True
            continue
        regime = rhs.meta.get("regime", "convergent")
        # a sum that neither settled nor turned around within budget says nothing
        if not rhs.converged and rhs.meta.get("stop") == "max_terms":
            inconclusive = True
        res = abs(lhs.value - rhs.value)
        tol = 10.0 * (lhs.err_estimate + rhs.err_estimate) + 1e-13 * max(1.0, abs(lhs.value))
        pts.append(PointResidual(pt, res, tol, v.value,
                                 values={"lhs": lhs.value, "rhs": rhs.value}))
        # which classical value the right side tends to as alpha -> 0
        th_inv = theta(1.0 / s, budget).value
        th_s = theta(s, budget).value
        details[v.value] = {
            "k_terms": mags,
            "k_regime": regime,
            "k_envelope": rhs.err_estimate,
            "rhs_vs_theta": abs(rhs.value - th_s),
            "rhs_vs_theta_minus_1": abs(rhs.value - (th_s - 1.0)),
            "rhs_vs_scaled_theta_inv_minus_1":
                abs(rhs.value - cpow(s, -1.5) * (th_inv - 1.0)),
        }
    ok = [p for p in pts if p.error is None]
    best = min(ok, key=lambda p: p.residual).variant if ok else None
    note = ("theta inversion formula for fractional order: the step moving the derivative "
            "through theta(1/s) uses a chain rule that does not hold at fractional order, "
            "and the stated hypothesis Re(s) < 0 lies outside the theta domain; "
            "residuals are recorded, the formula is not asserted.")
    if inconclusive:
        verdict = Verdict.INCONCLUSIVE
    elif all(p.ok for p in pts):
        verdict = Verdict.PASS
    else:
        verdict = Verdict.DOCUMENTED
    return ResidualReport("theta-inversion", pts, verdict, notes=note, variant=best,
                          details=details)


def frac_theta_gl_discrimination(points, budget: SeriesBudget = DEFAULT_BUDGET,
                                 rtol: float = 1e-4) -> ResidualReport:
    """Compare both phase variants against the GL oracle at each ``(s, alpha)``.

    Pass when exactly one variant agrees to ``rtol`` (relative) at every point;
    the report's variant names it.
    """
    from .gl import gl_derivative

    f = lambda z: theta(z, budget).value
    rows = []
    wins = {v: 0 for v in ThetaVariant}
    for s, alpha in points:
        pt = EvalPoint(complex(s), 1.0, alpha)
        try:
            ref = gl_derivative(f, s, alpha, direction="backward", limit=1.0,
                                domain=lambda z: z.real > 0)
        except FracZetaError as exc:
            rows.append(PointResidual(pt, math.inf, rtol, None, error=f"{exc.kind}: {exc}"))
            continue
        for v in ThetaVariant:
            val = frac_theta_series(s, alpha, v, budget).value
            rel = abs(val - ref.value) / abs(ref.value)
            wins[v] += rel <= rtol
            rows.append(PointResidual(pt, rel, rtol, v.value,
                                      values={"series": val, "gl": ref.value}))
    n = len(points)
    winners = [v for v in ThetaVariant if wins[v] == n]
    losers_clean = all(wins[v] == 0 for v in ThetaVariant if v not in winners)
    if any(r.error for r in rows):
        verdict = Verdict.INCONCLUSIVE
        chosen = None
    elif len(winners) == 1 and losers_clean:
        verdict = Verdict.PASS
        chosen = winners[0].value
        # the losing variant's residuals are the evidence, not a tolerance breach
        rows = [r if r.variant == chosen else
                PointResidual(r.point, r.residual, math.inf, r.variant, r.values)
                for r in rows]
    else:
        verdict = Verdict.FAIL
        chosen = None
    return ResidualReport("theta-phase-vs-gl", rows, verdict, tolerances={"relative": rtol},
                          variant=chosen,
                          notes="" if chosen is None else f"GL oracle selects {chosen}",
                          details={"agreements": {v.value: wins[v] for v in ThetaVariant}})
