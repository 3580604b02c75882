"""Hurwitz zeta and its s-derivatives, the log-weighted periodic series, and the
classical reflection formulas used as baselines.

Every derivative order comes out of one Euler-Maclaurin pass: the direct sum,
the integral term, the half term and the Bernoulli corrections are each
differentiated analytically in ``s``, so ``hurwitz_zeta_derivs`` hands back
orders ``0..lmax`` for the price of one.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import DEFAULT_BUDGET, MethodResult, SeriesBudget, make_result
from .errors import ConvergenceError, DomainError, OrderCapError, PoleError
from .gamma import ORDER_CAP, bernoulli, gamma

EM_TERMS = 12
EM_MIN_SHIFT = 15
EM_MAX_SHIFT = 1 << 14
RATIONAL_MAX_DEN = 64
_EPS = 2.220446049250313e-16


@lru_cache(maxsize=None)
def _em_coeff(j: int) -> float:
    return float(bernoulli(2 * j)) / math.factorial(2 * j)


def _rising_taylor(s: complex, n: int, order: int) -> list[complex]:
    """Derivatives ``0..order`` of ``s (s+1) ... (s+n-1)`` at ``s``.

    Multiplies truncated Taylor series factor by factor, which avoids the
    cancellation of expanded monomial coefficients at negative ``s``.
    """
    coef = [1 + 0j] + [0j] * order
    for i in range(n):
        c0 = s + i
        for k in range(order, 0, -1):
            coef[k] = coef[k] * c0 + coef[k - 1]
        coef[0] *= c0
    return [coef[k] * math.factorial(k) for k in range(order + 1)]


def _em_pass(s: complex, a: float, lmax: int, N: int, M: int):
    """Euler-Maclaurin values for orders ``0..lmax`` plus per-order truncation
    estimates (magnitude of the first omitted correction) and rounding scales."""
    x = np.arange(N, dtype=float) + a
    lx = np.log(x)
    p = np.exp(-s * lx)
    X = N + a
    u = math.log(X)
    t = s - 1.0
    EX = cmath.exp(-u * s)

    vals = np.zeros(lmax + 1, dtype=complex)
    scale = np.zeros(lmax + 1)
    trunc = np.zeros(lmax + 1)
    # (-u)^n and derivatives of the correction polynomials, shared across l
    mu = [(-u) ** n for n in range(lmax + 1)]
    poly_d = [_rising_taylor(s, 2 * j - 1, min(lmax, 2 * j - 1)) for j in range(1, M + 2)]
    for l in range(lmax + 1):
        direct = complex(p.sum())
        sc = float(np.abs(p).sum())
        p = p * (-lx)
        # d^l/dt^l [e^{-u t} / t]
        integ = 0j
        for i in range(l + 1):
            integ += math.comb(l, i) * mu[l - i] * (-1) ** i * math.factorial(i) * t ** (-1 - i)
        integ *= cmath.exp(-u * t)
        half = 0.5 * mu[l] * EX
        corr = 0j
        last = prev = 0j
        for j in range(1, M + 2):
            ders = poly_d[j - 1]
            acc = 0j
            for i in range(min(l, len(ders) - 1) + 1):
                acc += math.comb(l, i) * ders[i] * mu[l - i]
            term = _em_coeff(j) * X ** (1 - 2 * j) * EX * acc
            if j <= M:
                corr += term
                prev = term
            else:
                last = term
        vals[l] = direct + integ + half + corr
        scale[l] = sc + abs(integ) + abs(half) + abs(corr)
        # an omitted term that is not smaller than its predecessor means the
        # correction series has not started converging at this shift
        trunc[l] = abs(last) if abs(last) <= 0.5 * abs(prev) or last == 0 else math.inf
    return vals, trunc, scale


def _check_args(s: complex, a: float, lmax: int) -> complex:
    s = complex(s)
    if not (0.0 < a <= 1.0):
        raise DomainError(f"offset a={a} outside (0, 1]")
    if lmax < 0:
        raise ValueError("derivative order must be nonnegative")
    if lmax > ORDER_CAP:
        raise OrderCapError(f"derivative order {lmax} exceeds cap {ORDER_CAP}")
    if s == 1:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    return s


def _shift_candidates(s: complex):
    n = max(3, math.ceil(abs(s) / (2.0 * math.pi)))
    while n <= EM_MAX_SHIFT:
        yield n
        n = max(n + 1, int(n * 1.35))


def hurwitz_zeta_derivs(s: complex, a: float, lmax: int,
                        budget: SeriesBudget = DEFAULT_BUDGET) -> list[MethodResult]:
    """``[d^l/ds^l zeta(s, a) for l in 0..lmax]`` from shared Euler-Maclaurin passes.

    The shift ``N`` grows from a small start until, for every order, the first
    omitted correction is below the rounding noise of the direct sum.  Each
    order keeps the shift with the smallest truncation-plus-rounding estimate.
    Small shifts matter for ``Re s < 1``, where the direct terms grow and a
    large shift only buys cancellation.
    """
    s = _check_args(s, a, lmax)
    best = [None] * (lmax + 1)
    best_err = [math.inf] * (lmax + 1)
    for N in _shift_candidates(s):
        vals, trunc, scale = _em_pass(s, a, lmax, N, EM_TERMS)
        done = True
        for l in range(lmax + 1):
            rnd = 8 * _EPS * scale[l]
            est = trunc[l] + rnd
            if est < best_err[l]:
                best_err[l] = est
                best[l] = (complex(vals[l]), float(trunc[l]), N)
            if not trunc[l] <= rnd:
                done = False
        if done:
            break
    out = []
    for l in range(lmax + 1):
        if best[l] is None:
            raise ConvergenceError(f"Euler-Maclaurin failed for order {l} at s={s}")
        val, tr, N = best[l]
        tol = budget.tail_tol * max(1.0, abs(val))
        out.append(MethodResult(val, best_err[l], N + EM_TERMS, bool(tr <= tol),
                                meta={"shift": N}))
    return out


def hurwitz_zeta(s: complex, a: float = 1.0, l: int = 0,
                 budget: SeriesBudget = DEFAULT_BUDGET) -> MethodResult:
    """``d^l/ds^l zeta(s, a)`` on the whole plane minus ``s = 1``.

    For ``Re s > 1`` this is ``sum_k (-log(k+a))^l (k+a)^{-s}``; elsewhere the
    Euler-Maclaurin form continues it.
    """
    return hurwitz_zeta_derivs(s, a, l, budget)[l]


def zeta(s: complex, budget: SeriesBudget = DEFAULT_BUDGET) -> MethodResult:
    return hurwitz_zeta(s, 1.0, 0, budget)


def zeta_reflection_residual(s: complex, budget: SeriesBudget = DEFAULT_BUDGET) -> float:
    """``|zeta(s) - 2 (2 pi)^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)|``."""
    s = complex(s)
    lhs = zeta(s, budget).value
    rhs = (2.0 * (2.0 * math.pi) ** (s - 1) * cmath.sin(math.pi * s / 2)
           * gamma(1.0 - s) * zeta(1.0 - s, budget).value)
    return abs(lhs - rhs)


# -- periodic log-weighted series -------------------------------------------------

def _as_rational(a: float) -> Fraction | None:
    fr = Fraction(a).limit_denominator(RATIONAL_MAX_DEN)
    if abs(float(fr) - a) <= 4 * _EPS * max(1.0, abs(a)):
        return fr
    return None


def _exact_trig(num: int, den: int) -> tuple[float, float]:
    """``cos`` and ``sin`` of ``2 pi num / den`` with exact zeros and signs on the axes."""
    r = Fraction(num, den) % 1
    exact = {Fraction(0): (1.0, 0.0), Fraction(1, 4): (0.0, 1.0),
             Fraction(1, 2): (-1.0, 0.0), Fraction(3, 4): (0.0, -1.0)}
    if r in exact:
        return exact[r]
    ang = 2.0 * math.pi * float(r)
    return math.cos(ang), math.sin(ang)


def periodic_log_series_all(s: complex, a: float, lmax: int,
                            budget: SeriesBudget = DEFAULT_BUDGET
                            ) -> tuple[list[MethodResult], list[MethodResult]]:
    """Cosine and sine sums ``sum_{q>=1} (log q)^l trig(2 pi q a) / q^{1-s}``
    for ``l = 0..lmax``.

    Rational offsets with denominator up to 64 go through Hurwitz zeta at
    ``h / Q``, which is also valid on the continuation; ``a = 1`` reduces to
    Riemann zeta derivatives.  Other offsets are summed directly and need
    ``Re s < 0``.  The log power is unsigned here; callers apply any sign.
    """
    s = complex(s)
    if not (0.0 < a <= 1.0):
        raise DomainError(f"offset a={a} outside (0, 1]")
    if lmax < 0 or lmax > ORDER_CAP:
        raise OrderCapError(f"log power {lmax} outside 0..{ORDER_CAP}")
    w = 1.0 - s
    fr = _as_rational(a)
    if fr is not None:
        return _periodic_rational(w, fr, lmax, budget)
    if s.real >= 0:
        raise DomainError("direct periodic summation needs Re(s) < 0")
    pairs = [_periodic_direct(w, a, l, budget) for l in range(lmax + 1)]
    return [c for c, _ in pairs], [x for _, x in pairs]


def periodic_log_series(s: complex, a: float, l: int, kind: str,
                        budget: SeriesBudget = DEFAULT_BUDGET) -> MethodResult:
    if kind not in ("cos", "sin"):
        raise ValueError("kind must be 'cos' or 'sin'")
    cos_r, sin_r = periodic_log_series_all(s, a, l, budget)
    return cos_r[l] if kind == "cos" else sin_r[l]


def _periodic_rational(w: complex, fr: Fraction, lmax: int, budget: SeriesBudget):
    p, Q = fr.numerator, fr.denominator
    if Q == 1:
        zs = hurwitz_zeta_derivs(w, 1.0, lmax, budget)
        meta = {"path": "riemann"}
        cos_r = [MethodResult((-1) ** l * z.value, z.err_estimate, z.terms_used, z.converged,
                              meta=dict(meta)) for l, z in enumerate(zs)]
        sin_r = [MethodResult(0j, 0.0, 0, True, meta=dict(meta)) for _ in zs]
        return cos_r, sin_r
    logQ = math.log(Q)
    Qw = cmath.exp(-w * logQ)
    trig = [_exact_trig(h * p, Q) for h in range(1, Q + 1)]
    zss = [hurwitz_zeta_derivs(w, h / Q, lmax, budget) for h in range(1, Q + 1)]
    meta = {"path": "rational", "denominator": Q}
    cos_r, sin_r = [], []
    for l in range(lmax + 1):
        cos_acc = sin_acc = 0j
        err = 0.0
        ok = True
        for (c, sn), zs in zip(trig, zss):
            inner = 0j
            for j in range(l + 1):
                coef = math.comb(l, j) * logQ ** (l - j) * (-1) ** j
                inner += coef * zs[j].value
                err += abs(coef) * zs[j].err_estimate
                ok = ok and zs[j].converged
            cos_acc += c * inner
            sin_acc += sn * inner
        err *= abs(Qw)
        terms = sum(zs[l].terms_used for zs in zss)
        cos_r.append(MethodResult(Qw * cos_acc, err, terms, ok, meta=dict(meta)))
        sin_r.append(MethodResult(Qw * sin_acc, err if sin_acc != 0 else 0.0, terms, ok,
                                  meta=dict(meta)))
    return cos_r, sin_r


_EULER_K = 40


def _euler_tail(z: complex, fvals: np.ndarray, M: int, tol: float):
    """``sum_{q>=M} z^q f(q)`` for ``|z| = 1, z != 1`` by repeated summation by parts.

    ``fvals`` holds ``f(M), f(M+1), ...``; the k-th term uses the k-th forward
    difference at ``M``.  Returns the value, an error estimate and the terms used.
    """
    r = z / (1.0 - z)
    d = fvals.copy()
    acc = 0j
    prev = math.inf
    scale = float(np.abs(fvals[0]))
    last = math.inf
    for k in range(len(fvals) - 1):
        t = r ** k * d[0]
        acc += t
        last = abs(t)
        if last <= tol * 1e-3 or last > prev:
            break
        prev = last
        d = np.diff(d)
    # differences lose about one bit per order
    floor = _EPS * scale * sum((2.0 * abs(r)) ** j for j in range(k + 1))
    zM = cmath.exp(1j * cmath.phase(z) * M)
    return zM * acc / (1.0 - z), (last + floor) / abs(1.0 - z), k + 1


def _periodic_direct(w: complex, a: float, l: int, budget: SeriesBudget):
    # head summed directly, oscillatory tail by the Euler transform
    theta_ = 2.0 * math.pi * a
    gap = abs(2.0 * math.sin(math.pi * a))
    M = int(math.ceil(8.0 * (abs(w) + l + _EULER_K) / gap))
    M = max(64, M)
    if M + _EULER_K > budget.hard_cap:
        raise ConvergenceError(
            f"periodic series at a={a} needs more than {budget.hard_cap} terms")
    q = np.arange(1, M + _EULER_K + 1, dtype=float)
    lq = np.log(q)
    base = np.exp(-w * lq) * lq ** l
    head, tailv = base[:M - 1], base[M - 1:]
    ang = 2.0 * math.pi * np.mod(q[:M - 1] * a, 1.0)
    cos_h = complex(np.sum(head * np.cos(ang)))
    sin_h = complex(np.sum(head * np.sin(ang)))
    z = cmath.exp(1j * theta_)
    tp, ep, kp = _euler_tail(z, tailv, M, budget.tail_tol)
    tm, em, km = _euler_tail(z.conjugate(), tailv, M, budget.tail_tol)
    cos_v = cos_h + 0.5 * (tp + tm)
    sin_v = sin_h + (tp - tm) / 2j
    err = ep + em + 8 * _EPS * float(np.abs(head).sum())
    n = M - 1 + max(kp, km)
    meta = {"path": "direct"}
    return (make_result(cos_v, err, n, budget.tail_tol, meta=dict(meta)),
            make_result(sin_v, err, n, budget.tail_tol, meta=dict(meta)))


def classical_fe_hurwitz(s: complex, a: float,
                         budget: SeriesBudget = DEFAULT_BUDGET) -> MethodResult:
    """Hurwitz zeta for ``Re s < 0`` through the cosine/sine reflection formula."""
    s = complex(s)
    if s.real >= 0:
        raise DomainError("classical_fe_hurwitz needs Re(s) < 0")
    cs, ss = periodic_log_series_all(s, a, 0, budget)
    c, sn = cs[0], ss[0]
    pref = 2.0 * gamma(1.0 - s) * cmath.exp(-(1.0 - s) * math.log(2.0 * math.pi))
    val = pref * (cmath.sin(math.pi * s / 2) * c.value + cmath.cos(math.pi * s / 2) * sn.value)
    err = abs(pref) * (c.err_estimate + sn.err_estimate) * max(1.0, abs(cmath.sin(math.pi * s / 2)),
                                                               abs(cmath.cos(math.pi * s / 2)))
    return MethodResult(val, err, c.terms_used + sn.terms_used, c.converged and sn.converged,
                        meta={"path": c.meta.get("path")})
