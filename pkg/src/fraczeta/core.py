"""Scalar plumbing: principal-branch powers, binomial coefficients, compensated
accumulation, truncation budgets and the result record every evaluator returns.

Complex values are plain Python ``complex``; nothing here allocates arrays.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class SeriesBudget:
    """Truncation policy for every infinite sum in the package."""

    max_terms_per_axis: int = 30
    tail_tol: float = 1e-12
    hard_cap: int = 10_000_000

    def __post_init__(self) -> None:
        if self.max_terms_per_axis < 1 or self.hard_cap < 1:
            raise ValueError("term caps must be positive")
        if self.max_terms_per_axis > self.hard_cap:
            raise ValueError("max_terms_per_axis must not exceed hard_cap")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")


DEFAULT_BUDGET = SeriesBudget()


@dataclass(frozen=True)
class MethodResult:
    value: complex
    err_estimate: float
    terms_used: int
    converged: bool
    variant: str | None = None
    meta: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError(f"non-finite result {v!r}")
        if self.err_estimate < 0 or math.isnan(self.err_estimate):
            raise ValueError("err_estimate must be a nonnegative number")
        object.__setattr__(self, "value", v)


def make_result(value, err, terms, tol, **kw) -> MethodResult:
    """Build a result whose ``converged`` flag honours ``err <= tol``."""
    err = float(err)
    if not math.isfinite(err):
        err = math.inf
    return MethodResult(complex(value), err, int(terms), err <= tol, **kw)


def _canonical(z: complex) -> complex:
    z = complex(z)
    # -0.0 imaginary parts would put negative reals on the wrong side of the cut
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return z


def cpow(z: complex, w: complex) -> complex:
    """Principal-branch power ``exp(w * Log z)`` with ``Im Log z`` in ``(-pi, pi]``."""
    z = _canonical(z)
    w = complex(w)
    if z == 0:
        if w.real > 0:
            return 0j
        raise DomainError(f"0 ** {w} is undefined")
    try:
        out = cmath.exp(w * cmath.log(z))
    except OverflowError as exc:
        raise DomainError(f"overflow in {z} ** {w}") from exc
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise DomainError(f"non-finite {z} ** {w}")
    return out


def phase(alpha: float) -> complex:
    """``e^{i pi alpha}``, i.e. ``cpow(-1, alpha)`` on the principal branch."""
    return complex(math.cos(math.pi * alpha), math.sin(math.pi * alpha))


def falling_factorial(alpha: float, k: int) -> float:
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1.0
    for j in range(k):
        out *= alpha - j
    return out


def gen_binom(alpha: float, k: int) -> float:
    """Generalized binomial coefficient ``alpha (alpha-1) ... (alpha-k+1) / k!``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1.0
    for j in range(k):
        out *= (alpha - j) / (j + 1)
    return out


def a_coeff(alpha: float, r: int, k: int, l: int) -> float:
    """``falling_factorial(alpha, r+k+l) / (r! k! l!)``.

    Built one factor at a time so indices past 170 do not overflow the
    factorials.
    """
    if min(r, k, l) < 0:
        raise ValueError("indices must be nonnegative")
    out = 1.0
    base = alpha
    for n in (r, k, l):
        for j in range(n):
            out *= (base - j) / (j + 1)
        base -= n
    return out


def binomial_weights(alpha: float, n: int) -> list[float]:
    """``[gen_binom(alpha, m) * (-1)**m for m in range(n)]`` by recurrence."""
    out = [1.0] * n
    for m in range(1, n):
        out[m] = out[m - 1] * (m - 1 - alpha) / m
    return out


class CompensatedSum:
    """Neumaier accumulator, applied to real and imaginary parts separately."""

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self) -> None:
        self._re = self._im = self._cre = self._cim = 0.0

    @staticmethod
    def _step(total: float, comp: float, x: float) -> tuple[float, float]:
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        return t, comp

    def add(self, z: complex) -> None:
        z = complex(z)
        self._re, self._cre = self._step(self._re, self._cre, z.real)
        self._im, self._cim = self._step(self._im, self._cim, z.imag)

    @property
    def value(self) -> complex:
        return complex(self._re + self._cre, self._im + self._cim)


def compensated_sum(terms: Iterable[complex]) -> complex:
    acc = CompensatedSum()
    for t in terms:
        t = complex(t)
        if not (math.isfinite(t.real) and math.isfinite(t.imag)):
            raise DomainError("non-finite term in sum")
        acc.add(t)
    return acc.value


def sum_series(terms: Iterable[complex], tail_tol: float, max_terms: int,
               patience: int = 3, blowup: float = 1e4) -> MethodResult:
    """Sum a (possibly only asymptotic) series term by term.

    Stops with ``converged=True`` once ``patience`` consecutive terms are below
    ``tail_tol``.  If the terms instead start growing (``blowup`` times the
    smallest envelope seen) or ``max_terms`` is reached, the sum is cut at its
    optimal truncation point: the prefix after which the next ``patience``
    terms are smallest.  The error estimate is that envelope.
    """
    partial: list[complex] = []
    mags: list[float] = []
    acc = CompensatedSum()
    small = 0
    best = math.inf
    stop = "exhausted"
    for n, t in enumerate(terms):
        if n >= max_terms:
            stop = "max_terms"
            break
        t = complex(t)
        if not (math.isfinite(t.real) and math.isfinite(t.imag)):
            stop = "non-finite"
            break
        acc.add(t)
        partial.append(acc.value)
        mags.append(abs(t))
        small = small + 1 if abs(t) < tail_tol else 0
        if small >= patience:
            err = max(mags[-patience:])
            return make_result(partial[-1], err, n + 1, tail_tol,
                               meta={"regime": "convergent"})
        if n >= patience:
            best = min(best, max(mags[-patience:]))
            if mags[-1] > blowup * best:
                stop = "blowup"
                break
    if not partial:
        raise ConvergenceError("series produced no finite terms")
    # optimal truncation: keep terms 0..n, envelope of the next `patience`
    cut, env = len(partial) - 1, math.inf
    for n in range(len(partial) - 1):
        nxt = mags[n + 1:n + 1 + patience]
        e = max(nxt)
        if e < env:
            cut, env = n, e
    if len(partial) == 1:
        env = mags[0]
    return make_result(partial[cut], env, cut + 1, tail_tol,
                       meta={"regime": "asymptotic", "stop": stop,
                             "terms_examined": len(partial)})
