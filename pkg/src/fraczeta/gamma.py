"""Complex gamma, polygamma, and integer-order derivatives of Gamma and 1/Gamma.

Gamma uses the g=7, n=9 Lanczos approximation with reflection for
``Re z < 1/2``.  Polygamma shifts ``z`` upward until ``Re z`` is large and then
uses the Bernoulli asymptotic series; derivatives of Gamma come from complete
Bell polynomials in the polygamma values, which lets one call serve every
order up to the cap.  Derivatives of the entire function 1/Gamma come from
Cauchy integrals instead.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import OrderCapError, PoleError

ORDER_CAP = 30
_REFLECT_BELOW = -40.0
_EPS = 2.220446049250313e-16

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _check_pole(z: complex) -> None:
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"Gamma has a pole at {z.real:g}")


def _check_order(r: int) -> None:
    if r < 0:
        raise ValueError("derivative order must be nonnegative")
    if r > ORDER_CAP:
        raise OrderCapError(f"order {r} exceeds cap {ORDER_CAP}")


def _lanczos_log(z: complex) -> complex:
    # log Gamma(z) for Re z >= 1/2
    z = z - 1.0
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(z: complex) -> complex:
    z = complex(z)
    _check_pole(z)
    if z.imag == 0.0 and abs(z.real) < 171.0:
        return complex(math.gamma(z.real))
    if z.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * z) * gamma(1.0 - z))
    return cmath.exp(_lanczos_log(z))


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` (with ``B_1 = -1/2``), exact."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n):
        total += math.comb(n + 1, k) * bernoulli(k)
    return -total / (n + 1)


def _polygamma_asymptotic(w: complex, m: int) -> complex:
    if m == 0:
        out = cmath.log(w) - 0.5 / w
        w2 = w * w
        p = w2
        for k in range(1, 40):
            term = float(bernoulli(2 * k)) / (2 * k) / p
            out -= term
            if abs(term) < 1e-18 * abs(out):
                break
            p *= w2
        return out
    sign = -1.0 if m % 2 == 0 else 1.0  # (-1)^(m+1)
    out = math.factorial(m - 1) / w ** m + math.factorial(m) / (2.0 * w ** (m + 1))
    prev = math.inf
    for k in range(1, 40):
        term = (float(bernoulli(2 * k)) * math.factorial(2 * k + m - 1)
                / math.factorial(2 * k)) / w ** (2 * k + m)
        if abs(term) > prev:
            break
        out += term
        prev = abs(term)
        if prev < 1e-18 * abs(out):
            break
    return sign * out


def _cot_derivative(w: complex, m: int) -> complex:
    # d^m/dw^m cot(w) = P_m(cot w) with P_0 = c, P_{m+1} = -(1 + c^2) P_m'(c)
    coeffs = [0.0, 1.0]
    for _ in range(m):
        deriv = [i * coeffs[i] for i in range(1, len(coeffs))]
        new = [0.0] * (len(deriv) + 2)
        for i, c in enumerate(deriv):
            new[i] -= c
            new[i + 2] -= c
        coeffs = new
    c = cmath.cos(w) / cmath.sin(w)
    out = 0j
    for a in reversed(coeffs):
        out = out * c + a
    return out


def polygamma(z: complex, m: int) -> complex:
    """``psi^(m)(z)``; ``m = 0`` is the digamma function."""
    z = complex(z)
    _check_order(m)
    _check_pole(z)
    # the cot-derivative polynomials cancel catastrophically at high order, so
    # reflection is kept only for far-left arguments; elsewhere the upward
    # recurrence below is accurate on its own
    if z.real < _REFLECT_BELOW:
        refl = (-1) ** m * polygamma(1.0 - z, m)
        return refl - math.pi ** (m + 1) * _cot_derivative(math.pi * z, m)
    x0 = 16.0 + 0.75 * m
    shift = 0j
    w = z
    while w.real < x0:
        shift += w ** (-(m + 1))
        w += 1.0
    fac = math.factorial(m) * (-1) ** m
    return _polygamma_asymptotic(w, m) - fac * shift


def _bell(xs: list[complex], n: int) -> list[complex]:
    """Complete Bell polynomials ``B_0..B_n`` of ``xs[0], xs[1], ...``."""
    out = [1 + 0j]
    for k in range(n):
        acc = 0j
        for j in range(k + 1):
            acc += math.comb(k, j) * out[k - j] * xs[j]
        out.append(acc)
    return out


def gamma_derivs(z: complex, rmax: int) -> list[complex]:
    """``[Gamma^(r)(z) for r in 0..rmax]`` sharing one set of polygamma values."""
    z = complex(z)
    _check_order(rmax)
    g = gamma(z)
    psis = [polygamma(z, j) for j in range(rmax)]
    return [g * b for b in _bell(psis, rmax)]


def gamma_deriv(z: complex, r: int) -> complex:
    _check_order(r)
    return gamma_derivs(z, r)[r]


def recip_gamma(z: complex) -> complex:
    """``1/Gamma(z)``, entire; zero at the poles of Gamma."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        return 0j
    if z.real < 0.5:
        return cmath.sin(cmath.pi * z) * gamma(1.0 - z) / cmath.pi
    return 1.0 / gamma(z)


_CAUCHY_NODES = 128
_CAUCHY_RADII = (0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 12.0, 16.0, 20.0)


def recip_gamma_derivs(z: complex, mmax: int) -> list[complex]:
    """``[d^m/dz^m (1/Gamma)(z) for m in 0..mmax]``.

    1/Gamma is entire, so its Taylor coefficients decay much faster than the
    polygamma values they would be assembled from; the Bell-polynomial route
    cancels badly past order ~15.  Instead each coefficient is a Cauchy
    integral on a circle, taken on the radius whose rounding bound
    ``eps * max|f| * m! / r^m`` is smallest.
    """
    z = complex(z)
    _check_order(mmax)
    n = _CAUCHY_NODES
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    best = [(math.inf, 0j)] * (mmax + 1)
    for r in _CAUCHY_RADII:
        f = np.array([recip_gamma(z + r * w) for w in roots])
        coef = np.fft.fft(f) / n
        fmax = float(np.max(np.abs(f)))
        for m in range(mmax + 1):
            fac = math.factorial(m) / r ** m
            bound = 4 * _EPS * fmax * fac
            if bound < best[m][0]:
                best[m] = (bound, complex(coef[m]) * fac)
    return [v for _, v in best]


def recip_gamma_deriv(z: complex, m: int) -> complex:
    _check_order(m)
    return recip_gamma_derivs(z, m)[m]
