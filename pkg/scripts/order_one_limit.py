"""Behaviour of the left-half-plane forms as the order approaches 1.

At order 1 the fractional derivative is the ordinary s-derivative, so each
form should approach ``d/ds zeta(s, a)``.  Also prints the backward GL limit
at complex s, which continues the direct series around the pole at s = 1.
"""

import cmath

from fraczeta import gl
from fraczeta.frac_zeta import (FracEvalPoint, SimplifiedVariant, frac_hurwitz_fe_simplified,
                                frac_hurwitz_fe_trig, frac_hurwitz_fe_triple)
from fraczeta.zeta import hurwitz_zeta, zeta


def main():
    s = -2.5
    for a in (1.0, 0.7):
        target = hurwitz_zeta(s, a, 1).value.real
        print(f"s = {s}, a = {a}: d/ds zeta = {target:.12f}")
        for al in (0.9, 0.99, 0.999):
            p = FracEvalPoint(s, a, al)
            row = {
                "triple": frac_hurwitz_fe_triple(p).value,
                "trig": frac_hurwitz_fe_trig(p).value,
                "simplified": frac_hurwitz_fe_simplified(p).value,
                "simplified(corrected)": frac_hurwitz_fe_simplified(
                    p, variant=SimplifiedVariant.CORRECTED).value,
            }
            print(f"  alpha {al:6}: " + "  ".join(f"{k} {abs(v - target):.2e}"
                                                for k, v in row.items()))
    print("\nbackward GL at complex s (a = 1):")
    for s in (complex(-2.5, 1.0), complex(-1.5, 2.0)):
        for al in (0.3, 0.5):
            g = gl.gl_derivative(lambda z: zeta(z).value, s, al, direction="backward", limit=1.0)
            t = frac_hurwitz_fe_triple(FracEvalPoint(s, 1.0, al)).value
            print(f"  s={s} alpha={al}: GL {g.value:.6f} (+-{g.err_estimate:.0e})  "
                  f"triple {t:.6f}  rel gap {abs(t - g.value) / abs(g.value):.2f}")


if __name__ == "__main__":
    main()
