"""Magnitudes of the k-terms of the integral representation at a few orders.

At integer order the corrected coefficients terminate; at fractional order
the terms shrink and then grow, which is why the sum is cut at its smallest term.
"""

import argparse

from fraczeta.bridge import frac_zeta_integral_value
from fraczeta.core import SeriesBudget
from fraczeta.frac_zeta import FracEvalPoint, frac_zeta_series


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--s", type=float, default=3.0)
    ap.add_argument("--alpha", default="0.25,0.5,1.0")
    args = ap.parse_args()
    b = SeriesBudget(max_terms_per_axis=30)
    for al in map(float, args.alpha.split(",")):
        r = frac_zeta_integral_value(args.s, al, budget=b)
        ks = " ".join(f"{x:.1e}" for x in r.meta["k_terms"][:16])
        line = f"alpha={al}: value {r.value:.10f}  cut after {r.terms_used} ({r.meta['stop']})"
        if al != round(al):
            ref = frac_zeta_series(FracEvalPoint(args.s, 1.0, al))
            line += f"  direct series {ref.value:.10f}"
        print(line)
        print(f"   |terms| {ks}")


if __name__ == "__main__":
    main()
