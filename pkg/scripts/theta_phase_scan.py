"""GL oracle against both phase variants of the fractional theta series over a grid."""

import argparse

from fraczeta.frac_theta import ThetaVariant, frac_theta_series
from fraczeta.gl import gl_derivative
from fraczeta.theta import theta


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--s", default="0.5,1,2,3")
    ap.add_argument("--alpha", default="0.2,0.4,0.6,0.8")
    args = ap.parse_args()
    print("s,alpha,rel_corrected,rel_as_printed")
    for s in map(float, args.s.split(",")):
        for al in map(float, args.alpha.split(",")):
            g = gl_derivative(lambda z: theta(z).value, s, al, direction="backward", limit=1.0,
                              domain=lambda z: z.real > 0).value
            rels = [abs(frac_theta_series(s, al, v).value - g) / abs(g)
                    for v in (ThetaVariant.CORRECTED, ThetaVariant.AS_PRINTED)]
            print(f"{s},{al},{rels[0]:.3e},{rels[1]:.3e}")


if __name__ == "__main__":
    main()
