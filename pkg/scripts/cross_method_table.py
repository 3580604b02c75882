"""Per-point table of the three left-half-plane forms on the cross-method grid.

Writes CSV with the three values, their error envelopes and the pairwise
deltas, so the disagreement can be inspected point by point.
"""

import argparse
import csv
import itertools
import sys

from fraczeta.audits import CROSS_GRID_A, CROSS_GRID_ALPHA, CROSS_GRID_S
from fraczeta.frac_zeta import (FracEvalPoint, frac_hurwitz_fe_simplified, frac_hurwitz_fe_trig,
                                frac_hurwitz_fe_triple)

FORMS = {"triple": frac_hurwitz_fe_triple, "simplified": frac_hurwitz_fe_simplified,
         "trig": frac_hurwitz_fe_trig}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="", encoding="utf-8")
    w = csv.writer(fh, lineterminator="\n")
    head = ["re_s", "im_s", "a", "alpha"]
    for k in FORMS:
        head += [f"{k}_re", f"{k}_im", f"{k}_err"]
    head += [f"{x}-{y}" for x, y in itertools.combinations(FORMS, 2)]
    w.writerow(head)
    for s, a, al in itertools.product(CROSS_GRID_S, CROSS_GRID_A, CROSS_GRID_ALPHA):
        p = FracEvalPoint(s, a, al)
        vals = {k: f(p) for k, f in FORMS.items()}
        row = [s.real, s.imag, a, al]
        for r in vals.values():
            row += [r.value.real, r.value.imag, r.err_estimate]
        row += [abs(vals[x].value - vals[y].value) for x, y in itertools.combinations(FORMS, 2)]
        w.writerow([format(x, ".10g") for x in row])
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
