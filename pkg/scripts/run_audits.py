"""Run the audit suites and write one JSON file per suite plus a verdict table.

    python scripts/run_audits.py [--suites all] [--outdir results/audits] [--hard-cap N]
"""

import argparse
from pathlib import Path

from fraczeta.audits import SUITES, AuditConfig, timed_suite
from fraczeta.core import SeriesBudget
from fraczeta.reports import to_json


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--suites", default="all")
    ap.add_argument("--outdir", default="results/audits")
    ap.add_argument("--hard-cap", type=int)
    args = ap.parse_args()
    suites = SUITES if args.suites == "all" else tuple(args.suites.split(","))
    cfg = AuditConfig()
    if args.hard_cap:
        cfg = AuditConfig(budget=SeriesBudget(min(30, args.hard_cap), 1e-12, args.hard_cap))
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for sid in suites:
        reps, dt = timed_suite(sid, cfg)
        (out / f"{sid}.json").write_text(to_json(reps) + "\n", encoding="utf-8")
        print(f"== {sid}  ({dt:.1f}s)")
        for r in reps:
            worst = max((p.residual for p in r.points), default=float("nan"))
            print(f"   {r.identity_id:38s} {r.verdict.value:24s} max residual {worst:.3g}"
                  + (f"  [{r.variant}]" if r.variant else ""))


if __name__ == "__main__":
    main()
