"""Command-line front end: ``fraczeta <eval|verify|scan|compare>``.

Exit codes: 0 success, 1 malformed arguments, 2 evaluation error (or more than
half of a scan erroring), 3 a verify run with at least one ``fail`` verdict.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from dataclasses import dataclass, field, replace

from . import bridge, frac_theta, frac_zeta, gl, theta, zeta
from .audits import SUITES, AuditConfig, run_suite
from .core import DEFAULT_BUDGET, MethodResult, SeriesBudget
from .errors import FracZetaError
from .reports import Verdict, csv_rows, fmt_float, result_dict, to_json

EVAL_METHODS = ("hurwitz", "zeta", "theta", "frac-zeta-series", "frac-zeta-fe-triple",
                "frac-zeta-fe-simplified", "frac-zeta-fe-trig", "frac-zeta-fe-rational",
                "frac-theta", "frac-zeta-integral")
COMPARE_METHODS = EVAL_METHODS + ("gl",)
SCAN_AXES = ("re_s", "im_s", "alpha", "a")
ENV_CONFIG = "FRACZETA_CONFIG"

EXIT_OK, EXIT_USAGE, EXIT_EVAL, EXIT_FAIL = 0, 1, 2, 3

# methods that need a fractional order
_NEEDS_ALPHA = {"frac-zeta-series", "frac-zeta-fe-triple", "frac-zeta-fe-simplified",
                "frac-zeta-fe-trig", "frac-zeta-fe-rational", "frac-theta",
                "frac-zeta-integral", "gl"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    budgets: SeriesBudget = DEFAULT_BUDGET
    quadrature: bridge.QuadratureConfig = bridge.DEFAULT_QUADRATURE
    gl_schedule: gl.GLSchedule = gl.DEFAULT_SCHEDULE
    output_format: str = "json"
    output_path: str = "-"

    def __post_init__(self) -> None:
        if self.output_format not in ("json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass
class Point:
    s: complex | None = None
    a: float = 1.0
    alpha: float | None = None
    p: int | None = None
    q: int | None = None
    order: int = 0
    variant: str | None = None
    extra: dict = field(default_factory=dict)


# -- parsing ----------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_complex(text: str) -> complex:
    parts = [t.strip() for t in str(text).split(",")]
    if len(parts) not in (1, 2) or not all(parts):
        raise UsageError(f"expected RE or RE,IM, got {text!r}")
    try:
        z = complex(float(parts[0]), float(parts[1]) if len(parts) == 2 else 0.0)
    except ValueError:
        raise UsageError(f"expected RE or RE,IM, got {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise UsageError(f"non-finite coordinate {text!r}")
    return z


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 3:
        raise UsageError("--range takes LO,HI,N")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"bad --range {text!r}") from None
    if n < 2:
        raise UsageError("a scan needs at least 2 points")
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo == hi:
        raise UsageError("scan range must be finite and non-empty")
    return lo, hi, n


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fraczeta", description="Fractional derivatives of zeta and theta.")
    ap.add_argument("command", choices=("eval", "verify", "scan", "compare"))
    ap.add_argument("target", nargs="?",
                    help="function id (eval, scan), suite id (verify), or comma list (compare)")
    ap.add_argument("--s", dest="s")
    ap.add_argument("--a", type=float)
    ap.add_argument("--alpha", type=float)
    ap.add_argument("--p", type=int)
    ap.add_argument("--q", type=int)
    ap.add_argument("--order", type=int, help="s-derivative order for hurwitz")
    ap.add_argument("--method", action="append", default=None,
                    help="function id; repeat or comma-separate for compare")
    ap.add_argument("--variant")
    ap.add_argument("--suite")
    ap.add_argument("--axis", choices=SCAN_AXES)
    ap.add_argument("--range", dest="range_")
    ap.add_argument("--budget-terms", type=int)
    ap.add_argument("--tail-tol", type=float)
    ap.add_argument("--hard-cap", type=int)
    ap.add_argument("--out")
    ap.add_argument("--format", choices=("json", "csv"))
    ap.add_argument("--config", help="key=value file (default: $FRACZETA_CONFIG)")
    return ap


_CONFIG_KEYS = {
    "s": str, "a": float, "alpha": float, "p": int, "q": int, "order": int,
    "method": str, "variant": str, "suite": str, "axis": str, "range": str,
    "budget_terms": int, "tail_tol": float, "hard_cap": int, "out": str, "format": str,
    "split_point": float, "nodes_per_panel": int, "abs_tol": float, "indent_radius": float,
    "gl_steps": str, "gl_m_cap": int, "gl_levels": int,
}


def read_config_file(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment; dashes in keys read as underscores."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc.strerror}") from None
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        key, val = (t.strip() for t in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        try:
            out[key] = _CONFIG_KEYS[key](val)
        except ValueError:
            raise UsageError(f"{path}:{n}: bad value for {key}") from None
    return out


def _merged(args) -> dict:
    path = args.config or os.environ.get(ENV_CONFIG)
    opts = read_config_file(path) if path else {}
    flags = {
        "s": args.s, "a": args.a, "alpha": args.alpha, "p": args.p, "q": args.q,
        "order": args.order, "variant": args.variant, "suite": args.suite, "axis": args.axis,
        "range": args.range_, "budget_terms": args.budget_terms, "tail_tol": args.tail_tol,
        "hard_cap": args.hard_cap, "out": args.out, "format": args.format,
    }
    if args.method:
        flags["method"] = ",".join(args.method)
    opts.update({k: v for k, v in flags.items() if v is not None})
    return opts


def make_run_config(opts: dict) -> RunConfig:
    b = DEFAULT_BUDGET
    hard_cap = opts.get("hard_cap", b.hard_cap)
    terms = opts.get("budget_terms", b.max_terms_per_axis)
    if "budget_terms" not in opts:
        # a starved cap also shortens the per-axis sums rather than being rejected
        terms = min(terms, hard_cap)
    qd = bridge.DEFAULT_QUADRATURE
    sched = gl.DEFAULT_SCHEDULE
    try:
        budget = SeriesBudget(terms, opts.get("tail_tol", b.tail_tol), hard_cap)
        quad = replace(qd, **{k: opts[k] for k in ("split_point", "nodes_per_panel",
                                                   "abs_tol", "indent_radius") if k in opts})
        if "gl_steps" in opts or "gl_m_cap" in opts or "gl_levels" in opts:
            steps = (tuple(float(x) for x in opts["gl_steps"].split(","))
                     if "gl_steps" in opts else sched.l_values)
            sched = gl.GLSchedule(steps, opts.get("gl_m_cap", sched.m_cap),
                                  opts.get("gl_levels", min(sched.richardson_levels,
                                                            len(steps) - 1)))
        return RunConfig(budget, quad, sched, opts.get("format", "json"), opts.get("out", "-"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _point_from(opts: dict) -> Point:
    return Point(s=parse_complex(opts["s"]) if "s" in opts else None, a=opts.get("a", 1.0),
                 alpha=opts.get("alpha"), p=opts.get("p"), q=opts.get("q"),
                 order=opts.get("order", 0), variant=opts.get("variant"))


# -- evaluation -------------------------------------------------------------------------

def _check_variant(method: str, variant: str | None):
    """Parse ``--variant`` for the method; unknown ids are usage errors."""
    choices = {
        "frac-zeta-fe-triple": [v.value for v in frac_zeta.SeriesSign],
        "frac-zeta-fe-trig": [v.value for v in frac_zeta.SeriesSign],
        "frac-zeta-fe-simplified": [v.value for v in frac_zeta.SimplifiedVariant],
        "frac-theta": [v.value for v in frac_theta.ThetaVariant],
        "frac-zeta-integral": list(bridge.INTEGRAL_VARIANTS),
    }
    if variant is None:
        return
    if method not in choices:
        raise UsageError(f"method {method} has no variants")
    if variant not in choices[method]:
        raise UsageError(f"variant for {method} must be one of {', '.join(choices[method])}")


def validate(method: str, pt: Point, allowed=EVAL_METHODS) -> None:
    if method not in allowed:
        raise UsageError(f"unknown method {method!r}; choose from {', '.join(allowed)}")
    if pt.s is None:
        raise UsageError("--s is required")
    if method in _NEEDS_ALPHA and pt.alpha is None:
        raise UsageError(f"{method} needs --alpha")
    if method == "frac-zeta-fe-rational" and (pt.p is None or pt.q is None):
        raise UsageError("frac-zeta-fe-rational needs --p and --q")
    if method == "hurwitz" and pt.order < 0:
        raise UsageError("--order must be non-negative")
    _check_variant(method, pt.variant)


def evaluate(method: str, pt: Point, cfg: RunConfig) -> MethodResult:
    b = cfg.budgets
    s = pt.s
    if method == "hurwitz":
        return zeta.hurwitz_zeta(s, pt.a, pt.order, b)
    if method == "zeta":
        return zeta.zeta(s, b)
    if method == "theta":
        return theta.theta(s, b)
    if method == "frac-theta":
        v = frac_theta.ThetaVariant(pt.variant or frac_theta.ThetaVariant.CORRECTED.value)
        return frac_theta.frac_theta_series(s, pt.alpha, v, b)
    if method == "frac-zeta-integral":
        return bridge.frac_zeta_integral_value(s, pt.alpha, pt.variant or "corrected_recip_gamma",
                                               b, cfg.quadrature)
    if method == "frac-zeta-fe-rational":
        return frac_zeta.frac_hurwitz_fe_rational(s, pt.p, pt.q, pt.alpha, b)
    if method == "gl":
        if pt.a != 1.0:
            raise UsageError("the gl method differentiates zeta(s) and needs a = 1")
        return gl.gl_derivative(lambda z: zeta.zeta(z, b).value, s, pt.alpha, cfg.gl_schedule,
                                direction="backward", limit=1.0)
    fp = frac_zeta.FracEvalPoint(s, pt.a, pt.alpha)
    if method == "frac-zeta-series":
        return frac_zeta.frac_zeta_series(fp, b)
    if method == "frac-zeta-fe-triple":
        return frac_zeta.frac_hurwitz_fe_triple(fp, frac_zeta.FormulaVariant.parse(pt.variant), b)
    if method == "frac-zeta-fe-trig":
        return frac_zeta.frac_hurwitz_fe_trig(fp, frac_zeta.FormulaVariant.parse(pt.variant), b)
    if method == "frac-zeta-fe-simplified":
        v = frac_zeta.SimplifiedVariant(pt.variant or frac_zeta.SimplifiedVariant.AS_PRINTED.value)
        return frac_zeta.frac_hurwitz_fe_simplified(fp, b, v)
    raise UsageError(f"unknown method {method!r}")


def error_record(exc: FracZetaError, **where) -> dict:
    return {"error": {"kind": exc.kind, "message": str(exc)}, **where}


# -- output -----------------------------------------------------------------------------

def _emit(text: str, cfg: RunConfig) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output_path in ("-", ""):
        sys.stdout.write(text)
    else:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv_table(header, rows) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return fmt_float(x) if math.isfinite(x) else "inf"
    return str(x)


# -- commands ---------------------------------------------------------------------------

def cmd_eval(opts: dict, cfg: RunConfig) -> int:
    method = opts.get("method")
    if not method:
        raise UsageError("eval needs a function id")
    pt = _point_from(opts)
    validate(method, pt, COMPARE_METHODS)
    where = {"method": method}
    try:
        r = evaluate(method, pt, cfg)
    except FracZetaError as exc:
        _emit(to_json(error_record(exc, **where)), replace(cfg, output_format="json"))
        return EXIT_EVAL
    if cfg.output_format == "csv":
        _emit(csv_rows([(pt.s.real, r, None)]), cfg)
    else:
        _emit(to_json({**where, **result_dict(r)}), cfg)
    return EXIT_OK


def cmd_verify(opts: dict, cfg: RunConfig) -> int:
    suite = opts.get("suite") or opts.get("method") or "all"
    if suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    acfg = AuditConfig(cfg.budgets, cfg.quadrature, cfg.gl_schedule)
    reports = run_suite(suite, acfg)
    failed = any(r.verdict is Verdict.FAIL for r in reports)
    if cfg.output_format == "csv":
        rows = [(r.identity_id, r.verdict.value, r.variant,
                 max((p.residual for p in r.points), default=None), len(r.points), r.notes)
                for r in reports]
        _emit(_csv_table(("identity_id", "verdict", "variant", "max_residual", "points",
                          "notes"), [[_cell(c) for c in row] for row in rows]), cfg)
    else:
        summary = {v.value: sum(r.verdict is v for r in reports) for v in Verdict}
        _emit(to_json({"suite": suite, "summary": summary, "reports": reports}), cfg)
    return EXIT_FAIL if failed else EXIT_OK


def _with_coord(pt: Point, axis: str, x: float) -> Point:
    if axis == "re_s":
        return replace(pt, s=complex(x, pt.s.imag))
    if axis == "im_s":
        return replace(pt, s=complex(pt.s.real, x))
    if axis == "alpha":
        return replace(pt, alpha=x)
    return replace(pt, a=x)


def cmd_scan(opts: dict, cfg: RunConfig) -> int:
    method = opts.get("method")
    if not method:
        raise UsageError("scan needs a function id")
    if "axis" not in opts or "range" not in opts:
        raise UsageError("scan needs --axis and --range LO,HI,N")
    axis = opts["axis"]
    if axis not in SCAN_AXES:
        raise UsageError(f"axis must be one of {', '.join(SCAN_AXES)}")
    lo, hi, n = _parse_range(opts["range"])
    pt = _point_from(opts)
    if pt.s is None and axis in ("re_s", "im_s"):
        pt.s = 0j
    if axis == "alpha" and pt.alpha is None:
        pt.alpha = lo
    validate(method, pt, COMPARE_METHODS)
    coords = sorted(lo + (hi - lo) * i / (n - 1) for i in range(n))
    rows = []
    for x in coords:
        try:
            rows.append((x, evaluate(method, _with_coord(pt, axis, x), cfg), None))
        except FracZetaError as exc:
            rows.append((x, None, exc.kind))
    if cfg.output_format == "json":
        recs = [{"coord": x, **result_dict(r)} if r is not None
                else {"coord": x, "error": {"kind": e}} for x, r, e in rows]
        _emit(to_json({"method": method, "axis": axis, "rows": recs}), cfg)
    else:
        _emit(csv_rows(rows), cfg)
    n_err = sum(e is not None for _, _, e in rows)
    return EXIT_EVAL if n_err * 2 > n else EXIT_OK


def cmd_compare(opts: dict, cfg: RunConfig) -> int:
    methods = [m.strip() for m in (opts.get("method") or "").split(",") if m.strip()]
    if len(methods) < 2:
        raise UsageError("compare needs at least two methods")
    if len(set(methods)) != len(methods):
        raise UsageError("compare methods must be distinct")
    pt = _point_from(opts)
    variant = pt.variant
    for m in methods:
        # a variant applies only to the methods that know it
        validate(m, replace(pt, variant=variant if _accepts(m, variant) else None),
                 COMPARE_METHODS)
    results = {}
    for m in methods:
        t0 = time.perf_counter()
        try:
            r = evaluate(m, replace(pt, variant=variant if _accepts(m, variant) else None), cfg)
        except FracZetaError as exc:
            _emit(to_json(error_record(exc, method=m)), replace(cfg, output_format="json"))
            return EXIT_EVAL
        results[m] = (r, time.perf_counter() - t0)
    pairs = [(x, y, abs(results[x][0].value - results[y][0].value))
             for i, x in enumerate(methods) for y in methods[i + 1:]]
    if cfg.output_format == "csv":
        head = ("method", "value_re", "value_im", "err_estimate", "terms_used", "wall_time_s")
        body = [[m, fmt_float(r.value.real), fmt_float(r.value.imag), _cell(r.err_estimate),
                 str(r.terms_used), f"{dt:.6f}"] for m, (r, dt) in results.items()]
        text = _csv_table(head, body) + "\n" + _csv_table(
            ("method_a", "method_b", "abs_delta"), [[x, y, fmt_float(d)] for x, y, d in pairs])
        _emit(text, cfg)
    else:
        rows = [{"method": m, "value": r.value, "err_estimate": r.err_estimate,
                 "terms_used": r.terms_used, "converged": r.converged, "wall_time_s": dt}
                for m, (r, dt) in results.items()]
        deltas = [{"a": x, "b": y, "abs_delta": d} for x, y, d in pairs]
        _emit(to_json({"point": {"s": pt.s, "a": pt.a, "alpha": pt.alpha},
                       "methods": rows, "pairwise": deltas}), cfg)
    return EXIT_OK


def _accepts(method: str, variant: str | None) -> bool:
    if variant is None:
        return True
    try:
        _check_variant(method, variant)
    except UsageError:
        return False
    return True


_COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "scan": cmd_scan, "compare": cmd_compare}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """``--range -5,-1,10`` reads as an option to argparse; rewrite it as ``--range=-5,-1,10``."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok.startswith("--") and "=" not in tok:
            nxt = next(it, None)
            if nxt is not None and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit()
                                                                       or nxt[1] == "."):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        opts = _merged(args)
        if args.target is not None:
            key = "suite" if args.command == "verify" else "method"
            if (args.suite if key == "suite" else args.method) is not None:
                raise UsageError("give the target either positionally or with a flag")
            opts[key] = args.target
        cfg = make_run_config(opts)
        return _COMMANDS[args.command](opts, cfg)
    except UsageError as exc:
        sys.stderr.write(f"fraczeta: error: {exc}\n")
        return EXIT_USAGE
    except FracZetaError as exc:
        sys.stderr.write(f"fraczeta: {exc.kind}: {exc}\n")
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
