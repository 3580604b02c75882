"""Evaluation points, audit records and their JSON/CSV encodings."""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any

from .core import MethodResult

CSV_HEADER = ("coord", "value_re", "value_im", "err_estimate", "terms_used", "converged")


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    DOCUMENTED = "documented-discrepancy"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class EvalPoint:
    s: complex
    a: float = 1.0
    alpha: float | None = None
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"s": complex(self.s), "a": self.a}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        out.update(self.extra)
        return out


@dataclass(frozen=True)
class PointResidual:
    point: EvalPoint
    residual: float
    tolerance: float
    variant: str | None = None
    values: dict[str, complex] = field(default_factory=dict)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.residual <= self.tolerance


@dataclass(frozen=True)
class ResidualReport:
    identity_id: str
    points: tuple[PointResidual, ...]
    verdict: Verdict
    tolerances: dict[str, float] = field(default_factory=dict)
    notes: str = ""
    variant: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if self.verdict is Verdict.PASS and not all(p.ok for p in self.points):
            raise ValueError(f"{self.identity_id}: pass verdict with a residual over tolerance")
        if self.verdict is Verdict.DOCUMENTED and not self.notes.strip():
            raise ValueError(f"{self.identity_id}: documented discrepancy needs a location note")

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "verdict": self.verdict.value,
            "variant": self.variant,
            "tolerances": self.tolerances,
            "notes": self.notes,
            "details": self.details,
            "points": [
                {
                    "point": p.point.to_dict(),
                    "residual": p.residual,
                    "tolerance": p.tolerance,
                    "variant": p.variant,
                    "values": p.values,
                    "error": p.error,
                }
                for p in self.points
            ],
        }


def verdict_from(points, *, documented_note: str | None = None,
                 inconclusive: bool = False) -> Verdict:
    """Pass when every point is within tolerance; otherwise fail, or
    documented-discrepancy when the identity is one known to be suspect."""
    if inconclusive or any(p.error is not None for p in points):
        return Verdict.INCONCLUSIVE
    if all(p.ok for p in points):
        return Verdict.PASS
    return Verdict.DOCUMENTED if documented_note else Verdict.FAIL


# -- encoding -------------------------------------------------------------------

def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _encode(obj: Any) -> str:
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, complex):
        return '{"re": %s, "im": %s}' % (_encode(obj.real), _encode(obj.imag))
    if isinstance(obj, enum.Enum):
        return _encode(obj.value)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    if hasattr(obj, "to_dict"):
        return _encode(obj.to_dict())
    if isinstance(obj, MethodResult):
        return _encode(result_dict(obj))
    if hasattr(obj, "item"):  # numpy scalars
        return _encode(obj.item())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def to_json(obj: Any) -> str:
    """JSON with complex numbers as ``{"re", "im"}`` and 17 significant digits."""
    return _encode(obj)


def result_dict(r: MethodResult) -> dict[str, Any]:
    out = {
        "value": r.value,
        "err_estimate": r.err_estimate,
        "terms_used": r.terms_used,
        "converged": r.converged,
    }
    if r.variant is not None:
        out["variant"] = r.variant
    if r.meta:
        out["meta"] = r.meta
    return out


def csv_rows(rows: list[tuple[float, MethodResult | None, str | None]]) -> str:
    """Scan rows as CSV; failed points keep the coordinate and carry an error column."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    any_err = any(e is not None for _, _, e in rows)
    w.writerow(CSV_HEADER + (("error",) if any_err else ()))
    for coord, r, err in rows:
        if r is None:
            row = [fmt_float(coord), "", "", "", "", ""]
        else:
            e = fmt_float(r.err_estimate) if math.isfinite(r.err_estimate) else "inf"
            row = [fmt_float(coord), fmt_float(r.value.real), fmt_float(r.value.imag), e,
                   str(r.terms_used), "true" if r.converged else "false"]
        if any_err:
            row.append(err or "")
        w.writerow(row)
    return buf.getvalue()
