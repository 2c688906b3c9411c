"""JSON encoding/decoding for matrices, map tables, systems, and verdicts.

Canonical output: keys sorted, entries row-major, exact scalars rendered as
reduced fraction strings.  Any JSON the package emits re-parses to an
identical value (byte-stable for exact fields).
"""

from __future__ import annotations

import json

from .classify import Coefficients, NotAnIdentity, SandwichSystem, Verdict
from .errors import InputError
from .fields import FieldTag
from .matrices import Mat2
from .preserver import CampaignReport, Decomposition, MapTable, PreservationVerdict

_FIELD_CODES = ("Q", "Qi", "R64", "C64")


def field_from_code(code: str, tolerance: float = 1e-9) -> FieldTag:
    if code not in _FIELD_CODES:
        raise InputError(f"unknown field code {code!r}; expected one of {_FIELD_CODES}")
    return FieldTag(code, tolerance)


def mat_to_json(M: Mat2) -> dict:
    enc = M.field.encode
    r = M.rows()
    return {
        "field": M.field.variant,
        "entries": [[enc(r[0][0]), enc(r[0][1])], [enc(r[1][0]), enc(r[1][1])]],
    }


def mat_from_json(obj, field: FieldTag | None = None) -> Mat2:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError(f"matrix JSON must be an object with 'entries', got {obj!r}")
    if field is None:
        field = field_from_code(obj.get("field", "Q"))
    elif "field" in obj and obj["field"] != field.variant:
        raise InputError(f"matrix declares field {obj['field']!r}, expected {field.variant!r}")
    rows = obj["entries"]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise InputError("matrix entries must be a 2x2 array")
    return Mat2(field, tuple(field.parse(rows[i][j]) for i in (0, 1) for j in (0, 1)))


def maptable_to_json(table: MapTable) -> dict:
    return {
        "field": table.field.variant,
        "k": table.k,
        "entries": [
            {"in": mat_to_json(a), "out": mat_to_json(b)} for a, b in table.entries
        ],
    }


def maptable_from_json(obj, tolerance: float = 1e-9) -> MapTable:
    try:
        field = field_from_code(obj["field"], tolerance)
        k = obj["k"]
        entries = tuple(
            (mat_from_json(e["in"], field), mat_from_json(e["out"], field))
            for e in obj["entries"]
        )
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad map table JSON: {exc!r}") from exc
    if not isinstance(k, int):
        raise InputError(f"map table k must be an integer, got {k!r}")
    return MapTable(field=field, k=k, entries=entries)


def sandwich_from_json(obj, tolerance: float = 1e-9) -> SandwichSystem:
    try:
        left = [tuple(mat_from_json(m) for m in pair) for pair in obj["left"]]
        right = [tuple(mat_from_json(m) for m in pair) for pair in obj["right"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad sandwich system JSON: {exc!r}") from exc
    if any(len(p) != 2 for p in left + right):
        raise InputError("sandwich sides must be lists of [A, B] pairs")
    return SandwichSystem(left=left, right=right)


def sandwich_to_json(system: SandwichSystem) -> dict:
    return {
        "left": [[mat_to_json(a), mat_to_json(b)] for a, b in system.left],
        "right": [[mat_to_json(a), mat_to_json(b)] for a, b in system.right],
    }


def verdict_to_json(v: Verdict) -> dict:
    out = {"holds": v.holds}
    if v.witness is not None:
        out["witness"] = mat_to_json(v.witness)
    if v.detail is not None:
        out["detail"] = mat_to_json(v.detail)
    return out


def preservation_to_json(v: PreservationVerdict) -> dict:
    out = {"holds": v.holds}
    if not v.holds:
        out["pair"] = [mat_to_json(v.pair[0]), mat_to_json(v.pair[1])]
        out["left_bracket"] = mat_to_json(v.left)
        out["right_bracket"] = mat_to_json(v.right)
    return out


def decomposition_to_json(dec: Decomposition, field: FieldTag) -> dict:
    return {
        "lambda": field.encode(dec.lam),
        "h": [{"in": mat_to_json(a), "value": field.encode(v)} for a, v in dec.h_table],
        "verified_pairs": dec.verified_pairs,
    }


def solver_result_to_json(result, field: FieldTag) -> dict:
    if isinstance(result, NotAnIdentity):
        return {
            "identity": False,
            "witness": mat_to_json(result.witness),
            "left_value": mat_to_json(result.left_value),
            "right_value": mat_to_json(result.right_value),
        }
    assert isinstance(result, Coefficients)
    return {
        "identity": True,
        "mode": result.mode,
        "coefficients": [[field.encode(c) for c in row] for row in result.coeffs],
    }


def campaign_to_json(report: CampaignReport) -> dict:
    return {
        "field": report.field.variant,
        "k": report.k,
        "trials": report.trials,
        "valid_ok": report.valid_ok,
        "perturbed_rejected": report.perturbed_rejected,
        "rejection_kinds": dict(sorted(report.rejection_kinds.items())),
        "anomalies": list(report.anomalies),
    }


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
