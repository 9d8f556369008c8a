"""JSON / CSV / text serialization of results.

JSON reports follow schema v1::

    {"schema_version": 1, "command": [...], "payload_kind": "...",
     "payload": ..., "created": "<ISO-8601 UTC>"}

Rationals are written as ``{"num": p, "den": q, "decimal": "..."}`` and read
back as :class:`fractions.Fraction`; integers stay integers.  CSV cells write
rationals as ``p/q``.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any

from .bounds import BoundReport
from .constructions import FamilySpec, parse_family
from .experiments import ScanRow
from .invariants import InvariantSet
from .metrics import IndexReport
from .verifier import VerificationRun

SCHEMA_VERSION = 1
_FRACTION_KEYS = {"num", "den", "decimal"}


@dataclass(frozen=True)
class ComputeRow:
    graph6: str
    connected: bool
    n: int
    m: int
    radius: int | None
    diameter: int | None
    index: IndexReport | None
    invariants: InvariantSet | None


@dataclass(frozen=True)
class ConstructionRecord:
    family: str
    graph6: str
    n: int
    m: int
    predicted: dict
    observed: dict

    @property
    def consistent(self) -> bool:
        return all(self.observed.get(k) == v for k, v in self.predicted.items())


@dataclass(frozen=True)
class ScanResult:
    experiment: str
    rows: list[ScanRow]
    summary: dict = field(default_factory=dict)


@dataclass
class Report:
    command: list[str]
    payload_kind: str
    payload: Any
    created: str = ""
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if not self.created:
            self.created = datetime.now(timezone.utc).isoformat(timespec="seconds")


# -- generic value encoding --------------------------------------------------


def _decimal(q: Fraction, digits: int = 12) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{float(q):.{digits}g}"


def encode_value(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator, "decimal": _decimal(x)}
    if isinstance(x, FamilySpec):
        return str(x)
    if isinstance(x, ScanRow):
        return {
            "point": {k: v for k, v in x.point},
            "best_value": encode_value(x.best_value),
            "argmax_class": x.argmax_class,
            "witness": x.witness,
            "extra": encode_value(x.extra),
        }
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: encode_value(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): encode_value(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return [encode_value(v) for v in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [encode_value(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode_value(x: Any) -> Any:
    if isinstance(x, dict):
        if set(x) == _FRACTION_KEYS:
            return Fraction(x["num"], x["den"])
        return {k: decode_value(v) for k, v in x.items()}
    if isinstance(x, list):
        return [decode_value(v) for v in x]
    return x


def _pairs(d: dict) -> tuple[tuple[str, int], ...]:
    return tuple((k, v) for k, v in d.items())


def _scan_row(d: dict) -> ScanRow:
    return ScanRow(_pairs(d["point"]), decode_value(d["best_value"]), d["argmax_class"], d["witness"],
                   decode_value(d["extra"]))


def _bound_report(d: dict) -> BoundReport:
    d = decode_value(d)
    d["extremal"] = tuple(parse_family(s) for s in d["extremal"])
    d["params"] = tuple((k, v) for k, v in d["params"])
    return BoundReport(**d)


def _compute_row(d: dict) -> ComputeRow:
    d = decode_value(d)
    d["index"] = IndexReport(**d["index"]) if d["index"] is not None else None
    d["invariants"] = InvariantSet(**d["invariants"]) if d["invariants"] is not None else None
    return ComputeRow(**d)


def _verification_run(d: dict) -> VerificationRun:
    d = decode_value(d)
    d["n_range"] = tuple(d["n_range"])
    return VerificationRun(**d)


def encode_payload(kind: str, payload: Any) -> Any:
    if kind == "scan":
        return {"experiment": payload.experiment, "rows": [encode_value(r) for r in payload.rows],
                "summary": encode_value(payload.summary)}
    return encode_value(payload)


def decode_payload(kind: str, data: Any) -> Any:
    if kind == "index_reports":
        return [_compute_row(d) for d in data]
    if kind == "constructions":
        return [ConstructionRecord(**decode_value(d)) for d in data]
    if kind == "bound_report":
        return _bound_report(data)
    if kind == "verification_run":
        return _verification_run(data)
    if kind == "scan":
        return ScanResult(data["experiment"], [_scan_row(r) for r in data["rows"]], decode_value(data["summary"]))
    raise ValueError(f"unknown payload kind {kind!r}")


def to_json(report: Report, indent: int | None = 2) -> str:
    doc = {
        "schema_version": report.schema_version,
        "command": list(report.command),
        "payload_kind": report.payload_kind,
        "payload": encode_payload(report.payload_kind, report.payload),
        "created": report.created,
    }
    return json.dumps(doc, indent=indent)


def from_json(text: str) -> Report:
    doc = json.loads(text)
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {version!r}")
    kind = doc["payload_kind"]
    return Report(
        command=doc["command"],
        payload_kind=kind,
        payload=decode_payload(kind, doc["payload"]),
        created=doc["created"],
        schema_version=version,
    )


# -- CSV ---------------------------------------------------------------------------


def _cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return " ".join(_cell(v) for v in x)
    return str(x)


def parse_csv_number(text: str) -> int | Fraction | None:
    """Inverse of the CSV number formatting (``""`` -> None, ``p/q`` -> Fraction)."""
    if text == "":
        return None
    if "/" in text:
        return Fraction(text)
    return int(text)


def table_rows(kind: str, payload: Any) -> tuple[list[str], list[list[Any]]]:
    """Flatten a payload into a header and rows of raw values."""
    if kind == "index_reports":
        header = ["graph6", "connected", "n", "m", "radius", "diameter", "ecc_sum", "sigma0", "sigma1", "sigma2",
                  "chromatic", "clique", "matching", "dominating"]
        rows = []
        for r in payload:
            idx = r.index
            inv = r.invariants
            rows.append([r.graph6, r.connected, r.n, r.m, r.radius, r.diameter,
                         idx.ecc_sum if idx else None, idx.sigma0 if idx else None,
                         idx.sigma1 if idx else None, idx.sigma2 if idx else None,
                         inv.chromatic if inv else None, inv.clique if inv else None,
                         inv.matching if inv else None, inv.dominating if inv else None])
        return header, rows
    if kind == "constructions":
        keys = sorted({k for r in payload for k in r.predicted} | {k for r in payload for k in r.observed})
        header = ["family", "graph6", "n", "m"] + [f"predicted_{k}" for k in keys] + [f"observed_{k}" for k in keys]
        rows = [[r.family, r.graph6, r.n, r.m] + [r.predicted.get(k) for k in keys] + [r.observed.get(k) for k in keys]
                for r in payload]
        return header, rows
    if kind == "bound_report":
        r = payload
        header = ["bound_id", "direction", "index", "value", "applicable", "reason", "exceptional", "sharp", "strict",
                  "params", "extremal"]
        params = " ".join(f"{k}={v}" for k, v in r.params)
        return header, [[r.bound_id, r.direction, r.index, r.value, r.applicable, r.reason, r.exceptional, r.sharp,
                         r.strict, params, [str(s) for s in r.extremal]]]
    if kind == "verification_run":
        header = ["bound_id", "cell", "count", "direction", "bound", "extreme", "witness", "achievers", "exceptional",
                  "violations"]
        rows = [[payload.bound_id, c["cell"], c["count"], c["direction"], c["bound"], c["extreme"], c["witness"],
                 c["achievers"], c["exceptional"], c["violations"]] for c in payload.cells]
        return header, rows
    if kind == "scan":
        point_keys: list[str] = []
        extra_keys: list[str] = []
        for r in payload.rows:
            for k, _ in r.point:
                if k not in point_keys:
                    point_keys.append(k)
            for k, v in r.extra.items():
                if k not in extra_keys and not isinstance(v, (list, dict)):
                    extra_keys.append(k)
        header = point_keys + ["best_value", "argmax_class", "witness"] + extra_keys
        rows = []
        for r in payload.rows:
            pt = dict(r.point)
            rows.append([pt.get(k) for k in point_keys] + [r.best_value, r.argmax_class, r.witness]
                        + [r.extra.get(k) for k in extra_keys])
        return header, rows
    raise ValueError(f"unknown payload kind {kind!r}")


def to_csv(report: Report) -> str:
    header, rows = table_rows(report.payload_kind, report.payload)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def to_text(report: Report) -> str:
    kind, p = report.payload_kind, report.payload
    lines: list[str] = []
    if kind == "verification_run":
        lines.append(f"bound {p.bound_id}: n in [{p.n_range[0]}, {p.n_range[1]}] ({p.mode}, jobs={p.jobs})")
        lines.append(f"  graphs checked: {p.graphs_checked}, evaluations: {p.evaluations}")
        lines.append(f"  violations: {p.violation_count}")
        for v in p.violations[:10]:
            lines.append(f"    {v['cell']} {v['graph6']} observed={_cell(v['observed'])} bound={_cell(v['bound'])}")
        lines.append(f"  sharp cells without equality: {len(p.sharpness_failures)}")
        lines.append(f"  uniqueness: {'ok' if p.uniqueness_ok else 'MISMATCH'}"
                     + (f" ({len(p.uniqueness_notes)} informational notes)" if p.uniqueness_notes else ""))
        lines.append(f"  equality characterization: {'ok' if p.iff_ok else 'MISMATCH'}")
        lines.append(f"  wall time: {p.wall_time:.2f}s")
        return "\n".join(lines) + "\n"
    header, rows = table_rows(kind, p)
    text_rows = [[_text_cell(v) for v in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in text_rows)) if text_rows else len(h) for i, h in enumerate(header)]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in text_rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    if kind == "scan" and p.summary:
        for k, v in p.summary.items():
            lines.append(f"{k}: {_cell(v) if not isinstance(v, dict) else json.dumps(encode_value(v))}")
    return "\n".join(lines) + "\n"


def _text_cell(x: Any) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{_cell(x)}({_decimal(x, 6)})"
    return _cell(x)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report) + "\n"
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")
