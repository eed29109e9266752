"""Instance parsing and report serialization for the command line.

Reports serialize to JSON under the schema tag ``torsep/1`` with a
stable field order, or to aligned human-readable text.  Exact rationals
are encoded as strings like ``"1/2"``; index data is 0-based, while the
textual rendering labels coordinates x1..xn (coordinate xk is position
k-1).
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .binary_forms import BinaryForm, form_to_string, parse_form
from .cones import WeightSystem
from .errors import InputError
from .verdict import Verdict

SCHEMA = "torsep/1"


@dataclass(frozen=True)
class Instance:
    """A parsed problem instance: a weight system or a binary form."""

    kind: str  # 'weights' | 'binary-form'
    payload: Any
    label: str | None = None


def parse_instance(text: str) -> Instance:
    """Parse an instance from JSON or from the whitespace weight format.

    JSON weights: {"d": 2, "weights": [[1, 1], [2, 0], [0, 2]]}.
    JSON binary forms: {"coeffs": [...]} or {"form": "x^2*y^2 - 3*x^4"}.
    Text weights: first line "d n", then n lines of d integers.
    """
    stripped = text.strip()
    if not stripped:
        raise InputError("empty instance")
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(
                f"JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
        return _instance_from_json(data)
    return _parse_text_weights(stripped)


def _instance_from_json(data) -> Instance:
    if not isinstance(data, dict):
        raise InputError("instance JSON must be an object")
    label = data.get("label")
    if "weights" in data or data.get("kind") == "weights":
        rows = data.get("weights")
        if not isinstance(rows, list) or not rows:
            raise InputError("'weights' must be a nonempty list of rows")
        d = data.get("d", len(rows[0]) if isinstance(rows[0], list) else None)
        if not isinstance(d, int) or d < 1:
            raise InputError("'d' must be a positive integer")
        weights = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != d:
                raise InputError(f"weight {i} does not have {d} entries")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InputError(f"weight {i} has a non-integer entry {x!r}")
            weights.append(tuple(row))
        return Instance("weights", WeightSystem(d, tuple(weights)), label)
    if "coeffs" in data:
        coeffs = data["coeffs"]
        if not isinstance(coeffs, list):
            raise InputError("'coeffs' must be a list")
        return Instance(
            "binary-form", BinaryForm(tuple(Fraction(str(c)) for c in coeffs)), label
        )
    if "form" in data:
        return Instance("binary-form", parse_form(data["form"]), label)
    raise InputError("instance JSON needs 'weights', 'coeffs' or 'form'")


def _parse_text_weights(text: str) -> Instance:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].split()
    if len(header) != 2:
        raise InputError("line 1: expected header 'd n'")
    try:
        d, n = int(header[0]), int(header[1])
    except ValueError as exc:
        raise InputError(f"line 1: {exc}") from exc
    if d < 1 or n < 1:
        raise InputError("line 1: d and n must be positive")
    if len(lines) != n + 1:
        raise InputError(f"expected {n} weight lines, found {len(lines) - 1}")
    weights = []
    for idx, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != d:
            raise InputError(f"line {idx}: expected {d} integers, found {len(parts)}")
        try:
            weights.append(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise InputError(f"line {idx}: {exc}") from exc
    return Instance("weights", WeightSystem(d, tuple(weights)), None)


def encode(value):
    """Recursively convert a value into JSON-ready data.

    Fractions become strings ('3' or '1/2'), tuples become lists,
    dataclasses become ordered dicts.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str, float)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if dataclasses.is_dataclass(value):
        return {
            f.name: encode(getattr(value, f.name))
            for f in dataclasses.fields(value)
        }
    raise InputError(f"cannot encode {type(value).__name__} into JSON")


def instance_to_json(instance: Instance) -> dict:
    if instance.kind == "weights":
        ws = instance.payload
        return {
            "kind": "weights",
            "d": ws.dim,
            "weights": [list(w) for w in ws.weights],
            "label": instance.label,
        }
    form = instance.payload
    return {
        "kind": "binary-form",
        "coeffs": [str(c) for c in form.coeffs],
        "label": instance.label,
    }


def instance_from_json(data) -> Instance:
    return _instance_from_json(data)


@dataclass
class Report:
    """Everything one command run produced, ready for serialization."""

    command: str
    instance: Instance
    options: dict
    verdicts: list[Verdict] = field(default_factory=list)
    verified: list[bool] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    seed: int | None = None
    timing_ms: float | None = None
    version: str = __version__

    def to_json(self) -> dict:
        verdict_entries = []
        for i, v in enumerate(self.verdicts):
            entry = {
                "property": v.property_name,
                "mode": v.mode,
                "holds": v.holds,
                "certificate": encode(dict(v.certificate)),
                "notes": list(v.notes),
                "verified": self.verified[i] if i < len(self.verified) else None,
            }
            verdict_entries.append(entry)
        return {
            "schema": SCHEMA,
            "version": self.version,
            "command": self.command,
            "instance": instance_to_json(self.instance),
            "options": encode(self.options),
            "seed": self.seed,
            "verdicts": verdict_entries,
            "extra": encode(self.extra),
            "timing_ms": self.timing_ms,
        }


def report_from_json(data) -> Report:
    """Rebuild a Report from its JSON form.

    The instance is reconstructed with full types; certificate payloads
    keep their JSON encoding (rationals stay strings).
    """
    if data.get("schema") != SCHEMA:
        raise InputError(f"unsupported schema {data.get('schema')!r}")
    verdicts = []
    verified = []
    for entry in data.get("verdicts", []):
        verdicts.append(
            Verdict(
                entry["property"],
                entry["mode"],
                entry["holds"],
                entry["certificate"],
                tuple(entry.get("notes", ())),
            )
        )
        verified.append(entry.get("verified"))
    return Report(
        command=data["command"],
        instance=instance_from_json(data["instance"]),
        options=data.get("options", {}),
        verdicts=verdicts,
        verified=verified,
        extra=data.get("extra", {}),
        seed=data.get("seed"),
        timing_ms=data.get("timing_ms"),
        version=data.get("version", __version__),
    )


def _render_value(value, indent):
    pad = " " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_render_value(v, indent + 2))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(f"{pad}- {_flat(v)}" for v in value)
    return f"{pad}{_flat(value)}"


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_flat(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "(" + ", ".join(_flat(v) for v in value) + ")"
    if value is None:
        return "-"
    return str(value)


_FORCING_KINDS = {"generator-in-cone", "strata-forcing-pair"}
_MISSED_KINDS = {"zero-weight", "line-in-cone", "strata-missed-hyperplane"}
_SECTION_KINDS = {"shared-face-interior", "strata-equivalent-pair"}


def _describe_pair(kind, cert) -> str | None:
    pair = cert.get("pair")
    if pair is None:
        return None
    a, b = pair
    if kind in _FORCING_KINDS:
        return f"x{a + 1} = 0 forces x{b + 1} = 0"
    if kind in _SECTION_KINDS or (kind == "line-in-cone" and "index" not in cert):
        return f"x{a + 1} and x{b + 1} cut the closure in the same hyperplane section"
    if kind in _MISSED_KINDS:
        index = cert.get("index", a)
        return f"x{index + 1} never vanishes on the closure"
    if kind == "kernel-witness":
        return f"x{a + 1} = x{b + 1} = 0 meets the closure in codimension at most 1"
    return f"({a + 1}, {b + 1})"


def render_text(report: Report) -> str:
    """Aligned human-readable rendering of a report."""
    lines = [f"torsep {report.version} — {report.command}"]
    opts = ", ".join(f"{k}={_flat(v)}" for k, v in report.options.items() if v is not None)
    if opts:
        lines.append(f"options: {opts}")
    inst = report.instance
    if inst.kind == "weights":
        ws = inst.payload
        shown = " ".join("(" + ",".join(str(x) for x in w) + ")" for w in ws.weights)
        label = f"  label: {inst.label}" if inst.label else ""
        lines.append(f"instance: weights d={ws.dim} n={ws.n}: {shown}{label}")
    else:
        lines.append(f"instance: binary form {form_to_string(inst.payload)}")
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    lines.append("")
    for i, v in enumerate(report.verdicts):
        word = "HOLDS" if v.holds else "FAILS"
        lines.append(f"{v.property_name} ({v.mode}): {word}")
        cert = encode(dict(v.certificate))
        described = _describe_pair(v.kind, v.certificate)
        if described:
            lines.append(f"  witness pair: {described}")
        lines.append("  certificate:")
        lines.append(_render_value(cert, 4))
        for note in v.notes:
            lines.append(f"  note: {note}")
        ok = report.verified[i] if i < len(report.verified) else None
        lines.append(f"  verified: {'yes' if ok else 'NO' if ok is False else '-'}")
    if report.extra:
        lines.append("extra:")
        lines.append(_render_value(encode(report.extra), 2))
    if report.timing_ms is not None:
        lines.append(f"timing_ms: {report.timing_ms}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "text") -> str:
    """Serialize the report as JSON (stable field order) or as text."""
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2) + "\n"
    if fmt == "text":
        return render_text(report)
    raise InputError(f"unknown format {fmt!r}")
