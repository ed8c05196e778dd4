"""JSON and CSV emission of reports, and parsing JSON reports back.

Floats are written with ``repr``, the shortest decimal string that round-trips,
so output is byte-for-byte reproducible and re-parses to the same values.
"""

from __future__ import annotations

import csv
import io
import json

from .charpoly import VerificationReport
from .duality import DualityCertificate, ScanReport, ScanRow
from .moduli import ModuliPoint
from .numerics import Polynomial
from .vacuum import FactorizationReport, PairingReport, VacuumReport

SCHEMA_VERSION = 1


def dumps(kind: str, payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind}
    doc.update(payload)
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def csv_text(header, rows, comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _decode(kind: str, doc: dict) -> dict:
    if kind == "spectrum":
        return {"row": ScanRow.from_dict(doc["row"])}
    if kind == "charpoly":
        out = {
            "moduli": ModuliPoint.from_dict(doc["moduli"]),
            "form": doc["form"],
            "coefficients": Polynomial(doc["coefficients"]),
        }
        if doc.get("verification") is not None:
            out["verification"] = VerificationReport.from_dict(doc["verification"])
        return out
    if kind == "vacuum":
        pairing = doc.get("pairing")
        return {
            "moduli": ModuliPoint.from_dict(doc["moduli"]),
            "vacuum": VacuumReport.from_dict(doc["vacuum"]),
            "pairing": PairingReport.from_dict(pairing) if pairing is not None else None,
        }
    if kind == "factorization":
        return {
            "beta": doc["beta"],
            "delta": doc["delta"],
            "drop_boxes": doc["drop_boxes"],
            "rows": tuple(FactorizationReport.from_dict(r) for r in doc["rows"]),
        }
    if kind == "trajectory":
        return {
            "moduli": ModuliPoint.from_dict(doc["moduli"]),
            "dt": doc["dt"],
            "method": doc["method"],
            "samples": [tuple(s) for s in doc["samples"]],
        }
    if kind == "limits":
        return {k: doc[k] for k in ("q", "p", "H", "H_SG", "H_2", "shifted")}
    if kind == "scan":
        return {"scan": ScanReport.from_dict(doc)}
    if kind == "certificate":
        return {
            "certificate": DualityCertificate.from_dict(doc["certificate"]),
            "classical_equivalence": doc.get("classical_equivalence"),
        }
    raise ValueError(f"unknown report kind {kind!r}")


def encode(kind: str, fields: dict) -> dict:
    """Inverse of the decoding done by :func:`loads`."""
    if kind == "spectrum":
        return {"row": fields["row"].to_dict()}
    if kind == "charpoly":
        ver = fields.get("verification")
        return {
            "moduli": fields["moduli"].to_dict(),
            "form": fields["form"],
            "coefficients": [float(c) for c in fields["coefficients"].coeffs],
            "verification": ver.to_dict() if ver is not None else None,
        }
    if kind == "vacuum":
        pairing = fields["pairing"]
        return {
            "moduli": fields["moduli"].to_dict(),
            "vacuum": fields["vacuum"].to_dict(),
            "pairing": pairing.to_dict() if pairing is not None else None,
        }
    if kind == "factorization":
        return {
            "beta": fields["beta"],
            "delta": fields["delta"],
            "drop_boxes": fields["drop_boxes"],
            "rows": [r.to_dict() for r in fields["rows"]],
        }
    if kind == "trajectory":
        return {
            "moduli": fields["moduli"].to_dict(),
            "dt": fields["dt"],
            "method": fields["method"],
            "samples": [list(s) for s in fields["samples"]],
        }
    if kind == "limits":
        return dict(fields)
    if kind == "scan":
        return fields["scan"].to_dict()
    if kind == "certificate":
        return {
            "certificate": fields["certificate"].to_dict(),
            "classical_equivalence": fields["classical_equivalence"],
        }
    raise ValueError(f"unknown report kind {kind!r}")


def loads(text: str) -> tuple:
    """Parse a JSON report; returns ``(kind, fields)`` with typed values."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    kind = doc["kind"]
    return kind, _decode(kind, doc)
