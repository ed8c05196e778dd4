"""Command-line front end.

    python -m torusquant spectrum --beta 4 --delta 0
    python -m torusquant scan --beta 1 --dim 8 --delta-steps 64
    python -m torusquant certify --beta 1 --dim 1 --delta 0 --delta2 1.5708

Exit status: 0 on success, 1 on a computational failure, 2 on bad input.
Data goes to ``--out`` (default stdout); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import reports
from .charpoly import charpoly_closed, charpoly_dimer, verify_charpoly
from .classical import ClassicalState, flow, limit_energies, shifted_offsets
from .duality import classical_equivalence_check, delta_grid, duality_certificate, moduli_scan
from .errors import ConvergenceError, DomainError
from .moduli import ModuliPoint, hilbert_dim
from .vacuum import degeneracy_pairing, factorization_defect, vacuum_report

COMMANDS = ("spectrum", "charpoly", "vacuum", "factorize", "classical", "limits", "scan", "certify")
DEFAULT_FORMAT = {
    "spectrum": "csv",
    "scan": "csv",
    "classical": "csv",
    "charpoly": "json",
    "vacuum": "json",
    "factorize": "json",
    "limits": "json",
    "certify": "json",
}
DEFAULTS = {
    "delta": 0.0,
    "dim": None,
    "out": "-",
    "delta_steps": 16,
    "t": 10.0,
    "dt": 1e-3,
    "q0": 0.0,
    "p0": 0.0,
    "check": False,
    "strict": False,
    "kinetic_off": False,
    "drop_boxes": False,
    "n_list": None,
    "form": "closed",
    "workers": 1,
    "delta2": None,
    "beta2": None,
    "dim2": None,
}


class UsageError(Exception):
    """Malformed command line or configuration."""


@dataclass
class RunConfig:
    command: str
    beta: Optional[float]
    delta: float
    dim: Optional[int]
    out: str
    format: str
    options: dict = field(default_factory=dict)

    def moduli(self) -> ModuliPoint:
        return ModuliPoint(self.beta, self.delta, self.dim)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _finite(text) -> float:
    x = float(text)
    if not math.isfinite(x):
        raise ValueError(f"not a finite number: {text!r}")
    return x


def _int_list(text) -> list:
    if isinstance(text, list):
        return [int(v) for v in text]
    return [int(v) for v in str(text).split(",") if v.strip()]


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--beta", type=_finite)
    common.add_argument("--delta", type=_finite)
    common.add_argument("--dim", type=int)
    common.add_argument("--out")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--config")

    parser = _Parser(prog="torusquant", description="Canonical quantisation on the torus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        return sub.add_parser(name, parents=[common], help=help_, argument_default=argparse.SUPPRESS)

    cmd("spectrum", "eigenvalues of the Hamiltonian")

    p = cmd("charpoly", "closed-form characteristic polynomial")
    p.add_argument("--check", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--form", choices=("closed", "dimer"))

    p = cmd("vacuum", "ground state, gap and degenerate pairs")
    p.add_argument("--kinetic-off", action="store_true")

    p = cmd("factorize", "corner-block factorisation of the characteristic polynomial")
    p.add_argument("--n-list", type=_int_list)
    p.add_argument("--drop-boxes", action="store_true")

    for name, help_ in (("classical", "classical trajectory"), ("limits", "pendulum and harmonic limits")):
        p = cmd(name, help_)
        p.add_argument("--q0", type=_finite)
        p.add_argument("--p0", type=_finite)
        if name == "classical":
            p.add_argument("--t", type=_finite)
            p.add_argument("--dt", type=_finite)

    p = cmd("scan", "spectra over a delta grid")
    p.add_argument("--delta-steps", type=int)
    p.add_argument("--workers", type=int)

    p = cmd("certify", "duality certificate for two moduli points")
    p.add_argument("--delta2", type=_finite)
    p.add_argument("--beta2", type=_finite)
    p.add_argument("--dim2", type=int)
    for flag in ("--q0", "--p0", "--t", "--dt"):
        p.add_argument(flag, type=_finite)
    return parser


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path!r} is not valid JSON: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config {path!r} must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in data.items()}


def parse_args(argv) -> RunConfig:
    """Parse ``argv`` into a validated :class:`RunConfig`.

    Values come from the built-in defaults, then ``--config``, then explicit
    flags, later sources overriding earlier ones.
    """
    ns = vars(_build_parser().parse_args(list(argv)))
    command = ns.pop("command")
    merged = dict(DEFAULTS)
    merged["format"] = DEFAULT_FORMAT[command]
    if "config" in ns:
        merged.update(_load_config(ns.pop("config")))
        merged.pop("command", None)
    merged.update(ns)

    try:
        beta = merged.pop("beta", None)
        beta = _finite(beta) if beta is not None else None
        delta = _finite(merged.pop("delta"))
        dim = merged.pop("dim")
        dim = int(dim) if dim is not None else None
        for key in ("t", "dt", "q0", "p0", "delta2", "beta2"):
            if merged.get(key) is not None:
                merged[key] = _finite(merged[key])
        if merged.get("n_list") is not None:
            merged["n_list"] = _int_list(merged["n_list"])
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc

    fmt = merged.pop("format")
    if fmt not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, got {fmt!r}")
    out = merged.pop("out")
    cfg = RunConfig(command, beta, delta, dim, out, fmt, merged)

    if command != "limits" and beta is None and not (command == "factorize" and merged["n_list"]):
        raise UsageError(f"{command} needs --beta")
    if command == "factorize" and beta is None:
        cfg.beta = 1.0
    if command != "limits":
        try:
            cfg.moduli()
        except DomainError as exc:
            raise UsageError(str(exc)) from exc
    if command == "scan" and merged["delta_steps"] < 1:
        raise UsageError("--delta-steps must be positive")
    if command == "certify" and merged["delta2"] is None and merged["beta2"] is None:
        raise UsageError("certify needs --delta2 or --beta2")
    return cfg


def _moduli_rows(m: ModuliPoint):
    return [m.beta, m.delta]


def _run_spectrum(cfg: RunConfig) -> tuple:
    row = moduli_scan(cfg.beta, [cfg.delta], cfg.dim).rows[0]
    if cfg.format == "json":
        return reports.dumps("spectrum", {"row": row.to_dict()}), 0
    return reports.csv_text(["k", "E"], enumerate(row.eigenvalues)), 0


def _run_charpoly(cfg: RunConfig) -> tuple:
    m = cfg.moduli()
    form = cfg.options["form"]
    poly = (charpoly_dimer if form == "dimer" else charpoly_closed)(m)
    coeffs = [float(c) for c in poly.coeffs]
    report = verify_charpoly(m, form) if cfg.options["check"] else None
    status = 0
    if report is not None and not report.passed:
        print(
            f"charpoly mismatch: max coefficient difference {report.max_coeff_diff!r} "
            f"exceeds {report.tolerance!r}",
            file=sys.stderr,
        )
        if cfg.options["strict"]:
            status = 1
    if cfg.format == "json":
        payload = {
            "moduli": m.to_dict(),
            "form": form,
            "coefficients": coeffs,
            "verification": report.to_dict() if report else None,
        }
        return reports.dumps("charpoly", payload), status
    if report is None:
        return reports.csv_text(["power", "coefficient"], enumerate(coeffs)), status
    rows = zip(range(len(coeffs)), coeffs, report.oracle)
    comment = f"max_coeff_diff={report.max_coeff_diff!r} pass={'true' if report.passed else 'false'}"
    return reports.csv_text(["power", "coefficient", "oracle"], rows, comment), status


def _run_vacuum(cfg: RunConfig) -> tuple:
    m = cfg.moduli()
    vac = vacuum_report(m)
    pairing = None
    if cfg.options["kinetic_off"] or m.delta == 0.0:
        pairing = degeneracy_pairing(m, kinetic_off=cfg.options["kinetic_off"])
    if cfg.format == "json":
        payload = {
            "moduli": m.to_dict(),
            "vacuum": vac.to_dict(),
            "pairing": pairing.to_dict() if pairing else None,
        }
        return reports.dumps("vacuum", payload), 0
    header = ["beta", "delta", "n", "E0", "gap", "nondegenerate", "localization_index"]
    row = _moduli_rows(m) + [vac.n, vac.energy, vac.gap, vac.nondegenerate, vac.localization_index]
    return reports.csv_text(header, [row]), 0


def _run_factorize(cfg: RunConfig) -> tuple:
    dims = cfg.options["n_list"] or [hilbert_dim(cfg.moduli())]
    drop = cfg.options["drop_boxes"]
    rows = [factorization_defect(ModuliPoint(cfg.beta, cfg.delta, n), drop_boxes=drop) for n in sorted(dims)]
    if cfg.format == "json":
        payload = {
            "beta": float(cfg.beta),
            "delta": ModuliPoint(cfg.beta, cfg.delta, dims[0]).delta,
            "drop_boxes": drop,
            "rows": [r.to_dict() for r in rows],
        }
        return reports.dumps("factorization", payload), 0
    header = ["n", "defect", "corner_energy", "vacuum_energy", "corner_vs_full", "overlap"]
    body = [[r.n, r.defect, r.corner_energy, r.vacuum_energy, r.corner_vs_full, r.overlap] for r in rows]
    return reports.csv_text(header, body), 0


def _run_classical(cfg: RunConfig) -> tuple:
    m = cfg.moduli()
    o = cfg.options
    traj = flow(ClassicalState(o["q0"], o["p0"]), m, o["t"], o["dt"])
    samples = [[float(x) for x in row] for row in traj.rows()]
    if cfg.format == "json":
        payload = {"moduli": m.to_dict(), "dt": traj.dt, "method": traj.method, "samples": samples}
        return reports.dumps("trajectory", payload), 0
    return reports.csv_text(["t", "q", "p", "H"], samples), 0


def _run_limits(cfg: RunConfig) -> tuple:
    s = ClassicalState(cfg.options["q0"], cfg.options["p0"])
    full, pendulum, harmonic = limit_energies(s)
    shifted = list(shifted_offsets(s))
    if cfg.format == "json":
        payload = {"q": s.q, "p": s.p, "H": full, "H_SG": pendulum, "H_2": harmonic, "shifted": shifted}
        return reports.dumps("limits", payload), 0
    header = ["q", "p", "H", "H_SG", "H_2", "H_plus_2", "H_SG_plus_1"]
    return reports.csv_text(header, [[s.q, s.p, full, pendulum, harmonic] + shifted[:2]]), 0


def _run_scan(cfg: RunConfig) -> tuple:
    report = moduli_scan(
        cfg.beta, delta_grid(cfg.options["delta_steps"]), cfg.dim, workers=cfg.options["workers"]
    )
    if cfg.format == "json":
        return reports.dumps("scan", report.to_dict()), 0
    n = report.rows[0].n
    header = ["beta", "delta", "n", "E0", "gap"] + [f"E_{k}" for k in range(1, n + 1)]
    body = [[r.beta, r.delta, r.n, r.energy, r.gap] + list(r.eigenvalues) for r in report]
    comment = f"E_1..E_{n} are the eigenvalues in ascending order"
    return reports.csv_text(header, body, comment), 0


def _run_certify(cfg: RunConfig) -> tuple:
    o = cfg.options
    m1 = cfg.moduli()
    beta2 = o["beta2"] if o["beta2"] is not None else cfg.beta
    delta2 = o["delta2"] if o["delta2"] is not None else cfg.delta
    dim2 = o["dim2"] if o["dim2"] is not None else cfg.dim
    try:
        m2 = ModuliPoint(beta2, delta2, dim2)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    cert = duality_certificate(m1, m2)
    equivalent = None
    if m1.beta == 1.0 and m2.beta == 1.0:
        equivalent = classical_equivalence_check(m1, m2, ClassicalState(o["q0"], o["p0"]), o["t"], o["dt"])
    if cfg.format == "json":
        payload = {"certificate": cert.to_dict(), "classical_equivalence": equivalent}
        return reports.dumps("certificate", payload), 0
    header = ["beta1", "delta1", "beta2", "delta2", "classically_canonical", "spectra_equal", "is_duality"]
    row = _moduli_rows(m1) + _moduli_rows(m2) + [cert.classically_canonical, cert.spectra_equal, cert.is_duality]
    return reports.csv_text(header, [row]), 0


_DISPATCH = {
    "spectrum": _run_spectrum,
    "charpoly": _run_charpoly,
    "vacuum": _run_vacuum,
    "factorize": _run_factorize,
    "classical": _run_classical,
    "limits": _run_limits,
    "scan": _run_scan,
    "certify": _run_certify,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute ``cfg`` and write its report; returns the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    try:
        text, status = _DISPATCH[cfg.command](cfg)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.out == "-":
        stdout.write(text)
    else:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    return status


def main(argv=None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
