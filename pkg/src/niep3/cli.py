"""Command-line front end: parse spectra, run checks and realizations,
serialize matrices and reports.

All serialization lives here: matrices travel as JSON objects with exact
string entries ("num/den" on the rational backend, hexadecimal float
strings plus a decimal rendering on the float backend), so emitted files
diff cleanly and re-verify bit for bit.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .compare import ComparisonTable, MethodCaps, compare_methods
from .errors import BadDimension, NiepError, ParseError, UsageError
from .laffey import find_min_laffey
from .matrices import DenseMatrix
from .multiblock import find_min_multiblock
from .results import NotFoundUpToCap, RealizationResult
from .scalars import DEFAULT_PRECISION, RATIONAL, FloatBackend, RationalBackend, Scalar
from .shifted import find_min_shifted_companion
from .spectrum import Spectrum3, check_jll, check_n3_companion, check_rho_ge_2a, minimal_jll_dimension
from .verify import numeric_eigen_check, verify_realization

PRECISION_ENV = "NIEP_PRECISION_BITS"
_JLL_PANEL_DIMENSIONS = (3, 4, 5, 6)

_FINDERS = {
    "shifted-companion": lambda sigma, caps: find_min_shifted_companion(sigma, caps.shifted),
    "laffey": lambda sigma, caps: find_min_laffey(sigma, caps.laffey),
    "multiblock": lambda sigma, caps: find_min_multiblock(sigma, caps.multiblock),
}


@dataclass(frozen=True)
class CliConfig:
    backend: str  # "rational" or "float"
    precision_bits: int
    caps: MethodCaps
    output_format: str  # "text", "json", or "csv"
    output_path: str | None
    strict: bool
    jobs: int


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


def _config_from_args(args) -> CliConfig:
    precision = args.precision
    if precision is None:
        env = os.environ.get(PRECISION_ENV)
        if env is not None:
            try:
                precision = int(env)
            except ValueError as exc:
                raise UsageError(f"{PRECISION_ENV} must be an integer") from exc
    if precision is None:
        precision = DEFAULT_PRECISION
    if args.backend == "float" and precision < 64:
        raise UsageError("float precision must be at least 64 bits")
    return CliConfig(
        backend=args.backend,
        precision_bits=precision,
        caps=MethodCaps(
            shifted=args.cap_shifted,
            laffey=args.cap_laffey,
            multiblock=args.cap_multiblock,
        ),
        output_format=args.format,
        output_path=args.out,
        strict=args.strict,
        jobs=getattr(args, "jobs", 1),
    )


def _spectrum_backend(config: CliConfig):
    if config.backend == "float":
        return FloatBackend(config.precision_bits)
    return RATIONAL


def parse_spectrum(args, config: CliConfig) -> Spectrum3:
    """Build the spectrum from --rho plus one of --modsq, --im, --angle-pi.

    Literals parse exactly: "7/5" and "1.4" are the same rational.  An
    angle given as a fraction T of pi forces the float backend unless its
    cosine is rational (T a multiple of 1/2, 1/3, or their reflections).
    """
    if args.rho is None:
        raise UsageError("--rho is required to define a spectrum")
    be = _spectrum_backend(config)
    given = [
        name
        for name, value in (
            ("--modsq", args.modsq),
            ("--im", args.im),
            ("--angle-pi", args.angle_pi),
        )
        if value is not None
    ]
    if len(given) != 1:
        raise UsageError(
            "exactly one of --modsq, --im, or --angle-pi must be given"
        )
    if args.angle_pi is not None:
        if args.re is not None:
            raise UsageError("--re cannot be combined with --angle-pi")
        return Spectrum3.from_angle(
            be.parse(args.rho),
            _parse_fraction(args.angle_pi),
            precision=config.precision_bits,
        )
    if args.re is None:
        raise UsageError("--re is required unless --angle-pi is used")
    rho, a = be.parse(args.rho), be.parse(args.re)
    if args.modsq is not None:
        return Spectrum3(rho, a, be.parse(args.modsq))
    return Spectrum3.from_real_imag(be, rho, a, be.parse(args.im))


# ---------------------------------------------------------------- rendering


def _scalar_text(x: Scalar) -> str:
    if isinstance(x.backend, RationalBackend):
        return str(x.as_fraction())
    return str(x)


def _scalar_json(x: Scalar | None):
    if x is None:
        return None
    if isinstance(x.backend, RationalBackend):
        return str(x.as_fraction())
    return {"hex": x.hex(), "decimal": str(x)}


def matrix_to_obj(matrix: DenseMatrix) -> dict:
    """JSON-ready form of a matrix with exact string entries."""
    be = matrix.backend
    obj = {"dim": matrix.dim, "backend": "rational", "entries": None}
    if isinstance(be, FloatBackend):
        obj["backend"] = "float"
        obj["precision"] = be.precision
        obj["entries"] = [[x.hex() for x in row] for row in matrix.rows]
        obj["entries_decimal"] = [[str(x) for x in row] for row in matrix.rows]
    else:
        obj["entries"] = [
            [str(x.as_fraction()) for x in row] for row in matrix.rows
        ]
    return obj


def matrix_from_obj(obj) -> DenseMatrix:
    """Rebuild a matrix from its JSON object form (exact round trip)."""
    if not isinstance(obj, dict):
        raise ParseError("matrix file must hold a JSON object")
    if "matrix" in obj and "entries" not in obj:
        obj = obj["matrix"]  # accept a whole realize output
    try:
        dim = int(obj["dim"])
        backend_name = obj["backend"]
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("matrix object needs dim, backend, entries") from exc
    if backend_name == "rational":
        be = RATIONAL
    elif backend_name == "float":
        be = FloatBackend(int(obj.get("precision", DEFAULT_PRECISION)))
    else:
        raise ParseError(f"unknown backend {backend_name!r}")
    if len(entries) != dim or any(len(row) != dim for row in entries):
        raise BadDimension("entry grid does not match the declared dimension")
    return DenseMatrix.of(be, [[be.parse(str(e)) for e in row] for row in entries])


def _spectrum_json(sigma: Spectrum3) -> dict:
    obj = {
        "rho": _scalar_json(sigma.rho),
        "re": _scalar_json(sigma.a),
        "modsq": _scalar_json(sigma.modsq),
        "backend": "rational",
    }
    if isinstance(sigma.backend, FloatBackend):
        obj["backend"] = "float"
        obj["precision"] = sigma.backend.precision
    return obj


def _certificate_json(cert) -> dict:
    return {
        "ok": cert.ok,
        "nonnegative": cert.nonnegative,
        "charpoly_match": cert.charpoly_match,
        "backend": cert.backend_name,
        "precision": cert.precision,
        "tolerance_used": _scalar_json(cert.tolerance_used),
        "residual": _scalar_json(cert.residual),
    }


def _result_json(outcome) -> dict:
    if isinstance(outcome, NotFoundUpToCap):
        return {
            "found": False,
            "method": outcome.method.value,
            "cap": outcome.cap,
            "notes": list(outcome.notes),
            "diagnostics": [
                {
                    "parameter": d.parameter,
                    "first_bad_index": d.first_bad_index,
                    "detail": d.detail,
                }
                for d in outcome.diagnostics
            ],
        }
    return {
        "found": True,
        "method": outcome.method.value,
        "zeros_added": outcome.zeros_added,
        "dim": outcome.dim,
        "margin": _scalar_json(outcome.margin),
        "notes": list(outcome.notes),
        "certificate": _certificate_json(outcome.certificate),
        "matrix": matrix_to_obj(outcome.matrix),
    }


def _matrix_text(matrix: DenseMatrix) -> str:
    return "\n".join(
        "  " + " ".join(_scalar_text(x) for x in row) for row in matrix.rows
    )


def _report_line(report) -> str:
    verdict = "PASS" if report.holds else "FAIL"
    line = f"{verdict} {report.name}"
    if report.witness is not None:
        line += f"  witness={_scalar_text(report.witness)}"
    if report.notes:
        line += f"  ({report.notes})"
    return line


def _result_text(outcome) -> str:
    if isinstance(outcome, NotFoundUpToCap):
        lines = [
            f"method: {outcome.method.value}",
            f"no realization found up to cap {outcome.cap}",
        ]
        lines += [f"note: {n}" for n in outcome.notes]
        for d in outcome.diagnostics[:5]:
            lines.append(f"  parameter {d.parameter}: {d.detail}")
        if len(outcome.diagnostics) > 5:
            lines.append(f"  ... {len(outcome.diagnostics) - 5} more candidates")
        return "\n".join(lines)
    lines = [
        f"method: {outcome.method.value}",
        f"zeros added: {outcome.zeros_added} (dimension {outcome.dim})",
        f"certificate: {outcome.certificate}",
    ]
    if outcome.margin is not None:
        lines.append(f"margin: {_scalar_text(outcome.margin)}")
    lines += [f"note: {n}" for n in outcome.notes]
    lines.append(f"matrix ({outcome.dim}x{outcome.dim}):")
    lines.append(_matrix_text(outcome.matrix))
    return "\n".join(lines)


# ---------------------------------------------------------------- commands


def _cmd_check(args, config: CliConfig):
    sigma = parse_spectrum(args, config)
    reports = list(check_jll(sigma, _JLL_PANEL_DIMENSIONS[0]))
    for n in _JLL_PANEL_DIMENSIONS[1:]:
        reports += [
            r for r in check_jll(sigma, n) if r.name.startswith("moment")
        ]
    reports.append(check_n3_companion(sigma))
    reports.append(check_rho_ge_2a(sigma))
    jll_min = minimal_jll_dimension(sigma)
    if config.output_format == "json":
        body = json.dumps(
            {
                "spectrum": _spectrum_json(sigma),
                "conditions": [
                    {
                        "name": r.name,
                        "holds": r.holds,
                        "witness": _scalar_json(r.witness),
                        "notes": r.notes,
                    }
                    for r in reports
                ],
                "jll_min_dimension": jll_min,
            },
            indent=2,
        )
    else:
        lines = [f"spectrum: {sigma.describe()}"]
        lines += [_report_line(r) for r in reports]
        floor = jll_min if jll_min is not None else ">64"
        lines.append(f"least dimension passing every moment condition: {floor}")
        body = "\n".join(lines)
    return body, 0


def _cmd_realize(args, config: CliConfig):
    sigma = parse_spectrum(args, config)
    outcome = _FINDERS[args.method](sigma, config.caps)
    missed = isinstance(outcome, NotFoundUpToCap)
    if config.output_format == "json":
        body = json.dumps(
            {"spectrum": _spectrum_json(sigma), **_result_json(outcome)}, indent=2
        )
    else:
        body = f"spectrum: {sigma.describe()}\n" + _result_text(outcome)
    return body, 2 if missed and config.strict else 0


def _cmd_compare(args, config: CliConfig):
    sigma = parse_spectrum(args, config)
    table = compare_methods(sigma, config.caps)
    all_missed = all(not outcome.found for _, outcome in table.outcomes)
    if config.output_format == "json":
        body = json.dumps(_table_json(table), indent=2)
    else:
        body = _table_text(table)
    return body, 2 if all_missed and config.strict else 0


def _table_json(table: ComparisonTable) -> dict:
    return {
        "spectrum": _spectrum_json(table.sigma),
        "conditions": [
            {
                "name": r.name,
                "holds": r.holds,
                "witness": _scalar_json(r.witness),
                "notes": r.notes,
            }
            for r in table.conditions
        ],
        "jll_min_dimension": table.jll_min_dimension,
        "caps": {
            "shifted": table.caps.shifted,
            "laffey": table.caps.laffey,
            "multiblock": table.caps.multiblock,
        },
        "methods": [_result_json(outcome) for _, outcome in table.outcomes],
    }


def _table_text(table: ComparisonTable) -> str:
    lines = [f"spectrum: {table.sigma.describe()}", "conditions:"]
    lines += ["  " + _report_line(r) for r in table.conditions]
    floor = table.jll_min_dimension if table.jll_min_dimension is not None else ">64"
    lines.append(f"least dimension passing every moment condition: {floor}")
    lines.append("methods:")
    for method, outcome in table.outcomes:
        if outcome.found:
            cert = "certified" if outcome.certificate.ok else "CERTIFICATE FAILED"
            lines.append(
                f"  {method.value:18} {outcome.zeros_added} zeros "
                f"(dimension {outcome.dim})  {cert}"
            )
        else:
            lines.append(
                f"  {method.value:18} not found up to cap {outcome.cap}"
            )
    return "\n".join(lines)


def _cmd_verify(args, config: CliConfig):
    try:
        with open(args.matrix, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read matrix file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"matrix file is not valid JSON: {exc}") from exc
    matrix = matrix_from_obj(obj)
    sigma = parse_spectrum(args, config)
    cert = verify_realization(matrix, sigma)
    numeric = None
    if isinstance(matrix.backend, FloatBackend):
        numeric = numeric_eigen_check(matrix, sigma)
    if config.output_format == "json":
        payload = {
            "spectrum": _spectrum_json(sigma),
            "dim": matrix.dim,
            "certificate": _certificate_json(cert),
        }
        if numeric is not None:
            payload["numeric_eigen_check"] = numeric
        body = json.dumps(payload, indent=2)
    else:
        lines = [
            f"spectrum: {sigma.describe()}",
            f"matrix: {matrix.dim}x{matrix.dim} on the {cert.backend_name} backend",
            f"certificate: {cert}",
            f"verdict: {'PASS' if cert.ok else 'FAIL'}",
        ]
        if numeric is not None:
            lines.append(
                f"numeric eigenvalue check: {'PASS' if numeric else 'FAIL'}"
            )
        body = "\n".join(lines)
    return body, 2 if not cert.ok and config.strict else 0


def _sweep_row(sigma: Spectrum3, caps: MethodCaps):
    jll_min = minimal_jll_dimension(sigma)
    cells = []
    for finder, cap in (
        (find_min_shifted_companion, caps.shifted),
        (find_min_laffey, caps.laffey),
        (find_min_multiblock, caps.multiblock),
    ):
        outcome = finder(sigma, cap)
        cells.append(str(outcome.zeros_added) if outcome.found else f">{cap}")
    return {
        "rho": _scalar_text(sigma.rho),
        "a": _scalar_text(sigma.a),
        "modsq": _scalar_text(sigma.modsq),
        "jll_min_n": str(jll_min) if jll_min is not None else ">64",
        "m1_zeros": cells[0],
        "m2_zeros": cells[1],
        "m3_zeros": cells[2],
        "caps": f"{caps.shifted}/{caps.laffey}/{caps.multiblock}",
    }


_SWEEP_COLUMNS = ("rho", "a", "modsq", "jll_min_n", "m1_zeros", "m2_zeros", "m3_zeros", "caps")


def _cmd_sweep(args, config: CliConfig):
    if args.rho_grid is None or args.angle_grid is None:
        raise UsageError("sweep needs both --rho-grid and --angle-grid")
    be = _spectrum_backend(config)
    rhos = [be.parse(tok) for tok in args.rho_grid.split(",") if tok.strip()]
    angles = [_parse_fraction(tok) for tok in args.angle_grid.split(",") if tok.strip()]
    if not rhos or not angles:
        raise UsageError("sweep grids must be non-empty")
    spectra = [
        Spectrum3.from_angle(rho, t, precision=config.precision_bits)
        for rho in rhos
        for t in angles
    ]
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(lambda s: _sweep_row(s, config.caps), spectra))
    else:
        rows = [_sweep_row(s, config.caps) for s in spectra]
    any_all_missed = any(
        all(row[c].startswith(">") for c in ("m1_zeros", "m2_zeros", "m3_zeros"))
        for row in rows
    )
    if config.output_format == "json":
        body = json.dumps(rows, indent=2)
    else:
        out = io.StringIO()
        out.write(",".join(_SWEEP_COLUMNS) + "\n")
        for row in rows:
            out.write(",".join(row[c] for c in _SWEEP_COLUMNS) + "\n")
        body = out.getvalue().rstrip("\n")
    return body, 2 if any_all_missed and config.strict else 0


_COMMANDS = {
    "check": _cmd_check,
    "realize": _cmd_realize,
    "compare": _cmd_compare,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    shared = _Parser(add_help=False)
    shared.add_argument("--backend", choices=("rational", "float"), default="rational")
    shared.add_argument("--precision", type=int, default=None,
                        help=f"float precision in bits (or ${PRECISION_ENV}; default {DEFAULT_PRECISION})")
    shared.add_argument("--format", choices=("text", "json", "csv"), default="text")
    shared.add_argument("--out", default=None, help="write output to this file")
    shared.add_argument("--strict", action="store_true",
                        help="exit 2 when the answer is a cap miss or a failed certificate")
    shared.add_argument("--cap-shifted", type=int, default=MethodCaps.shifted)
    shared.add_argument("--cap-laffey", type=int, default=MethodCaps.laffey)
    shared.add_argument("--cap-multiblock", type=int, default=MethodCaps.multiblock)

    spectrum = _Parser(add_help=False)
    spectrum.add_argument("--rho", default=None, help="dominant eigenvalue, exact literal")
    spectrum.add_argument("--re", default=None, help="real part of the conjugate pair")
    spectrum.add_argument("--modsq", default=None, help="squared modulus of the pair")
    spectrum.add_argument("--im", default=None, help="imaginary part of the pair")
    spectrum.add_argument("--angle-pi", default=None,
                          help="pair angle as a fraction of pi (modulus fixed to 1)")

    parser = _Parser(prog="niep3", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[shared, spectrum],
                   help="run the realizability condition panel")
    realize = sub.add_parser("realize", parents=[shared, spectrum],
                             help="search one construction for a minimal realization")
    realize.add_argument("--method", required=True, choices=tuple(_FINDERS))
    sub.add_parser("compare", parents=[shared, spectrum],
                   help="run all three constructions side by side")
    verify = sub.add_parser("verify", parents=[shared, spectrum],
                            help="certify a matrix file against a spectrum")
    verify.add_argument("--matrix", required=True, help="JSON matrix file")
    sweep = sub.add_parser("sweep", parents=[shared],
                           help="grid scan over rho and angle values")
    sweep.add_argument("--rho-grid", default=None, help="comma-separated rho values")
    sweep.add_argument("--angle-grid", default=None,
                       help="comma-separated angle fractions of pi")
    sweep.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        body, code = _COMMANDS[args.command](args, config)
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except NiepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 64
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
