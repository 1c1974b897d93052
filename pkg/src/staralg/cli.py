"""``alg`` command line: JSON report on stdout, short summary on stderr.

Exit codes: 0 all checks passed, 1 a check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

import numpy as np

from . import io
from .algebra import Algebra, check_associativity, find_identity, random_elements
from .catalog import validate_semigroup
from .errors import (
    AlgebraError,
    DimensionMismatch,
    NoIdentity,
    NotInvertible,
    ResidualFailure,
    ZeroPolynomial,
)
from .polycalc import spectral_mapping_check
from .spectral import hausdorff, invert, spectrum
from .star import apply_star, check_star_isometry, classify_star

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2

INPUT_ERRORS = (io.ParseError, DimensionMismatch, ZeroPolynomial)


def _digest(inputs: dict) -> str:
    blob = json.dumps(io.sanitize(inputs), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _check(name: str, ok: bool, residual) -> dict:
    return {"name": name, "ok": bool(ok), "residual": residual}


def make_report(command: str, inputs: dict, results: dict, checks: list[dict]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "digest": _digest(inputs),
        "results": results,
        "checks": checks,
        "exit_code": EXIT_OK if all(c["ok"] for c in checks) else EXIT_CHECK_FAILED,
    }


def error_report(command: str, inputs: dict, exc: Exception, code: int) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "digest": _digest(inputs),
        "error": {"type": type(exc).__name__, "message": str(exc)},
        "checks": [],
        "exit_code": code,
    }


def _spectrum_json(sp) -> dict:
    order = sorted(range(len(sp.points)), key=lambda k: (sp.points[k].real, sp.points[k].imag))
    return {
        "points": [io.complex_to_json(sp.points[k]) for k in order],
        "multiplicities": [sp.multiplicities[k] for k in order],
        "cluster_tol": sp.cluster_tol,
    }


def cmd_check(algebra_doc) -> dict:
    inputs = {"algebra": algebra_doc}
    checks, results = [], {}
    if isinstance(algebra_doc, dict) and algebra_doc.get("kind") == "semigroup":
        table = io.semigroup_from_json(algebra_doc)
        sg = validate_semigroup(table)
        results["semigroup"] = {
            "associative": sg.associative,
            "has_identity": sg.has_identity,
            "is_group": sg.is_group,
            "failures": [list(f) for f in sg.failures],
        }
        checks.append(_check("semigroup_associative", sg.associative, len(sg.failures)))
        checks.append(_check("semigroup_identity", sg.has_identity, None))
        if not (sg.associative and sg.has_identity):
            return make_report("check", inputs, results, checks)
    a = io.algebra_from_json(algebra_doc)
    results["dim"] = a.dim
    results["labels"] = list(a.labels)
    assoc = check_associativity(a)
    results["associativity_residual"] = assoc.max_residual
    checks.append(_check("associativity", assoc.ok, assoc.max_residual))
    try:
        ident = find_identity(a)
        results["identity"] = io.array_to_json(ident.coeffs)
        checks.append(_check("identity", True, ident.residual))
    except NoIdentity as exc:
        results["identity"] = None
        results["identity_error"] = str(exc)
        checks.append(_check("identity", False, exc.residual))
    results["commutative"] = a.is_commutative()
    return make_report("check", inputs, results, checks)


def _load_unital(algebra_doc) -> Algebra:
    a = io.algebra_from_json(algebra_doc)
    find_identity(a)  # raises NoIdentity early, before any spectral work
    return a


def cmd_spectrum(algebra_doc, element_doc) -> dict:
    inputs = {"algebra": algebra_doc, "element": element_doc}
    a = _load_unital(algebra_doc)
    x = io.element_from_json(a, element_doc)
    sp = spectrum(a, x)
    return make_report("spectrum", inputs, {"spectrum": _spectrum_json(sp)}, [_check("spectrum_nonempty", len(sp) > 0, None)])


def cmd_polymap(algebra_doc, element_doc, poly_doc, tol: float = 1e-7) -> dict:
    inputs = {"algebra": algebra_doc, "element": element_doc, "poly": poly_doc, "tol": tol}
    p = io.polynomial_from_json(poly_doc)
    if p.is_zero:
        raise ZeroPolynomial("polymap needs a nonzero polynomial")
    a = _load_unital(algebra_doc)
    x = io.element_from_json(a, element_doc)
    rep = spectral_mapping_check(a, x, p, tol)
    results = {
        "image": io.spectrum_points_to_json(rep.image),
        "direct": io.spectrum_points_to_json(rep.direct),
        "hausdorff": rep.hausdorff,
        "surjectivity_gap": rep.surjectivity_gap,
    }
    return make_report("polymap", inputs, results, [_check("spectral_mapping", rep.ok, rep.hausdorff)])


def star_consequences(a: Algebra, s, samples: int, seed: int) -> tuple[dict, list[dict]]:
    """Run the classification and every star property on seeded random elements."""
    cls = classify_star(a, s)
    e = a.identity
    e_res = float(np.linalg.norm((apply_star(s, e) - e).coeffs))
    rng = np.random.default_rng(seed)
    xs = random_elements(a, samples, rng)
    inv_dev, spec_dev, xxs_dev, skipped = 0.0, 0.0, 0.0, 0
    for x in xs:
        xs_ = apply_star(s, x)
        spec_dev = max(spec_dev, hausdorff(spectrum(a, xs_).points, np.conj(spectrum(a, x).as_array())))
        try:
            lhs = apply_star(s, invert(a, x))
            rhs = invert(a, xs_)
        except (NotInvertible, ResidualFailure):
            skipped += 1
        else:
            inv_dev = max(inv_dev, float(np.linalg.norm((lhs - rhs).coeffs) / np.linalg.norm(rhs.coeffs)))
        if cls.antimultiplicative:
            p = x * xs_
            xxs_dev = max(xxs_dev, float(np.linalg.norm((apply_star(s, p) - p).coeffs) / (1.0 + np.linalg.norm(p.coeffs))))
    iso = check_star_isometry(a, s, samples=samples, seed=seed)
    results = {
        "kind": cls.kind,
        "involutive": cls.involutive,
        "antimultiplicative": cls.antimultiplicative,
        "multiplicative": cls.multiplicative,
        "commutative": cls.commutative,
        "classification_residuals": cls.residuals,
        "identity_star_residual": e_res,
        "inverse_compatibility_max_rel_dev": inv_dev,
        "non_invertible_samples": skipped,
        "spectrum_conjugation_max_hausdorff": spec_dev,
        "isometry_max_ratio_dev": iso.max_ratio_dev,
    }
    checks = [
        _check("star_law", cls.kind != "neither", cls.residuals),
        _check("identity_fixed", e_res <= 1e-10, e_res),
        _check("inverse_compatibility", inv_dev <= 1e-9, inv_dev),
        _check("spectrum_conjugation", spec_dev <= 1e-8, spec_dev),
        _check("isometry", iso.ok, iso.max_ratio_dev),
    ]
    if cls.antimultiplicative:
        checks.append(_check("x_xstar_selfadjoint", xxs_dev <= 1e-10, xxs_dev))
    return results, checks


def cmd_star(algebra_doc, star_doc, samples: int = 200, seed: int = 0) -> dict:
    inputs = {"algebra": algebra_doc, "star": star_doc, "samples": samples, "seed": seed}
    a = _load_unital(algebra_doc)
    s = io.star_from_json(a, star_doc)
    results, checks = star_consequences(a, s, samples, seed)
    return make_report("star", inputs, results, checks)


def _summary(report: dict) -> str:
    if "error" in report:
        return f"{report['command']}: {report['error']['type']}: {report['error']['message']}"
    lines = [f"{report['command']}: exit {report['exit_code']}"]
    for c in report["checks"]:
        lines.append(f"  [{'ok' if c['ok'] else 'FAIL'}] {c['name']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alg", description="Spectra, functional calculus and stars on finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="associativity, identity and semigroup checks")
    p.add_argument("file")

    p = sub.add_parser("spectrum", help="spectrum of an element")
    p.add_argument("file")
    p.add_argument("--element", required=True, help="element JSON file (or inline JSON)")

    p = sub.add_parser("polymap", help="compare p(spectrum(x)) with spectrum(p(x))")
    p.add_argument("file")
    p.add_argument("--element", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--tol", type=float, default=1e-7)

    p = sub.add_parser("star", help="classify a star and check its consequences")
    p.add_argument("file")
    p.add_argument("--star", required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    inputs: dict = {}
    try:
        inputs["algebra"] = io.load_json(args.file)
        if args.command == "check":
            report = cmd_check(inputs["algebra"])
        elif args.command == "spectrum":
            inputs["element"] = io.load_json(args.element)
            report = cmd_spectrum(inputs["algebra"], inputs["element"])
        elif args.command == "polymap":
            inputs["element"] = io.load_json(args.element)
            inputs["poly"] = io.load_json(args.poly)
            inputs["tol"] = args.tol
            report = cmd_polymap(inputs["algebra"], inputs["element"], inputs["poly"], args.tol)
        else:
            inputs["star"] = io.load_json(args.star)
            inputs.update(samples=args.samples, seed=args.seed)
            if args.samples < 1:
                raise io.ParseError("--samples must be positive")
            report = cmd_star(inputs["algebra"], inputs["star"], args.samples, args.seed)
    except INPUT_ERRORS as exc:
        report = error_report(args.command, inputs, exc, EXIT_INPUT_ERROR)
    except AlgebraError as exc:
        report = error_report(args.command, inputs, exc, EXIT_CHECK_FAILED)
    return io.sanitize(report), report["exit_code"]


def main(argv: list[str] | None = None) -> int:
    report, code = run(argv)
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    print(_summary(report), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
