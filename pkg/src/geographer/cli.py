"""Command line front end: realize, invariants, enumerate, verify.

Exit codes are stable contracts: 0 success, 1 verification failure,
2 inadmissible input, 3 open problem (null mode only), 64 usage error.
Output goes to stdout unless --out is given; JSON documents carry a
schema_version and per-field justification strings so certificates are
self-documenting.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import geography
from .bundle_manifold import BundleManifoldSpec, InvariantCertificate, construct
from .errors import InadmissibleError
from .fiber_sum import (
    DolgachevSurface,
    EllipticSurface,
    FiberSumSpec,
    fiber_sum_invariants,
)
from .geography import OpenProblem, Recipe
from .verify import verify_bundle_grid

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INADMISSIBLE = 2
EXIT_OPEN = 3
EXIT_USAGE = 64

GENUS_ENV = "GEOGRAPHER_GENUS_DEFAULT"

TSV_COLUMNS = (
    "a",
    "b",
    "c",
    "kind",
    "recipe",
    "family",
    "sigma",
    "chi",
    "b1",
    "b_plus",
    "b_minus",
    "K_squared",
    "K_dot_omega",
    "kappa",
    "degeneracy",
    "nullity",
    "minimal",
)

CITATIONS = {
    "sigma": "vanishes under a free circle action; adds under torus gluing (Novikov)",
    "chi": "vanishes under a free circle action; adds along square-zero tori",
    "b1": "Wang sequence of the mapping torus and Gysin sequence of the circle bundle",
    "K_squared": "canonical class is Poincare dual to a multiple of a square-zero torus",
    "K_dot_omega": "fiber-torus multiple of the canonical class paired with omega",
    "kappa": "minimal-model table on the signs of K^2 and K.[omega]",
    "degeneracy": "rank defect of cup-with-[omega] on H^1; equals b1 - rank of the skew pairing",
    "nullity": "dimension of the cup-trivial subspace of H^1; a lower bound for the degeneracy",
    "minimal": "fiber sums of minimal symplectic manifolds are minimal (Li-Stipsicz)",
}


class _Parser(argparse.ArgumentParser):
    """argparse with the usage exit code pinned to 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def certificate_checks(cert: InvariantCertificate) -> list[dict]:
    """Re-run the arithmetic identities on the emitted numbers."""
    checks = [
        {"name": "sigma_equals_bplus_minus_bminus", "passed": cert.sigma == cert.b_plus - cert.b_minus},
        {"name": "chi_equals_euler_identity", "passed": cert.chi == 2 - 2 * cert.b1 + cert.b2},
        {
            "name": "two_chi_plus_three_sigma_equals_K_squared",
            "passed": 2 * cert.chi + 3 * cert.sigma == cert.k_squared,
        },
    ]
    if cert.nullity is not None:
        checks.append(
            {
                "name": "nullity_le_degeneracy_le_b1",
                "passed": cert.nullity <= cert.degeneracy <= cert.b1,
            }
        )
    checks.extend({"name": name, "passed": True} for name in cert.checks)
    return checks


def _spec_fields(spec) -> dict:
    if isinstance(spec, BundleManifoldSpec):
        return {"d": spec.d, "k": spec.k, "g": spec.g, "e": spec.e}
    if isinstance(spec, FiberSumSpec):
        base = _spec_fields(spec.base)
        return {**base, "d": spec.d, "k": spec.k, "g": spec.g}
    if isinstance(spec, EllipticSurface):
        return {"n": spec.n}
    if isinstance(spec, DolgachevSurface):
        return {"p": spec.p, "q": spec.q}
    raise TypeError(f"unknown spec {spec!r}")


def recipe_document(recipe: Recipe) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "status": "realized",
        "triple": {
            "a": recipe.triple[0],
            "b": recipe.triple[1],
            "c": recipe.triple[2],
            "parameter": recipe.triple_kind,
        },
        "recipe": {
            "kind": recipe.kind,
            "label": recipe.label,
            "family": recipe.family,
            **_spec_fields(recipe.spec),
        },
        "certificate": recipe.certificate.as_dict(),
        "checks": certificate_checks(recipe.certificate),
        "citations": dict(CITATIONS),
        "notes": list(recipe.notes),
    }


def open_document(problem: OpenProblem) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "status": "open",
        "triple": {
            "a": problem.triple[0],
            "b": problem.triple[1],
            "c": problem.triple[2],
            "parameter": "nullity",
        },
        "reason": problem.reason,
        "notes": list(problem.notes),
    }


def invariants_document(label: str, fields: dict, cert: InvariantCertificate) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "status": "computed",
        "manifold": {"label": label, **fields},
        "certificate": cert.as_dict(),
        "checks": certificate_checks(cert),
        "citations": dict(CITATIONS),
    }


def _tsv_value(x) -> str:
    if x is None:
        return "unknown"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _tsv_row(triple, kind: str, label: str, family: str | None, cert) -> str:
    values = (
        triple[0],
        triple[1],
        triple[2],
        kind,
        label,
        family or "-",
        cert.sigma,
        cert.chi,
        cert.b1,
        cert.b_plus,
        cert.b_minus,
        cert.k_squared,
        cert.k_dot_omega,
        cert.kappa,
        cert.degeneracy,
        cert.nullity,
        cert.minimal,
    )
    return "\t".join(_tsv_value(v) for v in values)


def recipe_tsv_row(recipe: Recipe) -> str:
    return _tsv_row(recipe.triple, recipe.kind, recipe.label, recipe.family, recipe.certificate)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _genus_floor(args) -> int | None:
    if getattr(args, "genus", None) is not None:
        return args.genus
    env = os.environ.get(GENUS_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InadmissibleError(f"{GENUS_ENV} must be an integer, got {env!r}") from exc
    return None


def cmd_realize(args) -> int:
    try:
        genus = _genus_floor(args)
        if args.null:
            result = geography.realize_null(args.a, args.b, args.c, genus=genus)
        else:
            result = geography.realize(args.a, args.b, args.c, genus=genus)
    except InadmissibleError as exc:
        print(f"inadmissible triple ({args.a}, {args.b}, {args.c}): {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    if isinstance(result, OpenProblem):
        doc = open_document(result)
        if args.format == "json":
            _emit(json.dumps(doc, indent=2) + "\n", args.out)
        else:
            _emit(f"open\t{result.reason}\n", args.out)
        return EXIT_OPEN
    if args.format == "json":
        _emit(json.dumps(recipe_document(result), indent=2) + "\n", args.out)
    else:
        _emit("\t".join(TSV_COLUMNS) + "\n" + recipe_tsv_row(result) + "\n", args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    try:
        if args.bundle is not None:
            d, k, g, e = args.bundle
            spec = BundleManifoldSpec(d, k, g, e)
            cert = construct(spec)
            label, fields = spec.label, _spec_fields(spec)
        elif args.fibersum is not None:
            n, d, k, g = args.fibersum
            fspec = FiberSumSpec(EllipticSurface(n), d, k, g)
            cert = fiber_sum_invariants(fspec)
            label, fields = fspec.label, _spec_fields(fspec)
        else:
            p, q, d, k, g = args.dolgachev
            fspec = FiberSumSpec(DolgachevSurface(p, q), d, k, g)
            cert = fiber_sum_invariants(fspec)
            label, fields = fspec.label, _spec_fields(fspec)
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    doc = invariants_document(label, fields, cert)
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        triple = (cert.sigma, cert.b1, cert.degeneracy)
        rows = ["\t".join(TSV_COLUMNS), _tsv_row(triple, "invariants", label, None, cert)]
        _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.sigma_min > 0 or args.b1_max < 0:
        print("region must satisfy sigma-min <= 0 and b1-max >= 0", file=sys.stderr)
        return EXIT_INADMISSIBLE
    genus = _genus_floor(args)
    recipes = list(geography.enumerate_region(args.sigma_min, args.b1_max, genus=genus))
    if args.format == "json":
        docs = [recipe_document(r) for r in recipes]
        _emit(json.dumps(docs, indent=2) + "\n", args.out)
    else:
        lines = ["\t".join(TSV_COLUMNS)]
        lines.extend(recipe_tsv_row(r) for r in recipes)
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify_bundle_grid(args.grid_max)
    except ValueError as exc:
        print(f"invalid grid: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    lines = [f"bundle weight grid up to g = {report.grid_max}", f"cases: {report.cases}"]
    for name, count in report.counts.items():
        lines.append(f"{name}: {count} checked")
    if report.passed:
        lines.append("RESULT: PASS")
    else:
        lines.extend(f"FAIL {failure}" for failure in report.failures)
        lines.append("RESULT: FAIL")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _build_parser() -> _Parser:
    parser = _Parser(prog="geographer", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    realize = sub.add_parser("realize", help="realize a triple (a, b, c)")
    realize.add_argument("a", type=int, help="signature, a non-positive multiple of 8")
    realize.add_argument("b", type=int, help="first Betti number")
    realize.add_argument("c", type=int, help="degeneracy (or nullity with --null)")
    realize.add_argument("--null", action="store_true", help="treat c as the nullity")
    realize.add_argument("--genus", type=int, default=None, help="raise the genus floor")
    realize.add_argument("--format", choices=("json", "tsv"), default="json")
    realize.add_argument("--out", default=None, help="write output to a file")

    invariants = sub.add_parser("invariants", help="certificate of one construction")
    group = invariants.add_mutually_exclusive_group(required=True)
    group.add_argument("--bundle", nargs=4, type=int, metavar=("D", "K", "G", "E"))
    group.add_argument("--fibersum", nargs=4, type=int, metavar=("N", "D", "K", "G"))
    group.add_argument("--dolgachev", nargs=5, type=int, metavar=("P", "Q", "D", "K", "G"))
    invariants.add_argument("--format", choices=("json", "tsv"), default="json")
    invariants.add_argument("--out", default=None)

    enumerate_ = sub.add_parser("enumerate", help="realize a whole region of triples")
    enumerate_.add_argument("--sigma-min", type=int, required=True, dest="sigma_min")
    enumerate_.add_argument("--b1-max", type=int, required=True, dest="b1_max")
    enumerate_.add_argument("--genus", type=int, default=None)
    enumerate_.add_argument("--format", choices=("json", "tsv"), default="tsv")
    enumerate_.add_argument("--out", default=None)

    verify = sub.add_parser("verify", help="run the dual-route identity grid")
    verify.add_argument("--grid-max", type=int, required=True, dest="grid_max")
    verify.add_argument("--out", default=None)

    return parser


COMMANDS = {
    "realize": cmd_realize,
    "invariants": cmd_invariants,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
