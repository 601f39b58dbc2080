"""Command-line front end.

Every subcommand prints a single JSON object on stdout (the default) or a
plain table with ``--table``.  Rationals are rendered as ``p/q`` strings,
counts as plain integers.  Domain errors exit with code 1 and a JSON error
object on stderr; usage errors exit with code 2.  Inputs prefixed with ``@``
are read from the named file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import degrees as degrees_mod
from . import lattice as lattice_mod
from .errors import LctkitError
from .initial import TermOrder, initial_ideal, lc_semidecide, local_dim, truncated_image
from .newton import (
    contains,
    diagonal_crossing,
    lct,
    multiplier_ideal_plus,
    multiplier_ideal_strict,
    newton_polyhedron,
    primitive_integer_normal,
)
from .parsing import (
    infer_variables,
    monomial_ideal_to_string,
    parse_monomial_ideal,
    parse_polynomial,
    polynomial_to_string,
)
from .rationals import INFINITY, format_rational, parse_rational
from .registry import registry_entries, registry_lookup
from .rigidity import rigidity_check
from .singularity import classify, colength, threshold_verdict_json
from .verify import (
    VerificationReport,
    default_variables,
    verify_colength_theorem,
    verify_multiplier_lemmas,
)


def _resolve_input(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8").strip()
    return value


def _variables(args, text: str) -> tuple[str, ...]:
    if getattr(args, "vars", None):
        return tuple(name.strip() for name in args.vars.split(",") if name.strip())
    inferred = infer_variables(text)
    if not inferred:
        raise LctkitError("cannot infer variables; pass --vars")
    return inferred


def _parse_ideal_arg(args):
    text = _resolve_input(args.ideal)
    variables = _variables(args, text)
    return parse_monomial_ideal(text, variables), variables


def _parse_generators(args) -> tuple[list, tuple[str, ...]]:
    texts = []
    for chunk in args.poly:
        resolved = _resolve_input(chunk)
        texts.extend(line for line in resolved.splitlines() if line.strip())
    joined = " ".join(texts)
    variables = _variables(args, joined)
    return [parse_polynomial(t, variables) for t in texts], variables


def _term_order(args) -> TermOrder:
    if getattr(args, "order", "lexlow") == "weight":
        if not getattr(args, "weights", None):
            raise LctkitError("--order weight requires --weights")
        weights = [int(w) for w in args.weights.split(",")]
        return TermOrder.weight(weights)
    return TermOrder.lexlow()


def _emit(args, payload: dict) -> None:
    if args.table:
        for line in _tabulate(payload):
            print(line)
    else:
        print(json.dumps(payload))


def _tabulate(payload: dict, indent: str = ""):
    for key, value in payload.items():
        if isinstance(value, dict):
            yield f"{indent}{key}:"
            yield from _tabulate(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            yield f"{indent}{key}:"
            for item in value:
                yield from _tabulate(item, indent + "  ")
                yield f"{indent}  -"
        else:
            yield f"{indent}{key}: {value}"


def _cmd_parse(args) -> dict:
    if args.poly is not None:
        text = _resolve_input(args.poly)
        variables = _variables(args, text)
        poly = parse_polynomial(text, variables)
        return {
            "kind": "polynomial",
            "variables": list(variables),
            "terms": [
                {"exponents": list(vec), "coefficient": format_rational(coeff)}
                for vec, coeff in sorted(poly.terms.items())
            ],
            "canonical": polynomial_to_string(poly, variables),
        }
    ideal, variables = _parse_ideal_arg(args)
    return {
        "kind": "monomial-ideal",
        "variables": list(variables),
        "generators": [list(g) for g in ideal.generators],
        "canonical": monomial_ideal_to_string(ideal, variables),
    }


def _cmd_lct(args) -> dict:
    ideal, _ = _parse_ideal_arg(args)
    crossing = diagonal_crossing(newton_polyhedron(ideal))
    if crossing is None:
        payload = {"lct": "infinity", "xi": format_rational(0), "normal": None}
    else:
        normal = primitive_integer_normal(crossing.canonical_normal)
        payload = {
            "lct": format_rational(1 / crossing.xi),
            "xi": format_rational(crossing.xi),
            "normal": [str(v) for v in normal],
        }
    if args.c is not None:
        payload.update(threshold_verdict_json(classify(ideal, parse_rational(args.c))))
    return payload


def _cmd_newton(args) -> dict:
    ideal, variables = _parse_ideal_arg(args)
    poly = newton_polyhedron(ideal)
    payload = {
        "dim": poly.dim,
        "vertex_candidates": [list(g) for g in poly.vertex_candidates],
        "canonical": monomial_ideal_to_string(ideal, variables),
    }
    if args.point is not None:
        point = [parse_rational(v) for v in args.point.split(",")]
        payload["point"] = [format_rational(v) for v in point]
        payload["contains"] = contains(poly, point)
    return payload


def _cmd_multiplier(args) -> dict:
    ideal, variables = _parse_ideal_arg(args)
    c = parse_rational(args.c)
    compute = multiplier_ideal_strict if args.strict else multiplier_ideal_plus
    result = compute(ideal, c)
    return {
        "c": format_rational(c),
        "variant": "strict" if args.strict else "upper",
        "generators": [list(g) for g in result.generators],
        "canonical": monomial_ideal_to_string(result, variables),
        "trivial": result.is_unit(),
    }


def _cmd_colength(args) -> dict:
    ideal, _ = _parse_ideal_arg(args)
    value = colength(ideal)
    return {"colength": "infinity" if value is INFINITY else value}


def _cmd_initial(args) -> dict:
    generators, variables = _parse_generators(args)
    order = _term_order(args)
    if args.trunc is not None:
        image = truncated_image(generators, args.trunc, order)
        ideal, certificate = initial_ideal(generators, order, args.trunc)
        standard_count = len(image.standard)
    else:
        result = local_dim(generators, order=order, cap=args.max_trunc)
        ideal, certificate = result.initial, result.certificate
        standard_count = result.dimension
    return {
        "initial": monomial_ideal_to_string(ideal, variables),
        "generators": [list(g) for g in ideal.generators],
        "standard_count": standard_count,
        "certificate": {
            "truncation_degree": certificate.truncation_degree,
            "max_standard_degree": certificate.max_standard_degree,
            "status": certificate.status,
        },
    }


def _cmd_semidecide(args) -> dict:
    generators, variables = _parse_generators(args)
    order = _term_order(args)
    result = lc_semidecide(
        generators, parse_rational(args.c), order=order, cap=args.max_trunc
    )
    return {
        "verdict": result.verdict,
        "initial": monomial_ideal_to_string(result.initial, variables),
        "certificate": {
            "truncation_degree": result.certificate.truncation_degree,
            "max_standard_degree": result.certificate.max_standard_degree,
            "status": result.certificate.status,
        },
    }


def _cmd_lattice(args) -> dict:
    normal = [parse_rational(v) for v in args.a.split(",")]
    spec = lattice_mod.SimplexSpec(tuple(normal))
    n = spec.dim
    return {
        "count": lattice_mod.simplex_count(spec),
        "bound_pairing": format_rational(lattice_mod.pairing_bound(n)),
        "bound_pairing_attained": format_rational(lattice_mod.pairing_bound_attained(n)),
        "bound_cyclic": format_rational(lattice_mod.cyclic_bound(n)),
        "bound_combined": format_rational(lattice_mod.combined_bound(n)),
    }


def _cmd_bounds(args) -> dict:
    if args.crossover:
        rows = lattice_mod.crossover_table(args.n)
        return {
            "rows": [
                {
                    "n": row.n,
                    "bound_pairing": format_rational(row.bound_pairing),
                    "bound_cyclic": format_rational(row.bound_cyclic),
                    "larger": row.larger,
                    "recorded_claim": row.recorded_claim,
                    "agrees": row.agrees,
                }
                for row in rows
            ]
        }
    n = args.n
    return {
        "n": n,
        "bound_pairing": format_rational(lattice_mod.pairing_bound(n)),
        "bound_pairing_attained": format_rational(lattice_mod.pairing_bound_attained(n)),
        "bound_cyclic": format_rational(lattice_mod.cyclic_bound(n)),
        "bound_combined": format_rational(lattice_mod.combined_bound(n)),
    }


def _cmd_rigidity(args) -> dict:
    return rigidity_check(args.n).to_json_dict()


def _cmd_degrees(args) -> dict:
    if args.op == "bezout":
        multipliers = [int(v) for v in args.m.split(",")] if args.m else []
        return {"op": "bezout", "degree": degrees_mod.bezout_degree(args.d, multipliers)}
    if args.op == "intersection":
        value = degrees_mod.intersection_number(args.deg_z, args.deg_w, args.deg_x)
        return {"op": "intersection", "value": format_rational(value)}
    if args.op == "mult-bound":
        value = degrees_mod.mult_bound(args.deg_w, args.deg_x)
        return {"op": "mult-bound", "bound": format_rational(value)}
    value = degrees_mod.residual_degree(args.d, args.deg_z, args.r)
    return {"op": "residual", "degree": value}


def _cmd_verify(args) -> dict:
    reports: list[VerificationReport] = []
    if args.suite in ("colength", "all"):
        if args.suite == "all":
            reports.append(verify_colength_theorem(2, 4))
            reports.append(verify_colength_theorem(3, 3))
        else:
            reports.append(verify_colength_theorem(args.n, args.box))
    if args.suite in ("multiplier", "all"):
        if args.suite == "all":
            reports.append(verify_multiplier_lemmas(2, 4))
        else:
            reports.append(verify_multiplier_lemmas(args.n, args.box))
    combined = reports[0]
    for report in reports[1:]:
        combined = combined.merge(report)
    payload = combined.to_json_dict()
    payload["ok"] = not combined.failures
    return payload


def _cmd_registry(args) -> dict:
    if args.name is None:
        return {"entries": [entry.to_json_dict() for entry in registry_entries()]}
    parameters = None
    if args.m:
        parameters = {"m": [int(v) for v in args.m.split(",")]}
    elif args.param:
        parameters = {}
        for chunk in args.param:
            key, _, value = chunk.partition("=")
            parameters[key] = int(value) if value.lstrip("-").isdigit() else value
    entry = registry_lookup(args.name, parameters)
    return entry.to_json_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lctkit",
        description="Exact singularity invariants of monomial data: thresholds, "
        "Newton polyhedra, multiplier ideals, colengths, initial ideals, "
        "lattice bounds, and the rigidity arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
        p.add_argument("--table", action="store_true", help="human-readable output")
        return p

    p = add("parse", _cmd_parse, "parse a polynomial or monomial ideal")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", "-p")
    group.add_argument("--ideal", "-i")
    p.add_argument("--vars")

    p = add("lct", _cmd_lct, "log canonical threshold of a monomial ideal")
    p.add_argument("--ideal", "-i", required=True)
    p.add_argument("--vars")
    p.add_argument("--c", help="also classify this coefficient")

    p = add("newton", _cmd_newton, "Newton polyhedron data and membership")
    p.add_argument("--ideal", "-i", required=True)
    p.add_argument("--vars")
    p.add_argument("--point", help="comma-separated rational coordinates")

    p = add("multiplier", _cmd_multiplier, "upper (or strict) multiplier ideal")
    p.add_argument("--ideal", "-i", required=True)
    p.add_argument("--vars")
    p.add_argument("--c", required=True)
    p.add_argument("--strict", action="store_true", help="interior membership variant")

    p = add("colength", _cmd_colength, "staircase colength of a monomial ideal")
    p.add_argument("--ideal", "-i", required=True)
    p.add_argument("--vars")

    p = add("initial", _cmd_initial, "initial ideal via truncated elimination")
    p.add_argument("--poly", "-p", action="append", required=True)
    p.add_argument("--vars")
    p.add_argument("--order", choices=["lexlow", "weight"], default="lexlow")
    p.add_argument("--weights")
    p.add_argument("--trunc", type=int, help="fixed truncation degree")
    p.add_argument("--max-trunc", type=int, default=64)

    p = add("semidecide", _cmd_semidecide, "one-sided log canonicity test")
    p.add_argument("--poly", "-p", action="append", required=True)
    p.add_argument("--vars")
    p.add_argument("--c", required=True)
    p.add_argument("--order", choices=["lexlow", "weight"], default="lexlow")
    p.add_argument("--weights")
    p.add_argument("--max-trunc", type=int, default=64)

    p = add("lattice", _cmd_lattice, "simplex lattice count and bounds")
    p.add_argument("--a", required=True, help="comma-separated positive rationals")

    p = add("bounds", _cmd_bounds, "closed-form lattice bounds per dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--crossover", action="store_true", help="table for 1..n")

    p = add("rigidity", _cmd_rigidity, "section count vs exponential bound")
    p.add_argument("--n", type=int, required=True)

    p = add("degrees", _cmd_degrees, "degree and multiplicity arithmetic")
    p.add_argument("--op", choices=["bezout", "intersection", "mult-bound", "residual"], required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--m")
    p.add_argument("--deg-z", type=int, dest="deg_z")
    p.add_argument("--deg-w", type=int, dest="deg_w")
    p.add_argument("--deg-x", type=int, dest="deg_x")
    p.add_argument("--r", type=int)

    p = add("verify", _cmd_verify, "exhaustive desk-scale verification suites")
    p.add_argument("--suite", choices=["colength", "multiplier", "all"], required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--box", type=int, default=4)

    p = add("registry", _cmd_registry, "recorded thresholds from the literature")
    p.add_argument("--name")
    p.add_argument("--m", help="pure-power exponents, e.g. 2,3")
    p.add_argument("--param", action="append", help="key=value parameter")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except LctkitError as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        if args.table:
            print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        else:
            print(json.dumps(error), file=sys.stderr)
        return 1
    _emit(args, payload)
    if args.command == "verify" and not payload.get("ok", True):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
