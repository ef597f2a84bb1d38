"""Command-line front end: JSON results on stdout, SVG via the render command.

Exit codes: 0 success, 1 validation error (bad flags, malformed JSON,
parameter violations), 2 computation error (no stabilization within the
degree cap, unsupported dimension).  The environment variable
LIMSHAPE_MAX_DEGREE overrides the Hilbert-polynomial degree cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import geometry, planar
from .families import (
    GradedFamily,
    areg_estimate,
    family_from_json,
    make_ceiling_family,
    make_chain_family,
    make_doubling_family,
    make_halfplane_family,
    make_oscillating_family,
    make_power_family,
    verify_graded,
    waldschmidt_estimate,
)
from .hilbert import (
    NotStabilizedError,
    hilbert_function,
    hilbert_function_extended,
    hilbert_polynomial,
    regularity_index,
)
from .ideals import MonomialIdeal
from .rationals import format_rational, parse_rational
from .svgfig import render_graph, render_polygon, render_staircase

__all__ = ["main"]


class CliError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage to 1
        raise CliError(message)


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _point_json(p) -> list:
    return [format_rational(v) for v in p]


def _load_json_arg(text: str, what: str) -> dict:
    """Inline JSON text, or @path to read from a file."""
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"{what}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{what}: malformed JSON ({exc})") from None


def _family_from_args(args) -> GradedFamily:
    if getattr(args, "input", None):
        return family_from_json(_load_json_arg("@" + args.input, "input"))
    kind = getattr(args, "family", None)
    if not kind:
        raise CliError("family: provide --family KIND or --input FILE")
    if kind == "power":
        if not args.ideal:
            raise CliError("power family needs --ideal")
        return make_power_family(
            MonomialIdeal.from_json(_load_json_arg(args.ideal, "ideal"))
        )
    if kind == "doubling":
        return make_doubling_family(args.extra_vars)
    if kind == "halfplane":
        if args.q1 is None or args.q2 is None:
            raise CliError("halfplane family needs --q1 and --q2")
        return make_halfplane_family(_rat(args.q1), _rat(args.q2))
    if kind == "ceiling":
        if args.q is None:
            raise CliError("ceiling family needs --q")
        return make_ceiling_family(_rat(args.q))
    if kind == "chain":
        if not args.breakpoints:
            raise CliError("chain family needs --breakpoints 's0,0;s1,t1;...;0,tn'")
        pts = []
        for chunk in args.breakpoints.split(";"):
            pieces = chunk.split(",")
            if len(pieces) != 2:
                raise CliError(f"breakpoints: cannot parse pair {chunk!r}")
            pts.append((_rat(pieces[0]), _rat(pieces[1])))
        return make_chain_family(pts)
    if kind == "oscillating":
        if args.a is None or args.b is None or args.d is None:
            raise CliError("oscillating family needs --a, --b and --d")
        return make_oscillating_family(args.a, args.b, args.d)
    raise CliError(f"unknown family kind {kind!r}")


def _ideal_from_args(args) -> MonomialIdeal:
    if getattr(args, "ideal", None):
        return MonomialIdeal.from_json(_load_json_arg(args.ideal, "ideal"))
    if getattr(args, "family", None) or getattr(args, "input", None):
        if args.m is None:
            raise CliError("--m required to evaluate a family to an ideal")
        return _family_from_args(args).ideal(args.m)
    raise CliError("provide --ideal JSON or a family plus --m")


def _counts(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise CliError(f"counts: expected comma-separated integers, got {text!r}") from None


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if getattr(args, "output", None):
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"output: {exc}") from None
    else:
        sys.stdout.write(text)


def _add_family_flags(sub) -> None:
    sub.add_argument("--family", help="built-in family kind")
    sub.add_argument("--input", help="path to a family JSON file")
    sub.add_argument("--ideal", help="ideal JSON (inline or @path)")
    sub.add_argument("--extra-vars", type=int, default=0, dest="extra_vars")
    sub.add_argument("--q1")
    sub.add_argument("--q2")
    sub.add_argument("--q")
    sub.add_argument("--breakpoints")
    sub.add_argument("--a", type=int)
    sub.add_argument("--b", type=int)
    sub.add_argument("--d", type=int)


def _cmd_family_eval(args) -> dict:
    if args.m is None:
        raise CliError("--m is required")
    family = _family_from_args(args)
    return {"label": family.label, "m": args.m, "ideal": family.ideal(args.m).to_json()}


def _cmd_check_graded(args) -> dict:
    family = _family_from_args(args)
    report = verify_graded(family, args.max_m)
    return {
        "label": family.label,
        "max_m": report.max_m,
        "checked_pairs": report.checked_pairs,
        "ok": report.ok,
        "violations": [
            {"p": v.p, "q": v.q, "witness": list(v.witness)} for v in report.violations
        ],
    }


def _cmd_hf(args) -> dict:
    ideal = _ideal_from_args(args)
    out: dict = {"ideal": ideal.to_json()}
    if args.degree is None and args.t is None:
        raise CliError("hf: provide --degree or --t")
    if args.degree is not None:
        out["degree"] = args.degree
        out["value"] = hilbert_function(ideal, args.degree)
    else:
        t = _rat(args.t)
        out["t"] = format_rational(t)
        out["value"] = hilbert_function_extended(ideal, t)
    if args.hp:
        poly = hilbert_polynomial(ideal)
        out["hilbert_polynomial"] = str(poly)
        out["regularity_index"] = regularity_index(ideal)
    return out


def _cmd_shape(args) -> dict:
    family = _family_from_args(args)
    t = _rat(args.t)
    delta = geometry.limiting_shape(family, t, args.max_m)
    gamma = geometry.gamma_limit(family, t, args.max_m)
    out = {
        "label": family.label,
        "t": format_rational(t),
        "exact": delta.exact,
        "delta_vertices": delta.polygon.to_json() if delta.polygon else [],
        "gamma_vertices": gamma.polygon.to_json() if gamma.polygon else [],
        "gamma_area": format_rational(gamma.area),
    }
    if delta.exact:
        out["staircase_vertices"] = [
            _point_json(p) for p in delta.staircase_vertices
        ]
        out["waldschmidt"] = format_rational(geometry.waldschmidt_from_shape(delta))
        out["areg"] = format_rational(geometry.areg_from_shape(delta))
    return out


def _cmd_waldschmidt(args) -> dict:
    family = _family_from_args(args)
    if family.exact_shape is not None:
        t = max(x + y for x, y in family.exact_shape.vertices) + 1
        value = geometry.waldschmidt_from_shape(geometry.limiting_shape(family, t))
        return {"label": family.label, "method": "shape", "value": format_rational(value)}
    est = waldschmidt_estimate(family, args.max_m)
    return {
        "label": family.label,
        "method": "estimate",
        "value": format_rational(est.inf_value),
        "max_m": args.max_m,
        "values": [[m, format_rational(v)] for m, v in est.values],
    }


def _cmd_areg(args) -> dict:
    family = _family_from_args(args)
    if family.exact_shape is not None:
        t = max(x + y for x, y in family.exact_shape.vertices) + 1
        value = geometry.areg_from_shape(geometry.limiting_shape(family, t))
        return {"label": family.label, "method": "shape", "value": format_rational(value)}
    est = areg_estimate(family, args.max_m)
    out = {
        "label": family.label,
        "method": "estimate",
        "max_m": args.max_m,
        "liminf": format_rational(est.liminf),
        "limsup": format_rational(est.limsup),
        "oscillating": est.oscillating,
        "diverging": est.diverging,
        "tolerance": format_rational(est.tolerance),
    }
    if est.residue_values:
        out["residue_values"] = [
            [r, format_rational(v)] for r, v in est.residue_values
        ]
    return out


def _cmd_ahf(args) -> dict:
    family = _family_from_args(args)
    result = geometry.ahf(family, _rat(args.t), args.max_m)
    return {
        "label": family.label,
        "t": format_rational(result.t),
        "value": format_rational(result.value),
        "exact": result.exact,
        "samples": [
            [m, count, format_rational(ratio)] for m, count, ratio in result.samples
        ],
    }


def _planar_graph(args) -> planar.PLGraph:
    if not getattr(args, "counts", None):
        raise CliError("--counts is required")
    counts = _counts(args.counts)
    if args.shared:
        if len(counts) != 2:
            raise CliError("shared-intersection configurations have exactly two counts")
        return planar.two_line_vertices(counts[0], counts[1])
    return planar.dhf_vertices_closed_form(counts)


def _cmd_planar_reduce(args) -> dict:
    config = planar.validate_configuration(_counts(args.counts), args.shared)
    if args.m is None:
        raise CliError("--m is required")
    vec = planar.reduction_vector(config, args.m, approximate=args.approximate)
    graph = planar.dhf_envelope(vec)
    return {
        "counts": list(config.counts),
        "shared_intersection": config.shared_intersection,
        "m": vec.multiplicity,
        "exact": vec.exact,
        "entries": list(vec.entries),
        "envelope": [_point_json(p) for p in graph.vertices],
    }


def _cmd_planar_vertices(args) -> dict:
    graph = _planar_graph(args)
    counts = _counts(args.counts)
    return {
        "counts": list(counts),
        "shared_intersection": bool(args.shared),
        "vertices": [_point_json(p) for p in graph.vertices],
    }


def _cmd_render(args) -> str:
    if args.kind == "staircase":
        ideal = _ideal_from_args(args)
        if args.m is None or args.t is None:
            raise CliError("render staircase needs --m and --t")
        return render_staircase(ideal, args.m, _rat(args.t))
    if args.kind == "graph":
        return render_graph(_planar_graph(args))
    if args.kind == "gamma":
        graph = _planar_graph(args)
        t = _rat(args.t) if args.t is not None else None
        return render_polygon(planar.gamma_vertices(graph, t), hatched=True)
    if args.kind == "shape":
        family = _family_from_args(args)
        if args.t is None:
            raise CliError("render shape needs --t")
        result = geometry.limiting_shape(family, _rat(args.t), args.max_m)
        if result.polygon is None:
            raise CliError("family has no polygonal shape to render")
        return render_polygon(result.polygon, hatched=False)
    raise CliError(f"unknown render kind {args.kind!r}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="limshape", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("family-eval", help="evaluate a family at one index")
    _add_family_flags(sub)
    sub.add_argument("--m", type=int)
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_family_eval)

    sub = subs.add_parser("check-graded", help="verify I_p*I_q <= I_{p+q}")
    _add_family_flags(sub)
    sub.add_argument("--max-m", type=int, default=6, dest="max_m")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_check_graded)

    sub = subs.add_parser("hf", help="Hilbert function values")
    _add_family_flags(sub)
    sub.add_argument("--m", type=int)
    sub.add_argument("--degree", type=int)
    sub.add_argument("--t")
    sub.add_argument("--hp", action="store_true", help="include polynomial and index")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_hf)

    sub = subs.add_parser("shape", help="limiting shape and complement polygons")
    _add_family_flags(sub)
    sub.add_argument("--t", required=True)
    sub.add_argument("--max-m", type=int, default=16, dest="max_m")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_shape)

    sub = subs.add_parser("waldschmidt", help="Waldschmidt constant")
    _add_family_flags(sub)
    sub.add_argument("--max-m", type=int, default=20, dest="max_m")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_waldschmidt)

    sub = subs.add_parser("areg", help="asymptotic regularity")
    _add_family_flags(sub)
    sub.add_argument("--max-m", type=int, default=20, dest="max_m")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_areg)

    sub = subs.add_parser("ahf", help="asymptotic Hilbert function")
    _add_family_flags(sub)
    sub.add_argument("--t", required=True)
    sub.add_argument("--max-m", type=int, default=16, dest="max_m")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_ahf)

    sub = subs.add_parser("planar-reduce", help="reduction vector and envelope")
    sub.add_argument("--counts", required=True)
    sub.add_argument("--shared", action="store_true")
    sub.add_argument("--m", type=int)
    sub.add_argument("--approximate", action="store_true")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_planar_reduce)

    sub = subs.add_parser("planar-vertices", help="closed-form graph vertices")
    sub.add_argument("--counts", required=True)
    sub.add_argument("--shared", action="store_true")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_planar_vertices)

    sub = subs.add_parser("render", help="emit an SVG figure")
    sub.add_argument("--kind", required=True, choices=["staircase", "graph", "gamma", "shape"])
    _add_family_flags(sub)
    sub.add_argument("--m", type=int)
    sub.add_argument("--t")
    sub.add_argument("--counts")
    sub.add_argument("--shared", action="store_true")
    sub.add_argument("--max-m", type=int, default=16, dest="max_m")
    sub.add_argument("--output")
    sub.set_defaults(handler=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.handler(args)
        _emit(args, payload)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotStabilizedError, geometry.UnsupportedDimensionError, RuntimeError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
