"""Command-line front end with deterministic JSON/CSV reporting.

Numeric flags that demand exactness parse as rationals written p/q; report
floats print with 12 significant digits. Two runs on identical inputs produce
byte-identical reports: sets are dumped in ascending coefficient order and
JSON keys are sorted.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from .boxes import (
    AdditiveBoxQuery,
    LogBoxQuery,
    check_ball_bounds,
    enum_additive_box,
    enum_unit_box,
    separation_check,
    slab_volume,
)
from .construct import build_GP, build_mult_only, verify_gp_envelopes, verify_mult_envelopes
from .errors import GrowthLabError
from .field import BUILTIN_FIELDS, FieldSpec, make_field
from .funcfield import build_A_ff, build_G_ff, build_P_ff, ff_growth_report
from .gf import GF
from .linrel import SolutionQuery, count_solutions, pigeonhole_report
from .residue import find_split_primes, reduce_set
from .sets import ElementSet, PolyAmbient, PrimeFieldAmbient, RingAmbient, growth_report


def _rational(text):
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _round12(x):
    if isinstance(x, float):
        return float(f"{x:.12g}")
    return x


def _canonical(obj):
    if isinstance(obj, dict):
        return {k: _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    return _round12(obj)


def _emit(args, payload):
    text = json.dumps(_canonical(payload), sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_field(name_or_path):
    if name_or_path in BUILTIN_FIELDS:
        return make_field(FieldSpec.builtin(name_or_path))
    return make_field(FieldSpec.from_json(Path(name_or_path).read_text()))


# -- set files -----------------------------------------------------------------------


def _set_to_payload(element_set):
    amb = element_set.ambient
    return {"ambient": amb.describe(), "elements": [list(e) if isinstance(e, tuple) else e
                                                    for e in element_set.sorted()]}


def write_set_file(path, element_set):
    Path(path).write_text(json.dumps(_canonical(_set_to_payload(element_set)),
                                     sort_keys=True, indent=2) + "\n")


def read_set_file(path):
    obj = json.loads(Path(path).read_text())
    amb = obj["ambient"]
    kind = amb["kind"]
    if kind == "ring":
        ctx = make_field(FieldSpec(tuple(amb["coeffs"]), name=amb.get("name")))
        return ElementSet(RingAmbient(ctx), (tuple(e) for e in obj["elements"]))
    if kind == "fp":
        return ElementSet(PrimeFieldAmbient(amb["p"]), obj["elements"])
    if kind == "poly":
        return ElementSet(PolyAmbient(amb["q"], amb["cap"]), (tuple(e) for e in obj["elements"]))
    raise GrowthLabError(f"unknown ambient kind {kind!r}")


# -- subcommands -----------------------------------------------------------------------


def _cmd_field(args):
    ctx = _load_field(args.field)
    payload = {
        "name": ctx.spec.name,
        "coeffs": list(ctx.spec.coeffs),
        "degree": ctx.degree,
        "disc": ctx.disc,
        "rootIntervals": [[iv.lo, iv.hi] for iv in (ctx.root_interval(i) for i in range(1, ctx.degree + 1))],
    }
    _emit(args, payload)


def _cmd_box(args):
    ctx = _load_field(args.field)
    report = check_ball_bounds(ctx, args.kind, args.radius)
    payload = report.as_dict()
    if args.kind == "unit":
        units = enum_unit_box(LogBoxQuery(ctx, args.radius))
        sep = separation_check(ctx, units)
        payload["separation"] = {"checked": sep.checked, "trivial": sep.trivial,
                                 "witnessed": len(sep.witnesses), "violations": 0}
        if args.elements:
            payload["elements"] = [list(e) for e in units.sorted()]
    else:
        box = enum_additive_box(AdditiveBoxQuery(ctx, args.radius, center=args.center))
        if args.center:
            payload["count"] = box.size
            payload["lowerOk"] = payload["upperOk"] = None  # bounds stated for center 0
        if args.elements:
            payload["elements"] = [list(e) for e in box.sorted()]
    _emit(args, payload)


def _cmd_slab(args):
    _emit(args, slab_volume(args.d, args.r).as_dict())


def _cmd_construct(args):
    ctx = _load_field(args.field)
    if args.mult_only:
        units = build_mult_only(ctx, args.Y)
        envelopes = verify_mult_envelopes(ctx, units, args.Y, args.k).as_dict()
        payload = {"sizes": {"A": units.size}, "envelopes": envelopes}
        dumped = units
    else:
        construction = build_GP(ctx, args.X, args.r, args.Y)
        envelopes = verify_gp_envelopes(construction).as_dict()
        payload = {
            "sizes": construction.sizes,
            "directProduct": construction.direct_product,
            "envelopes": envelopes,
        }
        dumped = construction.product
    if args.dump:
        write_set_file(args.dump, dumped)
        payload["dump"] = args.dump
    _emit(args, payload)


def _cmd_report(args):
    element_set = read_set_file(args.input)
    rep = growth_report(element_set)
    _emit(args, rep.as_dict())
    if args.emit_plot_data:
        set_id = args.set_id or Path(args.input).stem
        path = Path(args.plot_file)
        is_new = not path.exists()
        with path.open("a", newline="") as fh:
            writer = csv.writer(fh)
            if is_new:
                writer.writerow(["setId", "n", "sumSize", "prodSize",
                                 "deltaPlus", "deltaTimes", "solymosi"])
            writer.writerow([set_id, rep.n, rep.sum_size, rep.prod_size,
                             f"{rep.delta_plus:.12g}", f"{rep.delta_times:.12g}",
                             f"{rep.solymosi:.12g}"])


def _cmd_residue(args):
    ctx = _load_field(args.field)
    element_set = read_set_file(args.set)
    witnesses = find_split_primes(ctx, args.pmin, 1)
    if not witnesses:
        raise GrowthLabError(f"no split prime found at or above {args.pmin}")
    witness = witnesses[0]
    reduced = reduce_set(element_set, witness, args.root_index)
    payload = {
        "p": witness.p,
        "roots": list(witness.roots),
        "rootIndex": args.root_index,
        "injective": reduced.injective,
        "imageSize": reduced.image.size,
        "logRatio": math.log(element_set.size) / math.log(witness.p),
        "fpReport": growth_report(reduced.image).as_dict() if reduced.image.size >= 2 else None,
    }
    _emit(args, payload)


def _cmd_ff(args):
    a = build_A_ff(args.q, args.dP, args.dG)
    p_set = build_P_ff(args.q, args.dP)
    g_set = build_G_ff(args.q, args.dG)
    rep = ff_growth_report(a)
    payload = {
        "sizes": {"P": p_set.size, "G": g_set.size, "A": a.size},
        "identities": {
            "pgIdentity": a.size * (args.q - 1) == p_set.size * g_set.size,
            "pFormula": p_set.size,
            "gFormula": g_set.size,
        },
        "envelopes": rep.as_dict(),
    }
    if args.dump:
        with Path(args.dump).open("w", newline="") as fh:
            writer = csv.writer(fh)
            for vec in a.sorted():
                writer.writerow(vec)
        payload["dump"] = args.dump
    _emit(args, payload)


def _cmd_bounds(args):
    k = bounds_mod.ExplicitConstants(c1=args.c1, C2=args.C2, c3=args.c3, C4=args.C4)
    if args.bounds_cmd == "coeffs":
        payload = bounds_mod.coefficient_bundle(k).as_dict()
        payload["eps"] = bounds_mod.derived_eps(k)
        _emit(args, payload)
    elif args.bounds_cmd == "optimize":
        result = bounds_mod.optimize_c(k)
        _emit(args, result.as_dict())
    elif args.bounds_cmd == "ff":
        cond = bounds_mod.ff_exponent_conditions(args.q, args.alpha, args.beta)
        _emit(args, cond.as_dict())
    elif args.bounds_cmd == "table":
        rows = bounds_mod.exponent_table()
        if args.csv:
            out = ["q,alpha,beta,a,b"]
            for q, alpha, beta, a_rhs, b_rhs in rows:
                out.append(f"{q},{alpha},{beta},{a_rhs:.12g},{b_rhs:.12g}")
            text = "\n".join(out) + "\n"
            if args.out:
                Path(args.out).write_text(text)
            else:
                sys.stdout.write(text)
        else:
            _emit(args, {"rows": [list(r) for r in rows]})


def _cmd_linrel(args):
    ctx = _load_field(args.field)
    units = build_mult_only(ctx, args.Y)
    query = SolutionQuery(
        elements=units,
        k=args.k,
        target=args.target,
        positive_embedding=args.positive,
        nondegenerate_only=args.nondegenerate,
    )
    count = count_solutions(query)
    ph = pigeonhole_report(units, args.k)
    payload = {"unitBoxSize": units.size, "count": count,
               "maxFiber": ph.max_fiber, "bound": ph.bound}
    _emit(args, payload)


def build_parser():
    parser = argparse.ArgumentParser(prog="growthlab",
                                     description="exact growth measurements for structured sets")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker cap for enumerations (results never depend on it)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="validate a field and report its invariants")
    p.add_argument("--field", required=True)
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("box", help="enumerate an additive or unit box")
    p.add_argument("--field", required=True)
    p.add_argument("--kind", choices=["additive", "unit"], required=True)
    p.add_argument("--radius", type=_rational, required=True)
    p.add_argument("--center", type=int, default=0)
    p.add_argument("--elements", action="store_true")
    p.set_defaults(func=_cmd_box)

    p = sub.add_parser("slab", help="exact central slab volume of the cube")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=_rational, default=Fraction(1))
    p.set_defaults(func=_cmd_slab)

    p = sub.add_parser("construct", help="assemble A = G*P or a unit box")
    p.add_argument("--field", required=True)
    p.add_argument("--X", type=int)
    p.add_argument("--r", type=_rational)
    p.add_argument("--Y", type=_rational, required=True)
    p.add_argument("--mult-only", action="store_true")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--dump", help="write the assembled set to this JSON file")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("report", help="growth report for a dumped set")
    p.add_argument("--input", required=True)
    p.add_argument("--emit-plot-data", action="store_true")
    p.add_argument("--plot-file", default="plot-data.csv")
    p.add_argument("--set-id")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("residue", help="reduce a set modulo a split prime")
    p.add_argument("--field", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--pmin", type=int, required=True)
    p.add_argument("--root-index", type=int, default=0)
    p.set_defaults(func=_cmd_residue)

    p = sub.add_parser("ff", help="genus-0 section-space construction over F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--dP", type=int, required=True)
    p.add_argument("--dG", type=int, required=True)
    p.add_argument("--dump", help="write coefficient rows to this CSV file")
    p.set_defaults(func=_cmd_ff)

    p = sub.add_parser("bounds", help="explicit-constant pipeline")
    p.add_argument("--c1", type=float, default=3.819)
    p.add_argument("--C2", type=float, default=857.57)
    p.add_argument("--c3", type=float, default=0.618)
    p.add_argument("--C4", type=float, default=4.16)
    bsub = p.add_subparsers(dest="bounds_cmd", required=True)
    bsub.add_parser("coeffs")
    bsub.add_parser("optimize")
    pf = bsub.add_parser("ff")
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--alpha", type=float, required=True)
    pf.add_argument("--beta", type=float, required=True)
    pt = bsub.add_parser("table")
    pt.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("linrel", help="count k-term unit-sum solutions")
    p.add_argument("--field", required=True)
    p.add_argument("--Y", type=_rational, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", type=int, default=1)
    p.add_argument("--positive", type=int, nargs="?", const=0, default=None,
                   help="positivity filter; optional embedding index, default largest root")
    p.add_argument("--nondegenerate", action="store_true")
    p.set_defaults(func=_cmd_linrel)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except GrowthLabError as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stdout.write(json.dumps(error, sort_keys=True) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
