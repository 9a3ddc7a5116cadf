"""Command-line front end: ``wrtwist <subcommand> ...``.

Exit status is 0 on success and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classify, geodesic, markoff
from .errors import WRTwistError
from .field import FieldCtx, QuadInt, format_quadint, fraction_str, new_field
from .ideals import Ideal, ideal_from_canonical, min_nonzero_abs_norm, unit_ideal
from .twists import (TwistClass, all_well_rounded_twists, cos_theta, extend_to_good_bases, f4_value,
                     sphere_packing_radius)


def _pair(text: str, n: int) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _ideal_arg(text: str) -> tuple[int, ...]:
    return _pair(text, 3)


def _elem_arg(text: str) -> tuple[int, ...]:
    return _pair(text, 2)


def _ideal(ctx: FieldCtx, triple) -> Ideal:
    if triple is None:
        return unit_ideal(ctx)
    return ideal_from_canonical(ctx, *triple)


def _frac(f: Fraction) -> str:
    return fraction_str(Fraction(f))


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _twist_json(t: TwistClass) -> dict:
    w = t.witness
    return {
        "f4": t.f4,
        "f4_values": list(t.f4_values),
        "cos_theta": _frac(t.cos_theta),
        "abs_cos": _frac(t.abs_cos),
        "kind": t.kind,
        "witness": {"x": [w.x.a, w.x.c], "y": [w.y.a, w.y.c]},
        "beta": {"num": [t.beta.num.a, t.beta.num.c], "den": t.beta.den},
        "alpha": t.alpha,
        "alpha_product": t.alpha_product,
        "packing_radius": sphere_packing_radius(t.cos_theta),
    }


def _header(ctx: FieldCtx, I: Ideal) -> str:
    w = "(1+sqrt(D))/2" if ctx.tr_omega else "sqrt(D)"
    return f"# D={ctx.D} w={w} ideal=({I.a},{I.b},{I.d}) norm={I.norm}"


def cmd_field(args) -> int:
    ctx = new_field(args.D)
    data = {
        "D": ctx.D,
        "disc": ctx.disc,
        "tr_omega": ctx.tr_omega,
        "norm_omega": ctx.norm_omega,
        "fund_unit": [ctx.fund_unit.a, ctx.fund_unit.c],
        "fund_unit_norm": ctx.fund_unit_norm,
        "regulator": ctx.regulator,
    }
    if args.json:
        _emit_json(data)
    else:
        print(f"D            {ctx.D}")
        print(f"disc         {ctx.disc}")
        print(f"Tr(w)        {ctx.tr_omega}")
        print(f"N(w)         {ctx.norm_omega}")
        print(f"eps          {format_quadint(ctx.fund_unit)}")
        print(f"N(eps)       {ctx.fund_unit_norm}")
        print(f"regulator    {ctx.regulator!r}")
    return 0


def cmd_twists(args) -> int:
    ctx = new_field(args.D)
    I = _ideal(ctx, args.ideal)
    tw = all_well_rounded_twists(I)
    if args.json:
        _emit_json({"D": ctx.D, "ideal": list(I.triple), "count": len(tw),
                    "twists": [_twist_json(t) for t in tw]})
    elif args.csv:
        print("abs_cos,cos_theta,f4,kind,x,y,alpha")
        for t in tw:
            w = t.witness
            print(f"{_frac(t.abs_cos)},{_frac(t.cos_theta)},{t.f4},{t.kind},"
                  f"{format_quadint(w.x)},{format_quadint(w.y)},{t.alpha!r}")
    else:
        print(_header(ctx, I))
        print(f"{'|cos|':>10} {'cos':>10} {'f4':>8} {'kind':<11} witness")
        for t in tw:
            w = t.witness
            print(f"{str(t.abs_cos):>10} {str(t.cos_theta):>10} {t.f4:>8} {t.kind:<11} "
                  f"{{{format_quadint(w.x)}, {format_quadint(w.y)}}}")
    return 0


def cmd_extend(args) -> int:
    ctx = new_field(args.D)
    I = _ideal(ctx, args.ideal)
    x = QuadInt(*args.x)
    pairs = extend_to_good_bases(I, x)
    if args.json:
        _emit_json({"D": ctx.D, "ideal": list(I.triple), "x": [x.a, x.c],
                    "bases": [{"y": [p.y.a, p.y.c], "f4": f4_value(p), "cos_theta": _frac(cos_theta(p))}
                              for p in pairs]})
    else:
        print(_header(ctx, I))
        if not pairs:
            print(f"{format_quadint(x)} extends to no good basis")
        for p in pairs:
            print(f"{{{format_quadint(p.x)}, {format_quadint(p.y)}}}  f4={f4_value(p)}  cos={cos_theta(p)}")
    return 0


def cmd_geodesic(args) -> int:
    ctx = new_field(args.D)
    I = _ideal(ctx, args.ideal)
    tr = geodesic.trace_geodesic(I, args.samples)
    text = tr.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    info = sys.stderr if not args.out else sys.stdout
    classes = tr.crossing_classes()
    print(f"# period exponent {tr.period_exponent}, closed={tr.closed}, "
          f"crossing classes {len(classes)}: " + " ".join(f"{c:.7f}" for c in classes), file=info)
    return 0


def _markoff_rows(triples):
    rows = []
    for t in triples:
        if t.c % 2 == 0:
            continue
        k, _ = markoff.markoff_k_ell(t)
        row = {"triple": list(t), "D": markoff.markoff_discriminant(t), "k": k}
        try:
            row["ideal"] = list(markoff.markoff_ideal(t).ideal.triple)
        except WRTwistError:
            row["ideal"] = None
        if t.c > 1:
            b1, b2 = markoff.markoff_good_bases(t)
            row.update(beta1=b1.beta, cos1=_frac(b1.cos_theta), beta2=b2.beta, cos2=_frac(b2.cos_theta))
        else:
            row.update(beta1=None, cos1="0/1", beta2=None, cos2=None)
        m = markoff.markoff_mpd(t)
        row.update(n_lambda=m.n_lambda, equals_s_hat=m.equals_s_hat, maximal_order=m.maximal_order)
        rows.append(row)
    return rows


def cmd_markoff(args) -> int:
    if args.family == "fibonacci":
        triples = markoff.fibonacci_triples(args.count)
    elif args.family == "pell":
        triples = markoff.pell_triples(args.count)
    else:
        triples = markoff.markoff_tree(args.max)
    rows = _markoff_rows(triples)
    if args.json:
        _emit_json(rows)
    else:
        print(f"{'triple':<24} {'k':>6} {'ideal':<18} {'beta1':>5} {'cos1':>14} {'beta2':>5} {'cos2':>14} n_lambda")
        for r in rows:
            ideal = "-" if r["ideal"] is None else ",".join(map(str, r["ideal"]))
            print(f"{str(tuple(r['triple'])):<24} {r['k']:>6} {ideal:<18} {str(r['beta1']):>5} "
                  f"{str(r['cos1']):>14} {str(r['beta2']):>5} {str(r['cos2']):>14} {r['n_lambda']:.10f}")
    return 0


def cmd_classify(args) -> int:
    agree = disagree = bn_disagree = 0
    unique = []
    bad = []
    for rep in classify.survey(2, args.max_D):
        ok = rep.unique_orthogonal == rep.special_form == rep.reg_equality
        agree += ok
        if not ok:
            disagree += 1
            bad.append(rep.D)
        if any(t.cos_theta == 0 for t in rep.twists) != (rep.fund_unit_norm == -1):
            bn_disagree += 1
        if rep.unique_orthogonal:
            unique.append(rep.D)
    summary = {"max_D": args.max_D, "fields": agree + disagree, "equivalence_agree": agree,
               "equivalence_disagree": bad, "orthogonal_vs_unit_norm_disagree": bn_disagree,
               "unique_orthogonal": unique}
    if args.json:
        _emit_json(summary)
    else:
        print(f"fields checked             {agree + disagree}")
        print(f"three-way agreement        {agree}")
        print(f"disagreements              {' '.join(map(str, bad)) or 'none'}")
        print(f"orthogonal vs N(eps) = -1  {bn_disagree} disagreements")
        print(f"only-orthogonal fields     {' '.join(map(str, unique))}")
    return 0 if not bad and not bn_disagree else 1


def cmd_survey(args) -> int:
    fmt = args.format
    if args.json:
        fmt = "json"
    if fmt == "csv":
        cols = ["D", "disc", "regulator", "reg_lower_bound", "reg_equality", "special_form",
                "fund_unit_norm", "twist_count", "f4_classes", "p_k", "unique_orthogonal", "s_k", "s_hat_k"]
        print(",".join(cols))
        for rep in classify.survey(args.min_D, args.max_D):
            row = rep.row()
            print(",".join(repr(row[c]) if isinstance(row[c], float) else str(row[c]) for c in cols), flush=False)
    else:
        for rep in classify.survey(args.min_D, args.max_D):
            sys.stdout.write(json.dumps(rep.row()) + "\n")
    return 0


def cmd_mpd(args) -> int:
    ctx = new_field(args.D)
    I = _ideal(ctx, args.ideal)
    m = min_nonzero_abs_norm(I)
    data = {"D": ctx.D, "ideal": list(I.triple), "min_abs_norm": m,
            "mpd": classify.mpd(I), "mpd_squared": _frac(classify.mpd_squared(I)),
            "s_k": classify.s_k_bound(ctx.disc), "s_hat_k": classify.s_hat_k(ctx.disc)}
    if args.json:
        _emit_json(data)
    else:
        for k, v in data.items():
            print(f"{k:<14} {v}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wrtwist", description="Well-rounded twists of real quadratic ideal lattices")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field", help="field constants")
    s.add_argument("D", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_field)

    s = sub.add_parser("twists", help="all well-rounded twists of an ideal lattice")
    s.add_argument("D", type=int)
    s.add_argument("--ideal", type=_ideal_arg, metavar="a,b,d")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_twists)

    s = sub.add_parser("extend", help="extend an element to good bases")
    s.add_argument("D", type=int)
    s.add_argument("--x", type=_elem_arg, required=True, metavar="a,c")
    s.add_argument("--ideal", type=_ideal_arg, metavar="a,b,d")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("geodesic", help="sample the geodesic of twists as CSV")
    s.add_argument("D", type=int)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--out")
    s.add_argument("--ideal", type=_ideal_arg, metavar="a,b,d")
    s.set_defaults(func=cmd_geodesic)

    s = sub.add_parser("markoff", help="Markoff lattices and their twists")
    s.add_argument("--max", type=int, default=200)
    s.add_argument("--family", choices=["fibonacci", "pell"])
    s.add_argument("--count", type=int, default=6)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_markoff)

    s = sub.add_parser("classify", help="check the only-orthogonal-twist classification")
    s.add_argument("--max-D", type=int, default=1000)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("survey", help="one row per square-free D")
    s.add_argument("--min-D", type=int, default=2)
    s.add_argument("--max-D", type=int, required=True)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("mpd", help="minimum product distance of an ideal lattice")
    s.add_argument("D", type=int)
    s.add_argument("--ideal", type=_ideal_arg, metavar="a,b,d")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_mpd)
    return p


def _validate(args) -> None:
    for name in ("samples", "max", "count", "max_D", "min_D"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise WRTwistError(f"--{name.replace('_', '-')} must be positive, got {v}")
    if getattr(args, "samples", None) is not None and args.samples < 2:
        raise WRTwistError(f"--samples must be at least 2, got {args.samples}")
    if args.command == "survey" and args.min_D > args.max_D:
        raise WRTwistError(f"--min-D {args.min_D} exceeds --max-D {args.max_D}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except WRTwistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
