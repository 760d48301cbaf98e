"""Command-line front end.

Exit status: 0 on success, 1 on a domain error, 2 on a usage or syntax
error.  Diagnostics go to stderr and always start with the error name.
"""
import argparse
import json
import sys

from . import decimals, laws, microscope, sequences
from .errors import HypergermError, IoError, NotationError
from .germ import Classification, Hypernat, classify, compare, parse_germ, st


def _sum_note(total):
    if classify(total) is Classification.INFINITE:
        return "sum is infinite"
    limit = st(total)
    gap = limit - total
    if gap.is_zero():
        return f"sum is exactly {limit}"
    if gap.sign() > 0:
        return f"shortfall is infinitesimal (st = {limit}, shortfall = {gap})"
    return f"excess is infinitesimal (st = {limit}, excess = {-gap})"


def _split_point(text):
    label, sep, expr = text.partition("=")
    return (label.strip(), expr) if sep else (text.strip(), text)


def cmd_eval(args):
    return str(parse_germ(args.expr))


def cmd_cmp(args):
    return str(compare(parse_germ(args.x), parse_germ(args.y)))


def cmd_st(args):
    return str(st(parse_germ(args.expr)))


def cmd_classify(args):
    return str(classify(parse_germ(args.expr)))


def cmd_sum(args):
    total = sequences.hyperfinite_sum(sequences.parse_sequence(args.term), Hypernat.parse(args.upper))
    return {"value": str(total), "note": _sum_note(total)}


def cmd_ultralimit(args):
    return str(sequences.ultralimit(sequences.parse_sequence(args.seq)))


def cmd_lightstone(args):
    if args.value:
        return str(decimals.extended_value(decimals.parse_extended(args.expr)))
    return decimals.render_lightstone(parse_germ(args.expr))


MAX_DIGITS = 10_000


def cmd_digits(args):
    start, stop = Hypernat.parse(args.start), Hypernat.parse(args.stop)
    if start.a != stop.a or start.c > stop.c or (start.a == 0 and start.c < 1):
        raise argparse.ArgumentTypeError("need START <= STOP, both at the same scale, ranks >= 1")
    if stop.c - start.c >= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"at most {MAX_DIGITS} digits per request")
    x = parse_germ(args.expr)
    if start.a == 0:
        return "".join(str(decimals.digit_at(x, k)) for k in range(start.c, stop.c + 1))
    # hyper ranks are answered only through the rendered segments
    expansion = decimals.parse_extended(decimals.render_lightstone(x))
    return "".join(str(expansion.digit(Hypernat(start.a, c))) for c in range(start.c, stop.c + 1))


def cmd_microscope(args):
    points = [(label, parse_germ(expr)) for label, expr in map(_split_point, args.points)]
    view = microscope.MicroscopeView(parse_germ(args.center), parse_germ(args.unit), points)
    placements = microscope.place(view, resolve_blur=args.resolve_blur)
    ascii_art = microscope.render_ascii(placements, args.width)
    if args.svg:
        try:
            microscope.render_svg(placements, args.svg)
        except OSError as exc:
            raise IoError(str(exc)) from None
    return {"placements": [p.describe() for p in placements], "ascii": ascii_art}


COMMANDS = {
    "eval": cmd_eval,
    "cmp": cmd_cmp,
    "st": cmd_st,
    "classify": cmd_classify,
    "sum": cmd_sum,
    "ultralimit": cmd_ultralimit,
    "lightstone": cmd_lightstone,
    "digits": cmd_digits,
    "microscope": cmd_microscope,
}


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _unsigned(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def _width(text):
    value = int(text)
    if value < 20:
        raise argparse.ArgumentTypeError("width must be at least 20")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default: text)")
    parser = argparse.ArgumentParser(
        prog="hypergerm", description="Exact arithmetic on a computable fragment of the hyperreals.")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("eval", parents=[common], help="print the canonical form of a germ")
    p.add_argument("expr")
    p = sub.add_parser("cmp", parents=[common], help="compare two germs")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("st", parents=[common], help="standard part of a limited germ")
    p.add_argument("expr")
    p = sub.add_parser("classify", parents=[common], help="Zero, Infinitesimal, NonzeroLimited or Infinite")
    p.add_argument("expr")
    p = sub.add_parser("sum", parents=[common], help="hyperfinite sum of a term in n from 1 to UPPER")
    p.add_argument("term")
    p.add_argument("upper", help="affine hypernatural such as H, H-1 or 2*H+3")
    p = sub.add_parser("ultralimit", parents=[common], help="substitute H for n")
    p.add_argument("seq")
    p = sub.add_parser("lightstone", parents=[common], help="extended decimal of a germ")
    p.add_argument("expr")
    p.add_argument("--value", action="store_true",
                   help="read EXPR as extended decimal text and print its germ instead")
    p = sub.add_parser("digits", parents=[common], help="decimal digits over a rank range")
    p.add_argument("expr")
    p.add_argument("--start", default="1", help="first rank: a positive integer or H+c")
    p.add_argument("--stop", default="10", help="last rank, at the same scale as START")
    p = sub.add_parser("microscope", parents=[common], help="place points in the halo of CENTER")
    p.add_argument("center")
    p.add_argument("unit")
    p.add_argument("points", nargs="*", metavar="[LABEL=]EXPR")
    p.add_argument("--width", type=_width, default=60)
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--resolve-blur", action="store_true",
                   help="separate points that coincide with the center, using unit^2")
    p = sub.add_parser("laws", parents=[common], help="run the seeded ordered-field and st law suites")
    p.add_argument("--seed", type=_unsigned, default=0)
    p.add_argument("--cases", type=_positive, default=1000)
    p.add_argument("--law", action="append", choices=[law.name for law in laws.ALL_LAWS],
                   help="restrict to the named law (repeatable)")
    return parser


def _emit_text(result, out):
    if isinstance(result, dict) and "ascii" in result:
        out.write("\n".join(result["placements"]) + "\n" + result["ascii"])
    elif isinstance(result, dict):
        out.write(f"{result['value']}\nnote: {result['note']}\n")
    else:
        out.write(f"{result}\n")


def _run_laws(args, out):
    selected = [law for law in laws.ALL_LAWS if not args.law or law.name in args.law]
    results = laws.run_laws(args.seed, args.cases, laws=selected)
    for r in results:
        if args.format == "json":
            payload = {"subcommand": "laws", "input": {"seed": args.seed, "cases": args.cases},
                       "result": r.as_dict()}
            out.write(json.dumps(payload) + "\n")
        else:
            out.write(r.format() + "\n")
    return 0 if all(r.passed for r in results) else 1


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.subcommand == "laws":
        return _run_laws(args, out)

    inputs = {k: v for k, v in vars(args).items() if k not in ("subcommand", "format")}
    try:
        result = COMMANDS[args.subcommand](args)
    except (HypergermError, argparse.ArgumentTypeError) as exc:
        if isinstance(exc, NotationError):
            name, status = exc.name, 2
            err.write(f"{name}: {exc}\n{exc.pointer()}\n")
        elif isinstance(exc, argparse.ArgumentTypeError):
            name, status = "UsageError", 2
            err.write(f"{name}: {exc}\n")
        else:
            name, status = exc.name, 1
            err.write(f"{name}: {exc}\n")
        if args.format == "json":
            payload = {"subcommand": args.subcommand, "input": inputs,
                       "error": {"name": name, "message": str(exc)}}
            out.write(json.dumps(payload) + "\n")
        return status
    if args.format == "json":
        out.write(json.dumps({"subcommand": args.subcommand, "input": inputs, "result": result}) + "\n")
    else:
        _emit_text(result, out)
    return 0
