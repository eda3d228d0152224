"""Command-line interface: ``rcn <verb> ...`` (also ``python -m rcn``).

Exit status is 0 on success, 2 for bad input, 1 for anything unexpected.
Data goes to stdout, diagnostics to stderr.
"""
import argparse
import json
import logging
import re
import sys
from fractions import Fraction

from rcn import lattice, tables
from rcn.arith import cents, ratio_str
from rcn.commas import Algorithm
from rcn.notation import PrintStyle, format_pitch, frequency, notate, parse, translate

logger = logging.getLogger("rcn")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _algo(text: str) -> Algorithm:
    try:
        return Algorithm.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _ratio(text: str) -> Fraction:
    try:
        r = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a ratio: {text!r} (expected NUM/DEN)")
    if r <= 0:
        raise argparse.ArgumentTypeError("frequency ratio must be positive")
    return r


def _range(text: str):
    try:
        return lattice.parse_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rcn", description="Rational comma notation for free just intonation.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def algo_opt(p, flag="--algo", dest=None):
        kw = {"dest": dest} if dest else {}
        p.add_argument(flag, type=_algo, default=Algorithm.DR, help="DR, SAG or KG2", **kw)

    def fmt_opt(p):
        p.add_argument("--format", choices=[f.value for f in tables.TableFormat], default="csv")

    def style_opt(p):
        p.add_argument("--style", choices=[s.value for s in PrintStyle], default="canonical")

    p = sub.add_parser("comma", help="prime comma for one prime")
    p.add_argument("p", type=int)
    algo_opt(p)
    fmt_opt(p)

    p = sub.add_parser("notate", help="rational frequency -> notation")
    p.add_argument("ratio", type=_ratio)
    algo_opt(p)
    style_opt(p)

    p = sub.add_parser("freq", help="notation -> rational frequency")
    p.add_argument("notation")
    algo_opt(p)
    p.add_argument("--cents", action="store_true", help="also print the size in cents")

    p = sub.add_parser("translate", help="re-notate under another comma algorithm")
    p.add_argument("notation")
    algo_opt(p, "--from", "from_algo")
    algo_opt(p, "--to", "to_algo")
    style_opt(p)

    p = sub.add_parser("table", help="regenerate a reference table")
    p.add_argument("kind", choices=["commas", "b", "firstlast", "largest", "pyth"])
    p.add_argument("--max-p", type=int, default=200)
    p.add_argument("--count", type=int, default=9, help="rows for 'largest'")
    algo_opt(p)
    fmt_opt(p)

    p = sub.add_parser("dist", help="ln(p)/p weighted distribution of b")
    p.add_argument("--from", dest="p_low", type=int, default=50000)
    p.add_argument("--to", dest="p_high", type=int, default=100000)
    algo_opt(p)
    fmt_opt(p)

    p = sub.add_parser("scan", help="candidate commas over a range of b")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--b-min", type=int, default=-20)
    p.add_argument("--b-max", type=int, default=20)
    fmt_opt(p)

    p = sub.add_parser("find-pb", help="first prime whose primary range has 13+ values")
    p.add_argument("--limit", type=int, default=400000)

    p = sub.add_parser("lattice", help="pitch-class lattice export")
    p.add_argument("--limit", type=int, choices=[5, 7], default=5)
    p.add_argument("--fifths", type=_range, default=(-4, 4))
    p.add_argument("--thirds", type=_range, default=(-2, 2))
    p.add_argument("--sevenths", type=_range, default=None)
    algo_opt(p)
    p.add_argument("--format", choices=["csv", "json", "dot"], default="csv")
    return ap


def _run(args) -> str:
    if args.verb == "comma":
        t = tables.Table("comma", tables.gen_prime_comma_table(5).columns,
                         [tables.prime_comma_row(args.p, args.algo)], dict(tables.COMMA_FORMATS))
        return t.render(args.format)
    if args.verb == "notate":
        return format_pitch(notate(args.ratio, args.algo), args.style) + "\n"
    if args.verb == "freq":
        r = frequency(parse(args.notation), args.algo)
        return ratio_str(r) + (f" {cents(r):.2f}" if args.cents else "") + "\n"
    if args.verb == "translate":
        out = translate(parse(args.notation), args.from_algo, args.to_algo)
        return format_pitch(out, args.style) + "\n"
    if args.verb == "table":
        return _table(args)
    if args.verb == "dist":
        return tables.b_distribution(args.p_low, args.p_high, args.algo).render(args.format)
    if args.verb == "scan":
        return tables.candidate_scan(args.p, args.b_min, args.b_max).render(args.format)
    if args.verb == "find-pb":
        if args.limit < 5:
            raise ValueError("--limit must be at least 5")
        pb = tables.find_pb(args.limit)
        return (f"{pb}\n" if pb is not None else f"not found below {args.limit}\n")
    if args.verb == "lattice":
        sevenths = args.sevenths or (0, 0)
        spec = lattice.LatticeSpec(args.limit, args.fifths, args.thirds, sevenths, args.algo)
        return lattice.export(spec, args.format)
    raise AssertionError(args.verb)


def _table(args) -> str:
    if args.kind == "pyth":
        parts = tables.pyth_tables()
        if args.format == "json":
            return json.dumps({k: t.to_records() for k, t in parts.items()}, indent=1) + "\n"
        return "\n".join(f"# {k}\n{t.render(args.format)}" for k, t in parts.items())
    if args.max_p < 5 and args.kind in ("firstlast", "largest"):
        raise ValueError("--max-p must be at least 5")
    make = {
        "commas": lambda: tables.gen_prime_comma_table(args.max_p, args.algo),
        "b": lambda: tables.gen_b_table(args.max_p, args.algo),
        "firstlast": lambda: tables.first_last_prime_per_b(args.max_p, args.algo),
        "largest": lambda: tables.largest_commas(args.max_p, args.count, args.algo),
    }[args.kind]
    return make().render(args.format)


_RANGE_FLAGS = ("--fifths", "--thirds", "--sevenths")
_RANGE_VALUE = re.compile(r"^-?\d+\.\.-?\d+$")


def _glue_ranges(argv):
    # argparse reads "-2..2" as an option; attach it as --flag=-2..2
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _RANGE_FLAGS and i + 1 < len(argv) and _RANGE_VALUE.match(argv[i + 1]):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = _glue_ranges(sys.argv[1:] if argv is None else list(argv))
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"rcn: error: {e}", file=sys.stderr)
        return 2
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        sys.stdout.write(_run(args))
    except ValueError as e:
        print(f"rcn: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        print(f"rcn: internal error: {e!r}", file=sys.stderr)
        logger.debug("traceback", exc_info=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
