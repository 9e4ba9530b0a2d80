"""Command-line front end.

Exit status: 0 on success, 1 on a usage error (bad flags, unparsable base or
complex literal), 2 on a domain error (bad digit, arithmetic in a base that
does not support it, division by zero, ...).

Negative positional values must follow ``--``::

    imagbase convert --to 2i -- -5+7i

Base options take negative values directly (``--to -6i``).
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from .alphabet import DigitAlphabet
from .arithmetic import add, div, long_divide_neg, mul, sub
from .bases import Family, parse_base
from .beta import expand_real
from .codec import CodecConfig, decode, encode
from .complexnum import ExactComplex, format_complex, parse_complex
from .errors import NumeralError
from .imaginary import UNITIES, compare_parts, expand_complex
from .integer import int_to_base
from .numeral import eval_numeral, format_numeral, parse_numeral
from .reals import PrecisionContext

DIVISION_MAX_FRAC = 16
BASE_OPTIONS = {"--to", "--from", "--base", "--source", "--target"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _base_arg(text):
    try:
        return parse_base(text)
    except NumeralError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=256)
    common.add_argument("--max-frac-digits", type=int, default=None,
                        help="fractional digit cap (default 32; 16 for div)")
    common.add_argument("--json", action="store_true", help="print a JSON record")

    parser = _Parser(prog="imagbase", description="Exact arithmetic in real and imaginary bases.")
    sub_p = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub_p.add_parser("convert", parents=[common], help="write a value in a base")
    p.add_argument("--to", dest="base", type=_base_arg, required=True)
    p.add_argument("--from", dest="source", type=_base_arg, default=None,
                   help="read VALUE as a numeral in this base instead of a complex literal")
    p.add_argument("value")

    p = sub_p.add_parser("eval", parents=[common], help="value of a numeral")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("numeral")

    for name in ("add", "sub", "mul", "div"):
        p = sub_p.add_parser(name, parents=[common], help=f"{name} two numerals")
        p.add_argument("--base", type=_base_arg, required=True)
        p.add_argument("a")
        p.add_argument("b")

    p = sub_p.add_parser("compare", parents=[common], help="compare real or imaginary parts")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("--part", choices=("real", "imag"), default="real")
    p.add_argument("a")
    p.add_argument("b")

    for name in ("encode", "decode"):
        p = sub_p.add_parser(name, parents=[common], help=f"{name} text")
        p.add_argument("--source", type=_base_arg, required=True, help="base the plain text is read in")
        p.add_argument("--target", type=_base_arg, required=True, help="base of the cipher text")
        p.add_argument("--alphabet", default=None, help="digit order, a permutation of 0-9A-Z")
        p.add_argument("text")

    p = sub_p.add_parser("unity", parents=[common], help="digit pattern of 1, -1, i or -i")
    p.add_argument("--base", type=_base_arg, required=True)
    p.add_argument("value", choices=sorted(UNITIES))

    sub_p.add_parser("batch", help="run one request per stdin line")
    return parser


def _ctx(args, default_frac=32):
    frac = args.max_frac_digits if args.max_frac_digits is not None else default_frac
    try:
        return PrecisionContext(args.precision_bits, frac)
    except NumeralError as exc:
        raise UsageError(str(exc))


def _value_text(z: ExactComplex, exact: bool) -> str:
    if exact:
        return format_complex(z)
    re = float(z.re)
    im = float(z.im)
    return f"{re!r}{im:+}i" if im else repr(re)


def _convert(args):
    ctx = _ctx(args)
    if args.source is not None:
        value = eval_numeral(parse_numeral(args.value, args.source), ctx)
        exact_input = args.source.is_exact
    else:
        value = _complex_arg_or_usage(args.value)
        exact_input = True
    base = args.base
    if base.family is Family.IMAGINARY:
        res = expand_complex(value, base, ctx)
        numeral, exact = res.numeral, res.terminated
    else:
        if value.im:
            raise NumeralError(f"{format_complex(value)} is not real; base {base} cannot hold it")
        if value.re.denominator == 1 and base.family in (Family.POS_INT, Family.NEG_INT):
            numeral, exact = int_to_base(int(value.re), base), True
        else:
            res = expand_real(value.re, base, ctx)
            numeral, exact = res.numeral, res.terminated
    return {"input": args.value, "base": str(base), "result": format_numeral(numeral),
            "exact": exact and exact_input and base.is_exact}


def _complex_arg_or_usage(text):
    try:
        return parse_complex(text)
    except NumeralError as exc:
        raise UsageError(str(exc))


def _eval(args):
    ctx = _ctx(args)
    n = parse_numeral(args.numeral, args.base)
    exact = args.base.is_exact
    return {"input": args.numeral, "base": str(args.base),
            "result": _value_text(eval_numeral(n, ctx), exact), "exact": exact}


def _arith(args):
    a = parse_numeral(args.a, args.base)
    b = parse_numeral(args.b, args.base)
    record = {"input": [args.a, args.b], "base": str(args.base)}
    if args.command == "div":
        frac = args.max_frac_digits if args.max_frac_digits is not None else DIVISION_MAX_FRAC
        if args.base.family is Family.NEG_INT:
            res = long_divide_neg(a, b, frac)
        else:
            res = div(a, b, frac)
        record.update(result=format_numeral(res.quotient), exact=res.exact,
                      remainder=format_numeral(res.remainder))
        return record
    op = {"add": add, "sub": sub, "mul": mul}[args.command]
    record.update(result=format_numeral(op(a, b)), exact=True)
    return record


def _compare(args):
    a = parse_numeral(args.a, args.base)
    b = parse_numeral(args.b, args.base)
    order = compare_parts(a, b, args.part)
    return {"input": [args.a, args.b], "base": str(args.base), "part": args.part,
            "result": "<=>"[order + 1], "exact": True}


def _codec(args):
    alphabet = DigitAlphabet(args.alphabet) if args.alphabet else DigitAlphabet()
    cfg = CodecConfig(args.source, args.target, alphabet, _ctx(args))
    fn = encode if args.command == "encode" else decode
    return {"input": args.text, "base": f"{args.source}->{args.target}",
            "result": fn(args.text, cfg), "exact": True}


def _unity(args):
    n = UNITIES[args.value](args.base)
    return {"input": args.value, "base": str(args.base), "result": format_numeral(n), "exact": True}


HANDLERS = {
    "convert": _convert, "eval": _eval, "add": _arith, "sub": _arith, "mul": _arith,
    "div": _arith, "compare": _compare, "encode": _codec, "decode": _codec, "unity": _unity,
}


def _glue_base_values(argv):
    # argparse would read "--to -6i" as two options
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--":
            out.append(tok)
            out.extend(it)
            break
        if tok in BASE_OPTIONS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
            continue
        out.append(tok)
    return out


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(_glue_base_values(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    if args.command == "batch":
        status = 0
        for line in stdin:
            if line.strip():
                status = max(status, run(shlex.split(line), stdin, stdout, stderr))
        return status
    try:
        record = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except NumeralError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.json:
        print(json.dumps(record), file=stdout)
    else:
        print(record["result"], file=stdout)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
