"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
failure, 3 a verification found a failing identity.
"""

import argparse
import json
import os
import sys
from functools import lru_cache

from .dirac_almansi import (
    almansi_decompose,
    fischer_decompose,
    harmonic_split,
    monogenic_basis,
)
from .errors import PreconditionError
from .operator_calculus import DeltaSeries, series_from_text
from .oscillator import (
    GaugeContext,
    hamiltonian_gauge,
    hermite_basic,
    hermite_eigenvalue,
    oscillator_almansi,
)
from .rational import rational
from .textform import PolyParseError, parse_poly, print_poly
from .umbral_core import (
    DELTA_KINDS,
    VARIANTS,
    GeneratingFunctionMismatch,
    UmbralContext,
    basic_polynomial,
    generating_check,
)
from .verify import MODELS, SUITES, verify_relations

# Inputs above this degree are refused rather than left to run for hours.
MAX_INPUT_DEGREE = 60
MAX_DIMENSION = 8
SEED_RANGE = (-(1 << 63), 1 << 64)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _rational_flag(text):
    try:
        return rational(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _pos_int(text):
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _seed(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not SEED_RANGE[0] <= v < SEED_RANGE[1]:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _k_flag(text):
    if text == "auto":
        return None
    return _pos_int(text)


def _alpha_flag(text):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"multi-index must be comma-separated integers, got {text!r}")
    if any(a < 0 for a in parts):
        raise argparse.ArgumentTypeError("multi-index entries must be non-negative")
    return tuple(parts)


def _delta_flag(text):
    if text in DELTA_KINDS:
        return text
    if text.startswith("custom:"):
        try:
            return DeltaSeries.from_series(series_from_text(text[len("custom:"):]))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"bad custom delta: {exc}")
    raise argparse.ArgumentTypeError(
        f"delta must be one of {', '.join(DELTA_KINDS)} or custom:[a0,a1,...], got {text!r}")


def _context_flags(p):
    p.add_argument("--n", type=_pos_int, required=True, help="number of variables")
    p.add_argument("--delta", type=_delta_flag, default="derivative",
                   help="derivative|forward|backward|central|custom:[a0,a1,...]")
    p.add_argument("--h", type=_rational_flag, default=rational(1), help="step, int or p/q")
    p.add_argument("--variant", choices=VARIANTS, default="plain")


def _format_flag(p, default):
    p.add_argument("--format", choices=("table", "json"), default=default)


def _input_flags(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--expr", help="polynomial text")
    g.add_argument("--input", help="file holding one polynomial, or the polynomial text itself")


def build_parser():
    parser = _Parser(prog="umbral", description="Exact umbral Clifford analysis on polynomials.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("basic-poly", help="basic polynomial V_alpha")
    _context_flags(p)
    p.add_argument("--alpha", type=_alpha_flag, required=True)
    _format_flag(p, "table")

    p = sub.add_parser("decompose", help="Almansi decomposition")
    _context_flags(p)
    _input_flags(p)
    p.add_argument("--k", type=_k_flag, default=None, help="number of parts, or auto")
    _format_flag(p, "json")

    p = sub.add_parser("fischer", help="Fischer decomposition of an E'-homogeneous polynomial")
    _context_flags(p)
    _input_flags(p)
    _format_flag(p, "json")

    p = sub.add_parser("kernel", help="basis of monogenics of given degree")
    _context_flags(p)
    p.add_argument("--degree", type=_nonneg_int, required=True)
    _format_flag(p, "table")

    p = sub.add_parser("harmonic-split", help="split a harmonic polynomial into f1 + x' f0")
    _context_flags(p)
    _input_flags(p)
    _format_flag(p, "json")

    p = sub.add_parser("verify", help="run an identity suite on random polynomials")
    _context_flags(p)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--model", choices=MODELS, default="direct")
    _verify_flags(p)

    p = sub.add_parser("generating", help="check the exponential generating function")
    _context_flags(p)
    p.add_argument("--order", type=_nonneg_int, required=True)
    _format_flag(p, "table")

    p = sub.add_parser("oscillator", help="harmonic oscillator tools")
    osc = p.add_subparsers(dest="osc_command", parser_class=_Parser)
    osc.required = True
    q = osc.add_parser("verify")
    _context_flags(q)
    q.add_argument("--suite", choices=("sl2", "osp"), required=True)
    q.add_argument("--model", choices=MODELS, default="direct")
    _verify_flags(q)
    q = osc.add_parser("decompose")
    _context_flags(q)
    _input_flags(q)
    q.add_argument("--k", type=_k_flag, default=None)
    _format_flag(q, "json")
    q = osc.add_parser("hermite")
    _context_flags(q)
    q.add_argument("--alpha", type=_alpha_flag, required=True)
    _format_flag(q, "table")
    return parser


@lru_cache(maxsize=1)
def _parser():
    # parse_args keeps no state on the parser, so one instance serves every run
    return build_parser()


def _verify_flags(p):
    p.add_argument("--degree", type=_nonneg_int, default=5)
    p.add_argument("--trials", type=_pos_int, default=50)
    p.add_argument("--seed", type=_seed, default=0)
    _format_flag(p, "table")


def _context(args):
    if args.n > MAX_DIMENSION:
        raise UsageError(f"--n must be at most {MAX_DIMENSION}")
    if args.h <= 0:
        raise UsageError(f"--h must be positive, got {args.h}")
    return UmbralContext(args.n, args.delta, args.h, args.variant)


def _read_input(args, n):
    if args.expr is not None:
        text = args.expr
    elif os.path.isfile(args.input):
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {args.input}: {exc}")
    else:
        text = args.input
    p = parse_poly(text, n)
    if p.degree > MAX_INPUT_DEGREE:
        raise UsageError(f"input degree {p.degree} exceeds the limit {MAX_INPUT_DEGREE}")
    return p


def _check_alpha(alpha, n):
    if len(alpha) != n:
        raise UsageError(f"--alpha needs {n} entries, got {len(alpha)}")
    if sum(alpha) > MAX_INPUT_DEGREE:
        raise UsageError(f"|alpha| exceeds the limit {MAX_INPUT_DEGREE}")


def _emit(doc, table, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(table + "\n")


def _header(ctx):
    d = ctx.describe()
    return f"n={d['n']}  delta={d['delta']}  h={d['h']}  variant={d['variant']}"


def _almansi_table(result, name="f"):
    lines = [f"{_header(result.context)}  k={result.k}"]
    lines += [f"{name}{i} = {print_poly(p)}" for i, p in enumerate(result.components, start=1)]
    lines.append(f"monogenic_ok: {str(result.monogenic_ok).lower()}")
    lines.append(f"reconstruction_ok: {str(result.reconstruction_ok).lower()}")
    return "\n".join(lines)


def _cmd_basic_poly(args, out):
    ctx = _context(args)
    _check_alpha(args.alpha, ctx.n)
    v = basic_polynomial(ctx, args.alpha)
    doc = dict(ctx.describe(), alpha=list(args.alpha), poly=print_poly(v))
    _emit(doc, print_poly(v), args.format, out)
    return EXIT_OK


def _cmd_decompose(args, out):
    ctx = _context(args)
    f = _read_input(args, ctx.n)
    result = almansi_decompose(ctx, f, args.k)
    _emit(result.to_json(), _almansi_table(result), args.format, out)
    return EXIT_OK


def _cmd_fischer(args, out):
    ctx = _context(args)
    f = _read_input(args, ctx.n)
    parts = fischer_decompose(ctx, f)
    degree = max(f.degree, 0)
    doc = dict(ctx.describe(), degree=degree,
               parts=[{"power": j, "poly": print_poly(m)} for j, m in enumerate(parts)])
    lines = [f"{_header(ctx)}  degree={degree}"]
    lines += [f"m{j} = {print_poly(m)}" for j, m in enumerate(parts)]
    _emit(doc, "\n".join(lines), args.format, out)
    return EXIT_OK


def _cmd_kernel(args, out):
    ctx = _context(args)
    basis = monogenic_basis(ctx, args.degree)
    doc = dict(ctx.describe(), degree=args.degree, dimension=len(basis), basis=[print_poly(b) for b in basis])
    lines = [f"{_header(ctx)}  degree={args.degree}  dimension={len(basis)}"]
    lines += [f"[{i}] {print_poly(b)}" for i, b in enumerate(basis, start=1)]
    _emit(doc, "\n".join(lines), args.format, out)
    return EXIT_OK


def _cmd_harmonic_split(args, out):
    ctx = _context(args)
    f = _read_input(args, ctx.n)
    f1, f0 = harmonic_split(ctx, f)
    doc = dict(ctx.describe(), f1=print_poly(f1), f0=print_poly(f0))
    table = f"{_header(ctx)}\nf1 = {print_poly(f1)}\nf0 = {print_poly(f0)}"
    _emit(doc, table, args.format, out)
    return EXIT_OK


def _cmd_verify(args, out):
    ctx = _context(args)
    report = verify_relations(ctx, args.suite, degree=args.degree, trials=args.trials,
                              seed=args.seed, model=args.model)
    _emit(report.to_json(), report.to_table(), args.format, out)
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def _cmd_generating(args, out):
    ctx = _context(args)
    if args.order > MAX_INPUT_DEGREE:
        raise UsageError(f"--order exceeds the limit {MAX_INPUT_DEGREE}")
    table = generating_check(ctx, args.order)
    rows = [(",".join(map(str, a)), print_poly(c)) for a, c in table.items()]
    doc = dict(ctx.describe(), order=args.order, all_match=True,
               coefficients=[{"alpha": a, "coefficient": c} for a, c in rows])
    lines = [f"{_header(ctx)}  order={args.order}"]
    lines += [f"[{a}] {c}" for a, c in rows]
    lines.append("all coefficients match V_alpha / alpha!")
    _emit(doc, "\n".join(lines), args.format, out)
    return EXIT_OK


def _cmd_oscillator(args, out):
    if args.osc_command == "verify":
        return _cmd_verify(args, out)
    ctx = _context(args)
    gctx = GaugeContext(ctx)
    if args.osc_command == "decompose":
        f = _read_input(args, ctx.n)
        result = oscillator_almansi(gctx, f, args.k)
        _emit(result.to_json(), _almansi_table(result, name="g"), args.format, out)
        return EXIT_OK
    _check_alpha(args.alpha, ctx.n)
    w = hermite_basic(gctx, args.alpha)
    lam = hermite_eigenvalue(gctx, args.alpha)
    eigen_ok = hamiltonian_gauge(gctx, w) == w.scale(lam)
    doc = dict(gctx.describe(), alpha=list(args.alpha), poly=print_poly(w), eigenvalue=str(lam),
               eigen_ok=eigen_ok)
    table = f"{_header(ctx)}  model=gauge\nW = {print_poly(w)}\neigenvalue = {lam}"
    _emit(doc, table, args.format, out)
    return EXIT_OK if eigen_ok else EXIT_VERIFY


COMMANDS = {
    "basic-poly": _cmd_basic_poly,
    "decompose": _cmd_decompose,
    "fischer": _cmd_fischer,
    "kernel": _cmd_kernel,
    "harmonic-split": _cmd_harmonic_split,
    "verify": _cmd_verify,
    "generating": _cmd_generating,
    "oscillator": _cmd_oscillator,
}


def run(argv=None, out=None, err=None):
    """Run the CLI and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except PolyParseError as exc:
        err.write(f"umbral: {exc}\n")
        return EXIT_USAGE
    except GeneratingFunctionMismatch as exc:
        err.write(f"umbral: {exc}\n")
        return EXIT_VERIFY
    except PreconditionError as exc:
        err.write(f"umbral: precondition failed: {exc}\n")
        return EXIT_PRECONDITION
    except SystemExit as exc:
        # --help and friends
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        err.write(f"umbral: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
