"""Command-line front end: ``subspace-codes <command> [options]``.

Exit statuses:

    0  success
    1  I/O error (unreadable input, unwritable output)
    2  usage error (missing or invalid parameters)
    3  parse error in an input file
    4  resource error (enumeration cap exceeded)
    5  decode failure (``decode`` printed ``FAILURE``)
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from . import __version__
from .bounds import asymptotic_curves, bound_report, covering_bound, delta_grid, greedy_gv_code
from .code import KKCode, min_distance
from .errors import ParameterError, ParseError, PreconditionError, ResourceError
from .formats import (
    atomic_write,
    format_csv,
    format_message,
    format_subspace,
    format_subspace_list,
    parse_message,
    parse_subspace,
)
from .rng import DEFAULT_SEED
from .simulation import grid, simulate, summarize, trial_log_csv
from .subspace import enumerate_grassmannian

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_RESOURCE = 4
EXIT_DECODE_FAILURE = 5

FAILURE_TOKEN = "FAILURE"


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}") from None


def _add_code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("code parameters")
    g.add_argument("--q", type=int, default=2, help="base field size, prime (default: 2)")
    g.add_argument("--m", type=int, default=3, help="extension degree (default: 3)")
    g.add_argument("--l", type=int, default=3, help="codeword dimension |A| (default: 3)")
    g.add_argument("--k", type=int, default=1, help="message length in F_{q^m} symbols (default: 1)")
    g.add_argument("--modulus", type=_int_list, help="modulus coefficients, lowest degree first")
    g.add_argument("--eval-set", type=_int_list, help="evaluation set A as integer-encoded elements")


def _code_from(args) -> KKCode:
    return KKCode.create(args.q, args.m, args.l, args.k, modulus=args.modulus, evaluation_set=args.eval_set)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        atomic_write(path, text)


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command}: missing required option(s) {', '.join(missing)}")


# -- commands ------------------------------------------------------------------


def cmd_bounds(args) -> int:
    if args.asymptotic:
        _require(args, "lam")
        points = asymptotic_curves(args.lam, delta_grid(args.points))
        text = format_csv(
            ("delta", "packing", "covering", "singleton"),
            ((repr(p.delta), repr(p.packing), repr(p.covering), repr(p.singleton)) for p in points),
        )
        _emit(text, args.csv)
        return EXIT_OK

    _require(args, "N", "l")
    n, l, q = args.N, args.l, args.q
    dmax = 2 * min(l, n - l)
    if dmax < 2:
        raise UsageError(f"P(F_{q}^{n}, {l}) has a single element; no distance to bound")
    top = dmax if args.D is None else args.D
    if top < 2 or top % 2 or top > dmax:
        raise UsageError(f"--D must be even in [2, {dmax}], got {top}")
    reports = [bound_report(n, l, d, q) for d in range(2, top + 1, 2)]
    columns = ("N", "l", "q", "D", "packing", "covering", "singleton")
    rows = [[r.row()[c] for c in columns] for r in reports]
    widths = [max(len(c), *(len(str(row[i])) for row in rows)) for i, c in enumerate(columns)]
    table = "  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n"
    for row in rows:
        table += "  ".join(str(v).rjust(w) for v, w in zip(row, widths)) + "\n"
    if args.csv:
        atomic_write(args.csv, format_csv(columns, rows))
    sys.stdout.write(table)
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _code_from(args)
    msg = parse_message(_read(args.input), k=code.k, order=code.field.order)
    _emit(format_subspace(code.encode(msg)), args.output)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _code_from(args)
    received = parse_subspace(_read(args.input))
    if (received.q, received.n) != (code.q, code.n):
        raise ParameterError(
            f"received space is in F_{received.q}^{received.n}, code expects F_{code.q}^{code.n}"
        )
    msg = code.decode(received)
    if msg is None:
        _emit(FAILURE_TOKEN + "\n", args.output)
        return EXIT_DECODE_FAILURE
    _emit(format_message(msg), args.output)
    return EXIT_OK


def cmd_simulate(args) -> int:
    code = _code_from(args)
    max_weight = code.l - code.k + 1 if args.max_weight is None else args.max_weight
    records, skipped = simulate(code, grid(max_weight), args.trials, args.seed)
    if args.csv:
        atomic_write(args.csv, trial_log_csv(records))
    p = code.params()
    out = [
        f"code [N={p.n}, l={p.l}, log_q|C|={p.logq_size}, D={p.distance}] "
        f"q={code.q} m={code.m} k={code.k} seed={args.seed} trials={args.trials}",
        f"{'rho':>3}  {'t':>3}  {'trials':>6}  {'ok':>6}  {'rate':>6}  guaranteed",
    ]
    for s in summarize(records):
        guaranteed = "yes" if s.rho + s.t <= code.l - code.k else "no"
        out.append(f"{s.rho:>3}  {s.t:>3}  {s.trials:>6}  {s.successes:>6}  {s.rate:>6.4f}  {guaranteed}")
    for rho, t in skipped:
        out.append(f"{rho:>3}  {t:>3}  skipped (infeasible for N={code.n}, l={code.l})")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spaces = enumerate_grassmannian(args.q, args.N, args.l)
    _emit(format_subspace_list(spaces), args.output)
    return EXIT_OK


def cmd_gvcode(args) -> int:
    code = greedy_gv_code(args.N, args.l, args.t, args.q, rng=args.seed)
    bound = covering_bound(args.N, args.l, args.t, args.q).exact
    _emit(format_subspace_list(code), args.output)
    dist = min_distance(code) if len(code) > 1 else None
    summary = (
        f"gvcode q={args.q} N={args.N} l={args.l} t={args.t} seed={args.seed}: "
        f"size {len(code)} (covering bound {bound}), min distance {dist}\n"
    )
    (sys.stdout if args.output not in (None, "-") else sys.stderr).write(summary)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subspace-codes",
        description="Subspace codes for random linear network coding.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="packing, covering and Singleton bounds")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--N", type=int, help="ambient dimension")
    p.add_argument("--l", type=int, help="codeword dimension")
    p.add_argument("--D", type=int, help="report every even distance up to D (default: the maximum)")
    p.add_argument("--asymptotic", action="store_true", help="emit the normalized rate curves as CSV")
    p.add_argument("--lambda", dest="lam", type=float, help="l/N for --asymptotic, in (0, 1/2]")
    p.add_argument("--points", type=int, default=101, help="delta grid size for --asymptotic (default: 101)")
    p.add_argument("--csv", metavar="PATH", help="also write the table as CSV")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("encode", help="encode a message file into a codeword subspace")
    _add_code_args(p)
    p.add_argument("--input", required=True, help="message file ('-' for stdin)")
    p.add_argument("--output", help="codeword file (default: stdout)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received subspace")
    _add_code_args(p)
    p.add_argument("--input", required=True, help="subspace file ('-' for stdin)")
    p.add_argument("--output", help="message file (default: stdout)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo decoding over a (rho, t) grid")
    _add_code_args(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-weight", type=int, help="largest rho + t in the grid (default: l - k + 1)")
    p.add_argument("--csv", metavar="PATH", help="write the per-trial log")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("enumerate", help="list every l-dim subspace of F_q^N")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gvcode", help="greedy code with minimum distance >= 2t")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gvcode)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParameterError, PreconditionError) as exc:
        print(f"subspace-codes {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"subspace-codes {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"subspace-codes {args.command}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"subspace-codes {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
