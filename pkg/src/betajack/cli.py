"""Command line front end.

    betajack jack --lambda 2,1 --alpha sym
    betajack hurwitz --weight jacobi+ --N 4 --R 4 --beta 2 --pipeline jack
    betajack correlator --ensemble jacobi --sign + --lambda 2 --n 1 --beta 2
    betajack verify --suite all

Exit status: 0 pass, 1 verification failure, 2 usage error, 3 computational error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from .ensemble import CorrelatorRequest, JacobiParams, correlator, laguerre_correlator
from .errors import BetaJackError, ComputationError
from .hurwitz import WeightGF, hurwitz_table, make_weight
from .maps import factorization_table, jm_table, t_table
from .partitions import Partition
from .scalars import ParamContext, names_in, parse_scalar, render
from .suites import SUITES, run_suite
from .symfun import jack_in_powersum

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3

PIPELINES = ("jack", "lambda", "factorization", "jm")
WEIGHT_KINDS = ("jacobi+", "jacobi-", "laguerre+", "laguerre-")


class UsageError(Exception):
    pass


def _is_sym(text):
    return text is None or text.strip().lower() in ("sym", "symbolic")


def _split_top(text):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def parse_custom_weight(text):
    """'custom(L,M,u1,...)' -> (L, M, [expression strings])."""
    m = re.fullmatch(r"\s*custom\((.*)\)\s*", text)
    if not m:
        raise UsageError(f"bad weight {text!r}")
    items = _split_top(m.group(1))
    try:
        L, M = int(items[0]), int(items[1])
    except (ValueError, IndexError):
        raise UsageError(f"bad weight {text!r}: expected custom(L,M,u...)") from None
    us = items[2:]
    if len(us) != L + M:
        raise UsageError(f"custom weight needs {L + M} parameters, got {len(us)}")
    return L, M, us


def _threads(args):
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("BETAJACK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"BETAJACK_THREADS={env!r} is not an integer") from None
    return 1


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ----------------------------------------------------------------

def cmd_jack(args):
    lam = Partition.parse(args.lam)
    if _is_sym(args.alpha):
        alpha_text, poly = "sym", jack_in_powersum(lam)
    else:
        alpha = parse_scalar(args.alpha, ParamContext(())).to_fraction()
        alpha_text, poly = str(alpha), jack_in_powersum(lam, alpha)
    if args.format == "json":
        _emit(_dump({"lambda": str(lam), "alpha": alpha_text,
                     "terms": [{"p": str(mu), "coeff": render(c)} for mu, c in poly.items()]}),
              args.output)
    else:
        _emit(f"{poly}\n", args.output)
    return EXIT_PASS


def _hurwitz_context(args):
    if args.b is not None and args.beta is not None:
        raise UsageError("give either --b or --beta, not both")
    names = []
    if args.beta is not None:
        if _is_sym(args.beta):
            names.append("beta")
    elif _is_sym(args.b):
        names.append("b")
    custom = None
    if args.weight in WEIGHT_KINDS:
        names.append("gamma") if _is_sym(args.gamma) else None
        if args.weight.startswith("jacobi") and _is_sym(args.delta):
            names.append("delta")
    else:
        custom = parse_custom_weight(args.weight)
        for expr in custom[2]:
            for name in names_in(expr):
                if name not in names:
                    names.append(name)
    return ParamContext(tuple(names)), custom


def _value(ctx, name, text):
    return ctx.gen(name) if _is_sym(text) else parse_scalar(text, ctx)


def _build_weight(args, ctx, custom):
    if custom is not None:
        L, M, us = custom
        return WeightGF(L, M, tuple(parse_scalar(u, ctx) for u in us))
    gamma = _value(ctx, "gamma", args.gamma)
    delta = _value(ctx, "delta", args.delta) if args.weight.startswith("jacobi") else None
    return make_weight(args.weight, gamma, delta)


def cmd_hurwitz(args):
    if args.N < 0 or args.R < 0:
        raise UsageError("--N and --R must be nonnegative")
    ctx, custom = _hurwitz_context(args)
    if args.beta is not None:
        b = 2 / _value(ctx, "beta", args.beta) - 1
    else:
        b = _value(ctx, "b", args.b)
    G = _build_weight(args, ctx, custom)
    if args.pipeline in ("factorization", "jm"):
        if not (b.is_constant() and b.to_fraction() == 0):
            raise UsageError(f"pipeline {args.pipeline} only exists at b = 0")
        table = (factorization_table if args.pipeline == "factorization" else jm_table)(G, args.N, args.R)
    elif args.pipeline == "lambda":
        table = t_table(G, args.N, args.R, b)
    else:
        table = hurwitz_table(G, b, args.N, args.R)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerow(["lambda", "r", "value"])
        for entry in table.to_dict()["entries"]:
            writer.writerow([entry["lambda"], entry["r"], entry["value"]])
        _emit(buf.getvalue(), args.output)
    else:
        _emit(_dump(table.to_dict()), args.output)
    return EXIT_PASS


def cmd_correlator(args):
    lam = Partition.parse(args.lam)
    given = {"n": args.n, "beta": args.beta, "c": args.c}
    if args.ensemble == "jacobi":
        given["d"] = args.d
    elif args.d is not None:
        raise UsageError("--d only applies to the jacobi ensemble")
    ctx = ParamContext(tuple(k for k, v in given.items() if _is_sym(v)))
    vals = {k: _value(ctx, k, v) for k, v in given.items()}
    if not ctx.names:
        vals = {k: v.to_fraction() for k, v in vals.items()}
    if args.ensemble == "jacobi":
        value = correlator(CorrelatorRequest(lam, args.sign, JacobiParams(**vals)))
    else:
        value = laguerre_correlator(lam, args.sign, vals["n"], vals["beta"], vals["c"])
    _emit(_dump({"ensemble": args.ensemble, "sign": args.sign, "lambda": str(lam),
                 "parameters": {k: render(v) for k, v in vals.items()},
                 "value": render(value)}), args.output)
    return EXIT_PASS


def cmd_verify(args):
    names = SUITES if args.suite == "all" else (args.suite,)
    threads = _threads(args)
    results = [run_suite(name, args.max_size, args.R, threads) for name in names]
    failing = next((r for r in results if not r.passed), None)
    report = {
        "pass": failing is None,
        "first_failure": None if failing is None else
        {"suite": failing.suite, "case": failing.first_failure().name},
        "suites": [r.to_dict() for r in results],
    }
    _emit(_dump(report), args.output)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.suite} ({len(r.cases)} cases)", file=sys.stderr)
    return EXIT_PASS if failing is None else EXIT_FAIL


# -- parser ---------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="betajack", description=__doc__.split("\n")[0])
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $BETAJACK_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("jack", help="Jack polynomial in the power-sum basis")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--alpha", default="sym")
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("hurwitz", help="table of b-Hurwitz numbers")
    p.add_argument("--weight", required=True,
                   help="jacobi+|jacobi-|laguerre+|laguerre-|custom(L,M,u1,...)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--b", default=None, help="sym (default) or a rational")
    p.add_argument("--beta", default=None, help="sets b = 2/beta - 1")
    p.add_argument("--gamma", default="sym")
    p.add_argument("--delta", default="sym")
    p.add_argument("--pipeline", choices=PIPELINES, default="jack")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    common(p)
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("correlator", help="exact ensemble correlator")
    p.add_argument("--ensemble", choices=("jacobi", "laguerre"), required=True)
    p.add_argument("--sign", choices=("+", "-"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    for name in ("n", "beta", "c"):
        p.add_argument(f"--{name}", default="sym")
    p.add_argument("--d", default=None)
    common(p)
    p.set_defaults(func=cmd_correlator)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--R", type=int, default=6)
    p.add_argument("--max-size", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "correlator" and args.ensemble == "jacobi" and args.d is None:
        args.d = "sym"
    try:
        if args.threads is not None and args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"betajack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComputationError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_COMPUTE
    except (BetaJackError, ValueError) as exc:
        print(f"betajack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
