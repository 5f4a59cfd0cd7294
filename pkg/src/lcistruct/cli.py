"""Command line: ``run``, ``examples``, ``construct``, ``check``.

Exit status is 0 when every required check passes, 1 when some check
fails, and 2 on a usage, syntax or runtime error.
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .construct import ConstructionError, ConstructionPlan, paper_examples, run_construction
from .multistruct import InvalidStructure, MultipleStructure
from .script import Config, ScriptError, run_source
from .script.evaluator import Evaluator, check_script
from .script.parser import parse


def _chart(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise argparse.ArgumentTypeError(f"bad chart {item!r}; expected var=value")
        out[name.strip()] = Fraction(value.strip())
    return out


def _config(args):
    return Config(order=args.order, trunc=args.trunc, chart=_chart(args.chart))


def _emit(report, args):
    text = report.to_json() if args.json else report.to_text()
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(report.to_json())
    return 0 if report.passed else 1


def cmd_run(args):
    source = Path(args.script).read_text()
    return _emit(run_source(source, _config(args)), args)


def cmd_examples(args):
    return _emit(paper_examples(tuple(args.r)), args)


def cmd_construct(args):
    alphas = [Fraction(a) for a in args.alphas.split(",")] if args.alphas else []
    plan = ConstructionPlan(args.n, args.branch, tuple(alphas), args.codim, Fraction(args.r), Fraction(args.s))
    result = run_construction(plan)
    return _emit(result.report(), args)


def cmd_check(args):
    """Run a script that defines the support and structure ideals, then certify the pair."""
    source = Path(args.file).read_text()
    script = check_script(parse(source), source)
    ev = Evaluator(_config(args), source)
    ev.run(script)
    for name in (args.support, args.structure):
        if name not in ev.env:
            raise ScriptError(f"{args.file} does not define {name!r}")
    chart = _chart(args.chart) or None
    S = MultipleStructure(ev.env[args.support], ev.env[args.structure], chart=chart, name=args.file)
    report = S.summary()
    report.attach(ev.report)
    return _emit(report, args)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="default monomial order: lex, grevlex or elim(k)")
    common.add_argument("--trunc", type=int, metavar="N", help="truncation degree for local computations")
    common.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    common.add_argument("--chart", action="append", metavar="VAR=VALUE", help="dehomogenizing chart, repeatable")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = argparse.ArgumentParser(prog="lcistruct", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", parents=[common], help="evaluate a script")
    r.add_argument("script")
    r.set_defaults(func=cmd_run)

    e = sub.add_parser("examples", parents=[common], help="certify the line and plane examples")
    e.add_argument("--r", type=int, nargs="+", default=[0, 1], help="degree shifts for the examples")
    e.set_defaults(func=cmd_examples)

    c = sub.add_parser("construct", parents=[common], help="run the local construction chain")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--branch", choices=["A", "B", "a", "b"], default="B")
    c.add_argument("--alphas", default="", help="comma-separated a_2,...,a_(n-1)")
    c.add_argument("--codim", type=int, default=2)
    c.add_argument("--r", default="1")
    c.add_argument("--s", default="1")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("check", parents=[common], help="certify a support/structure pair from a script")
    k.add_argument("file")
    k.add_argument("--support", default="I", help="name of the support ideal (default I)")
    k.add_argument("--structure", default="J", help="name of the structure ideal (default J)")
    k.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScriptError as exc:
        print(exc.render(), file=sys.stderr)
        return 2
    except (ConstructionError, InvalidStructure, OSError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
