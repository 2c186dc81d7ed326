"""Command-line interface: every subcommand prints one JSON document.

Failures print ``{"error": {"type": ..., "message": ...}}`` and exit
nonzero (2 for usage errors, 1 otherwise).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import checks, coding, dynamics, integration, measure, metric
from .core import BINARY, Alphabet, BiSequenceDescriptor, CantorSpaceError, LevelSystem
from .serialize import (
    FormatError,
    bisequence_to_json,
    descriptor_to_json,
    format_rational,
    interval_to_json,
    measure_from_json,
    measure_to_json,
    parse_rational,
    parse_word,
    point_from_json,
    step_from_json,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(arg: str) -> Any:
    """Inline JSON, or the path of a JSON file."""
    text = arg
    if not arg.lstrip().startswith(("{", "[")) and os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"cannot parse JSON from {arg!r}: {e.msg}") from e


def _ratio(args) -> metric.UltrametricParams:
    return metric.UltrametricParams(parse_rational(getattr(args, "ratio", "1/2")))


def _system(args) -> LevelSystem:
    labels = getattr(args, "alphabet", None)
    if labels is None:
        return LevelSystem.homogeneous(BINARY)
    return LevelSystem.homogeneous(Alphabet(parse_word(labels)))


def cmd_stage(args) -> Any:
    try:
        j = int(args.j)
    except ValueError:
        raise UsageError(f"stage index must be an integer, got {args.j!r}")
    if j < 0:
        raise UsageError(f"stage index must be nonnegative, got {j}")
    return [interval_to_json(iv) for iv in coding.stage_intervals(j)]


def cmd_code(args) -> Any:
    if (args.encode is None) == (args.decode is None):
        raise UsageError("give exactly one of --encode or --decode")
    if args.encode is not None:
        x = point_from_json(_load(args.encode))
        if isinstance(x, BiSequenceDescriptor):
            raise FormatError("coding maps take one-sided descriptors")
        f = coding.tau if args.map == "tau" else coding.beta
        return format_rational(f(x))
    q = parse_rational(args.decode)
    if args.map == "tau":
        x = coding.tau_decode(q)
        return {"member": False} if x is None else descriptor_to_json(x)
    if args.expansions:
        return [descriptor_to_json(x) for x in coding.beta_expansions(q)]
    return descriptor_to_json(coding.beta_decode(q))


def cmd_dist(args) -> Any:
    x, y = point_from_json(_load(args.x)), point_from_json(_load(args.y))
    p = _ratio(args)
    if isinstance(x, BiSequenceDescriptor) != isinstance(y, BiSequenceDescriptor):
        raise FormatError("cannot compare a one-sided with a two-sided point")
    if isinstance(x, BiSequenceDescriptor):
        return format_rational(metric.two_sided_distance(x, y, p))
    return format_rational(metric.distance(x, y, p))


def cmd_shift(args) -> Any:
    x = point_from_json(_load(args.x))
    if isinstance(x, BiSequenceDescriptor):
        if args.preimages or args.orbit is not None:
            raise UsageError("--preimages and --orbit apply to one-sided points")
        y = dynamics.unshift_two_sided(x) if args.unshift else dynamics.shift_two_sided(x)
        return bisequence_to_json(y)
    if args.unshift:
        raise UsageError("--unshift applies to two-sided points; use --preimages")
    system = _system(args)
    if args.preimages:
        return [descriptor_to_json(p) for p in dynamics.shift_preimages(x, system)]
    if args.orbit is not None:
        r = dynamics.orbit(x, args.orbit, system)
        return {
            "points": [descriptor_to_json(p) for p in r.points],
            "preperiod": r.preperiod,
            "cycle": r.cycle,
        }
    return descriptor_to_json(dynamics.shift_one_sided(x, system))


def cmd_measure(args) -> Any:
    mu = measure_from_json(_load(args.file))
    if args.cylinder is not None:
        return format_rational(measure.cylinder_mass(mu, parse_word(args.cylinder, mu.system)))
    if args.clopen is not None:
        words = [parse_word(w, mu.system) for w in args.clopen]
        return format_rational(measure.clopen_mass(mu, words))
    if args.tree is not None:
        if not isinstance(mu, measure.ProductMeasure):
            raise UsageError("--tree expands product measures")
        return measure_to_json(measure.product_to_tree(mu, args.tree))
    if args.check:
        tree = measure.product_to_tree(mu, args.depth) if isinstance(mu, measure.ProductMeasure) else mu
        bad = measure.check_consistency(tree)
        return {"consistent": not bad, "violations": ["".join(map(str, w)) for w in bad]}
    if args.pushforward is not None:
        pairs = measure.pushforward_intervals(mu, args.pushforward, args.depth)
        return [{**interval_to_json(iv), "mass": format_rational(v)} for iv, v in pairs]
    raise UsageError("give one of --cylinder, --clopen, --tree, --check, --pushforward")


def cmd_integrate(args) -> Any:
    mu = measure_from_json(_load(args.measure))
    f = step_from_json(_load(args.function), mu.system)
    return format_rational(integration.integrate_step(f, mu))


def cmd_check(args) -> Any:
    if not args.all:
        raise UsageError("check needs --all")
    results = checks.run_all()
    failed = sum(not ok for _, ok, _ in results)
    out = {
        "passed": len(results) - failed,
        "failed": failed,
        "results": [{"name": n, "passed": ok, **({"detail": d} if d else {})} for n, ok, d in results],
    }
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--ratio", default=argparse.SUPPRESS, help="ultrametric ratio p/q (default 1/2)")
    common.add_argument("--format", default=argparse.SUPPRESS, choices=["json"], help="output format")

    parser = _Parser(prog="cantorspace", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("stage", parents=[common], help="intervals of the j-th middle-thirds stage")
    p.add_argument("j")
    p.set_defaults(func=cmd_stage)

    p = sub.add_parser("code", parents=[common], help="evaluate or invert tau / beta")
    p.add_argument("--map", choices=["tau", "beta"], required=True)
    p.add_argument("--encode", metavar="DESCRIPTOR")
    p.add_argument("--decode", metavar="P/Q")
    p.add_argument("--expansions", action="store_true", help="beta: list every binary expansion")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("dist", parents=[common], help="ultrametric distance of two points")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("shift", parents=[common], help="shift map, preimages, orbits")
    p.add_argument("x")
    p.add_argument("--alphabet", help="compact symbol labels, default 01")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preimages", action="store_true")
    g.add_argument("--orbit", type=int, metavar="N")
    g.add_argument("--unshift", action="store_true")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("measure", parents=[common], help="query a cylinder measure file")
    p.add_argument("--file", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--cylinder", metavar="WORD")
    g.add_argument("--clopen", nargs="*", metavar="WORD")
    g.add_argument("--tree", type=int, metavar="DEPTH")
    g.add_argument("--check", action="store_true")
    g.add_argument("--pushforward", choices=["tau", "beta"])
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("integrate", parents=[common], help="integrate a step function")
    p.add_argument("--function", required=True)
    p.add_argument("--measure", required=True)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("check", parents=[common], help="run the invariant suite")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def _emit(obj: Any, stream) -> None:
    stream.write(json.dumps(obj, sort_keys=True) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        result = args.func(args)
    except UsageError as e:
        _emit({"error": {"type": "usage", "message": str(e)}}, sys.stdout)
        return 2
    except (CantorSpaceError, OSError, RecursionError) as e:
        _emit({"error": {"type": type(e).__name__, "message": str(e)}}, sys.stdout)
        return 1
    _emit(result, sys.stdout)
    if args.command == "check" and result["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
