"""Command-line entry point: ``chordcheck {check,gen,bounds,bench}``.

Exit codes: 0 pass, 1 property violated, 2 input or usage error,
3 differential mismatch between algorithms.
"""

import argparse
import json
import math
import sys

from . import bounds as B
from .bench import DifferentialMismatch, run_bench, write_csv
from .bucketed import check_bucketed
from .chain import chain_metrics, read_chain, serialize_chain
from .checker import DEFAULT_TOL, check_naive
from .errors import ChordCheckError
from .generators import (gen_hexagon_upper_hull, gen_random_monotone, gen_reuleaux_arc,
                         gen_staircase, gen_straight_subdivided, gen_u_shape)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _floats(text):
    return [float(x) for x in text.split(",")]


def _ints(text):
    return [int(x) for x in text.split(",")]


def build_parser():
    p = _Parser(prog="chordcheck", description="Increasing-chord tests and length bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="test a chain file for the increasing-chord property")
    c.add_argument("file")
    c.add_argument("--algo", choices=["naive", "bucketed"], default="naive")
    c.add_argument("--index", choices=["linear", "kdtree"], default="kdtree")
    c.add_argument("--tol", type=float, default=DEFAULT_TOL)
    c.add_argument("--q", type=int, default=None, help="bucket count override")
    c.add_argument("--json", action="store_true")

    g = sub.add_parser("gen", help="write a generated chain file")
    g.add_argument("family", choices=["staircase", "reuleaux2", "reuleaux2-inscribed", "hexagon",
                                      "ushape", "random-monotone", "straight"])
    g.add_argument("--steps", type=int, default=1)
    g.add_argument("--widths", type=_floats, default=[1.0])
    g.add_argument("--heights", type=_floats, default=[1.0])
    g.add_argument("--m", type=int, default=100)
    g.add_argument("-d", type=int, default=2)
    g.add_argument("-n", type=int, default=100)
    g.add_argument("--max-turn", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", default="-")

    b = sub.add_parser("bounds", help="evaluate length bounds (JSON output)")
    b.add_argument("--d", type=int, required=True)
    grp = b.add_mutually_exclusive_group()
    grp.add_argument("--alpha", type=float)
    grp.add_argument("--alpha-sin", type=float)
    grp.add_argument("--optimize", action="store_true")
    b.add_argument("--reuleaux", action="store_true")
    b.add_argument("--verify-lemma5", type=int, metavar="SEEDS", default=0)
    b.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")

    r = sub.add_parser("bench", help="differential benchmark, CSV output")
    r.add_argument("--family", default="random-monotone",
                   choices=["random-monotone", "straight", "staircase", "reuleaux2"])
    r.add_argument("--sizes", type=_ints, default=[1000])
    r.add_argument("--d", type=int, default=4)
    r.add_argument("--algos", default="naive,bucketed:kdtree")
    r.add_argument("--repeats", type=int, default=1)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--tol", type=float, default=DEFAULT_TOL)
    r.add_argument("--q", type=int, default=None)
    r.add_argument("--max-turn", type=float, default=0.3)
    r.add_argument("-o", "--output", default="-")
    return p


def _emit(text, path):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args):
    chain = read_chain(args.file)
    if args.algo == "naive":
        report = check_naive(chain, args.tol)
    else:
        report = check_bucketed(chain, args.tol, args.index, args.q)
    if args.json:
        out = report.as_dict()
        out.update({"n": chain.n, "d": chain.dimension, "tol": args.tol,
                    "duplicates_collapsed": chain.duplicates_collapsed,
                    "stretch": _stretch(chain)})
        print(json.dumps(out, indent=2))
    else:
        print(f"{args.file}: {report.verdict.upper()} ({report.algorithm}, n={chain.n}, d={chain.dimension})")
        if report.witness:
            w = report.witness
            print(f"  witness: {w.loop} test at p_{w.vertex_index}, offender p_{w.offender_index}, "
                  f"offset {w.offset:.6g}")
        s = report.stats
        print(f"  halfspace_tests={s.halfspace_tests} points_inspected={s.points_inspected} "
              f"index_queries={s.index_queries}")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_gen(args):
    fam = args.family
    if fam == "staircase":
        chain = gen_staircase(args.steps, _per_step(args.widths, args.steps),
                              _per_step(args.heights, args.steps))
    elif fam == "reuleaux2":
        chain = gen_reuleaux_arc(args.m)
    elif fam == "reuleaux2-inscribed":
        chain = gen_reuleaux_arc(args.m, inscribed=True)
    elif fam == "hexagon":
        chain = gen_hexagon_upper_hull()
    elif fam == "ushape":
        chain = gen_u_shape()
    elif fam == "random-monotone":
        chain = gen_random_monotone(args.d, args.n, args.max_turn, args.seed)
    else:
        chain = gen_straight_subdivided(args.d, args.n)
    _emit(serialize_chain(chain), args.output)
    return EXIT_PASS


def _stretch(chain):
    try:
        return chain_metrics(chain).stretch
    except ChordCheckError:
        return None


def _per_step(values, steps):
    if len(values) == 1:
        return values[0]
    if len(values) != steps:
        raise ValueError(f"expected 1 or {steps} values, got {len(values)}")
    return values


def cmd_bounds(args):
    d = args.d
    if d < 2:
        raise B.DomainError("d must be >= 2")
    out = {"d": d}
    if d == 2:
        out["planar_note"] = "in the plane the optimal constant is 2*pi/3"
        out["planar_constant"] = B.PLANAR_CONSTANT
    if args.optimize:
        out["optimum"] = {name: B.optimize_alpha(d, name).as_dict() for name in ("F1", "Eq1")}
        alpha = out["optimum"]["F1"]["alpha"]
    elif args.alpha is not None:
        alpha = args.alpha
    elif args.alpha_sin is not None:
        if not 0.0 < args.alpha_sin < 1.0:
            raise B.DomainError("--alpha-sin must lie in (0, 1)")
        alpha = math.asin(args.alpha_sin)
    else:
        alpha = B.theorem_alpha(d)
    out["profile"] = B.f_profile(d, alpha).as_dict()
    if d >= 3:
        out["dimension_bound"] = B.dimension_bound(d)
    if args.reuleaux:
        if d < 3:
            raise B.DomainError("--reuleaux needs d >= 3")
        out["reuleaux_midpoint_distance"] = B.reuleaux_midpoint_distance(d)
    if args.verify_lemma5:
        reports = [B.verify_column_bounds(d, alpha, seed) for seed in range(args.verify_lemma5)]
        out["column_bounds"] = {"seeds": args.verify_lemma5,
                                "failures": sum(not r.ok for r in reports),
                                "reports": [r.as_dict() for r in reports]}
    print(json.dumps(out, indent=2, default=_json_default))
    return EXIT_PASS


def _json_default(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    raise TypeError(type(x))


def cmd_bench(args):
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    records = []
    try:
        for rec in run_bench(args.family, args.sizes, args.d, algos, args.repeats, args.seed,
                             args.tol, args.q, args.max_turn):
            records.append(rec)
    except DifferentialMismatch as exc:
        print(f"chordcheck bench: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.output == "-":
        write_csv(records, sys.stdout)
    else:
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            write_csv(records, fh)
    return EXIT_PASS


COMMANDS = {"check": cmd_check, "gen": cmd_gen, "bounds": cmd_bounds, "bench": cmd_bench}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ChordCheckError, ValueError, OSError) as exc:
        print(f"chordcheck {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
