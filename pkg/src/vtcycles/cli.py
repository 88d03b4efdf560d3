"""Command-line front end: ``vtcycle {generate,analyze,verify-lemma2,batch,oracle,corpus}``.

Exit codes: 0 all applicable checks hold, 2 input error, 3 a cap or time
limit was hit, 4 a theorem check failed (which indicates a bug).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import graph_core as gc
from .bounds import analyze, rat
from .config import Config
from .connectivity import brute_force_connectivity
from .corpus import cyclic_action, petersen_s5_action, truncation_action, write_corpus
from .counting_lemma import double_count_S, parse_vertex_set, verify_counting_lemma
from .cycle_solver import brute_force_circumference
from .errors import CapExceeded, GraphError, GroupError, NoCycle, NotTransitive
from .group_action import (automorphism_generators, cayley_action,
                           read_generators, write_generators)

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_FAIL = 0, 2, 3, 4
GIRTH_ORACLE_LIMIT = 2000

log = logging.getLogger("vtcycles")


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _sidecar(path: Path) -> Path | None:
    grp = path.with_suffix(".grp")
    return grp if grp.exists() else None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- generate -------------------------------------------------------------------

def cmd_generate(args, cfg: Config) -> int:
    fam, params = args.family, args.params
    group = None
    try:
        if fam == "cycle":
            n = int(params[0])
            g, group = gc.cycle_graph(n), cyclic_action(n)
        elif fam == "petersen":
            g, group = gc.petersen(), petersen_s5_action()
        elif fam == "coxeter":
            g = gc.coxeter()
            if args.with_group:
                group = automorphism_generators(g, limit=g.n)
        elif fam == "circulant":
            n = int(params[0])
            g, group = gc.circulant(n, _int_list(params[1])), cyclic_action(n)
        elif fam == "cayley":
            gens = read_generators(params[0]).generators
            idx = _int_list(params[1]) if len(params) > 1 else range(len(gens))
            conn = [gens[i] for i in idx]
            g = gc.cayley_graph(gens, conn, cfg.cap_group)
            group = cayley_action(gens, cfg.cap_group)
        elif fam == "truncate":
            src = Path(params[0])
            base = gc.read_graph(src)
            g = gc.truncate(base)
            side = _sidecar(src)
            if side is not None:
                group = truncation_action(base, read_generators(side))
        else:
            raise InputError(f"unknown family {fam}")
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad parameters for {fam}: {exc}") from None
    text = gc.format_graph(g, comments=[f"{fam} {' '.join(params)}".strip()])
    if args.output:
        out = Path(args.output)
        out.write_text(text)
        if args.with_group and group is not None:
            write_generators(group, out.with_suffix(".grp"), comments=[group.label or fam])
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- analyze --------------------------------------------------------------------

def _load(graph_path, group_path=None, auto_sidecar=True):
    path = Path(graph_path)
    g = gc.read_graph(path)
    if group_path is None and auto_sidecar:
        group_path = _sidecar(path)
    a = read_generators(group_path) if group_path else None
    return g, a


def _analyze_file(graph_path, group_path, cfg: Config) -> dict:
    g, a = _load(graph_path, group_path)
    report = analyze(g, a, cfg).to_json()
    report["graph_file"] = Path(graph_path).name
    return report


def _exit_for(report: dict) -> int:
    if report["failures"]:
        return EXIT_FAIL
    if report["caps_hit"]:
        return EXIT_CAP
    return EXIT_OK


def _summary_line(r: dict) -> str:
    sat = r["satisfied"]
    return (f"{r.get('graph_file', '')}: n={r['n']} m={r['m']} transitive={r['transitive']} "
            f"kappa={r['connectivity']} t={r['circumference']} "
            f"longest={r['longest_cycle_count']} k={r['k_min_intersection']} "
            f"|B|={r['hitting_set_size']} t/n={r['ratio_t_over_n']} "
            f"babai={sat['babai']} combined={sat['combined']}"
            + (f" caps={r['caps_hit']}" if r["caps_hit"] else "")
            + (f" FAILURES={r['failures']}" if r["failures"] else ""))


def cmd_analyze(args, cfg: Config) -> int:
    report = _analyze_file(args.graph, args.group, cfg)
    text = _dump(report)
    if cfg.json:
        Path(cfg.json).write_text(text)
    else:
        sys.stdout.write(text)
    if not cfg.quiet:
        print(_summary_line(report), file=sys.stderr)
        if not report["transitive"]:
            print("theorem checks: not applicable (vertex transitivity not established)",
                  file=sys.stderr)
        if report["two_connected"] is False:
            print("hitting-set construction: not applicable (not 2-connected)", file=sys.stderr)
    return _exit_for(report)


# -- verify-lemma2 ---------------------------------------------------------------

def cmd_verify_lemma2(args, cfg: Config) -> int:
    g = gc.read_graph(args.graph)
    a = read_generators(args.group)
    B, C = parse_vertex_set(args.B), parse_vertex_set(args.C)
    if not all(0 <= v < g.n for v in B | C):
        raise InputError("vertex set entry outside the graph")
    verdict = verify_counting_lemma(a, g, B, C, cfg.cap_group)
    dc = double_count_S(a, B, C, cfg.cap_group)
    out = {"verdict": verdict.as_dict(), "double_count": dc.as_dict(),
           "pass": verdict.holds and dc.ok}
    sys.stdout.write(_dump(out))
    if not cfg.quiet:
        print(f"k_min={verdict.k_min} |B||C|={verdict.lhs} k*n={verdict.rhs} "
              f"|S|={dc.S_size} |B||C||G_y|={dc.product} k*|G|={dc.k_min * dc.group_order} "
              f"{'pass' if out['pass'] else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if out["pass"] else EXIT_FAIL


# -- batch ------------------------------------------------------------------------

def _batch_one(item):
    path, cfg = item
    try:
        return path.name, _analyze_file(path, None, cfg), None
    except (GraphError, GroupError, NotTransitive, OSError, ValueError) as exc:
        return path.name, None, f"{type(exc).__name__}: {exc}"


def cmd_batch(args, cfg: Config) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InputError(f"{directory} is not a directory")
    files = sorted(directory.glob("*.g"))
    out_dir = Path(cfg.json) if cfg.json else directory / "reports"
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = [(p, cfg) for p in files]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_batch_one, jobs))
    else:
        results = [_batch_one(j) for j in jobs]
    results.sort(key=lambda r: r[0])

    rows, errors, code = [], {}, EXIT_OK
    for name, report, err in results:
        if err is not None:
            errors[name] = err
            code = max(code, EXIT_INPUT)
            continue
        (out_dir / (Path(name).stem + ".json")).write_text(_dump(report))
        code = max(code, _exit_for(report))
        rows.append({"graph": name, "n": report["n"], "t": report["circumference"],
                     "k": report["k_min_intersection"], "B": report["hitting_set_size"],
                     "babai": report["satisfied"]["babai"],
                     "combined": report["satisfied"]["combined"],
                     "ratio": report["ratio_t_over_n"]})
    ratios = [(Fraction(r["ratio"]), r["graph"]) for r in rows if r["ratio"]]
    minimum = min(ratios) if ratios else None
    summary = {"rows": rows, "errors": errors,
               "min_ratio": None if minimum is None else
               {"graph": minimum[1], "ratio": rat(minimum[0])}}
    (out_dir / "summary.json").write_text(_dump(summary))
    if not cfg.quiet:
        header = f"{'graph':40s} {'n':>4s} {'t':>4s} {'k':>4s} {'|B|':>4s} {'babai':>6s} {'comb':>6s} {'t/n':>7s}"
        print(header)
        for r in rows:
            mark = "  <- min t/n" if minimum and r["graph"] == minimum[1] else ""
            print(f"{r['graph']:40s} {r['n']:>4} {str(r['t']):>4s} {str(r['k']):>4s} "
                  f"{str(r['B']):>4s} {str(r['babai']):>6.6s} {str(r['combined']):>6.6s} "
                  f"{str(r['ratio']):>7s}{mark}")
        for name, err in errors.items():
            print(f"{name}: ERROR {err}")
    return code


# -- oracle / corpus ----------------------------------------------------------------

def cmd_oracle(args, cfg: Config) -> int:
    g = gc.read_graph(args.graph)
    try:
        if args.kind == "circumference":
            value = brute_force_circumference(g)
        elif args.kind == "girth":
            if g.n > GIRTH_ORACLE_LIMIT:
                raise ValueError(f"girth oracle limited to n <= {GIRTH_ORACLE_LIMIT}")
            value = gc.bfs_girth(g)
        else:
            value = brute_force_connectivity(g)
    except NoCycle:
        value = None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print("none" if value is None else value)
    return EXIT_OK


def cmd_corpus(args, cfg: Config) -> int:
    for p in write_corpus(args.directory):
        if not cfg.quiet:
            print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-cycles", type=int, default=None,
                        help="max longest cycles to enumerate (default 100000)")
    common.add_argument("--cap-group", type=int, default=None,
                        help="max group elements to enumerate (default 1000000)")
    common.add_argument("--time-limit", type=float, default=None,
                        help="solver time limit in seconds (default none)")
    common.add_argument("--aut-limit", type=int, default=None,
                        help="largest n for automatic automorphism search (default 16)")
    common.add_argument("--json", default=None,
                        help="write JSON here (analyze: file, batch: directory)")
    common.add_argument("--workers", type=int, default=None, help="batch workers (default 1)")
    common.add_argument("--quiet", action="store_true", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="vtcycle", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[common], help="write a graph file")
    gen.add_argument("family", choices=["cycle", "petersen", "coxeter", "circulant",
                                        "cayley", "truncate"])
    gen.add_argument("params", nargs="*")
    gen.add_argument("-o", "--output")
    gen.add_argument("--with-group", action="store_true",
                     help="also write a .grp sidecar next to the output")
    gen.set_defaults(func=cmd_generate)

    an = sub.add_parser("analyze", parents=[common], help="full analysis of one graph")
    an.add_argument("graph")
    an.add_argument("--group", help="generator file (default: sidecar .grp if present)")
    an.set_defaults(func=cmd_analyze)

    vl = sub.add_parser("verify-lemma2", parents=[common], help="check |B||C| >= k|V|")
    vl.add_argument("graph")
    vl.add_argument("group")
    vl.add_argument("B")
    vl.add_argument("C")
    vl.set_defaults(func=cmd_verify_lemma2)

    ba = sub.add_parser("batch", parents=[common], help="analyze every *.g in a directory")
    ba.add_argument("directory")
    ba.set_defaults(func=cmd_batch)

    orc = sub.add_parser("oracle", parents=[common], help="unpruned reference computations")
    orc.add_argument("kind", choices=["circumference", "girth", "connectivity"])
    orc.add_argument("graph")
    orc.set_defaults(func=cmd_oracle)

    co = sub.add_parser("corpus", parents=[common], help="write the built-in corpus")
    co.add_argument("directory")
    co.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = Config.from_env(cap_cycles=args.cap_cycles, cap_group=args.cap_group,
                              time_limit=args.time_limit, aut_limit=args.aut_limit,
                              json=args.json, workers=args.workers, quiet=args.quiet)
        return args.func(args, cfg)
    except (InputError, GraphError, GroupError, NotTransitive, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
