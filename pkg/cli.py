"""
Command-line front end: count, approx, peel, orient (plus demo and a hidden oracle command).

Standard output carries only the result line; reports, artifacts and
status messages go to files and standard error. Exit codes: 0 success,
2 usage error, 1 runtime error.
"""

import argparse
import json
import sys
import threading
import time
from dataclasses import asdict, dataclass, field

import pandas as pd

from config import (
    CLI_ORDER_NAMES,
    DATA_DIR,
    DEFAULT_EPSILON,
    DEFAULT_PEEL_EPSILON,
    PARALLELISM_MODES,
    REPORT_SCHEMA_VERSION,
    resolve_threads,
)
from counting import CliqueCounter, CountConfig
from errors import InvalidArgumentError, KCliqueError
from graph_core import direct_by_ranking, load_graph, save_id_map
from orientation import OrientConfig, orient, save_ranking
from peeling import peel_approx, peel_exact, write_cores_tsv, write_dense_vertices
from sampling import analytic_variance, approx_count, approx_count_trials

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    input: str
    n: int = 0
    m: int = 0
    k: int = None
    strategy: str = None
    parallelism: str = None
    threads: int = 1
    seconds: dict = field(default_factory=lambda: {"load": 0.0, "orient": 0.0, "compute": 0.0})
    result: dict = field(default_factory=dict)

    def to_dict(self):
        report = {"schema": REPORT_SCHEMA_VERSION}
        report.update(asdict(self))
        return report

    def save(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(self.to_dict(), f, indent=2, default=str)
            f.write("\n")
        return path


class _Timer:
    def __init__(self, report, phase):
        self.report, self.phase = report, phase

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.report.seconds[self.phase] += time.perf_counter() - self.start
        return False


def format_number(x):
    """Integers print bare, other reals with up to six decimals"""
    x = float(x)
    if x.is_integer():
        return str(int(x))
    return f"{x:.6f}".rstrip("0").rstrip(".")


def _status(args, message):
    if getattr(args, "verbose", False):
        print(message, file=sys.stderr)


def _load(args, report):
    _status(args, f"📄 Loading {args.input}...")
    with _Timer(report, "load"):
        g = load_graph(args.input)
    report.n, report.m = g.n, g.m
    _status(args, f"✅ Loaded n={g.n} m={g.m}")
    return g


def _orient_config(args):
    return OrientConfig(CLI_ORDER_NAMES[args.order], args.eps, getattr(args, "alpha_hat", None))


def _orient(args, report, g):
    cfg = _orient_config(args)
    report.strategy = cfg.strategy
    with _Timer(report, "orient"):
        ranking = orient(g, cfg)
        dg = direct_by_ranking(g, ranking)
    _status(args, f"🧭 {cfg.strategy} orientation, max out-degree {dg.max_out_degree}")
    return ranking, dg


def _finish(args, report):
    if getattr(args, "json", None):
        report.save(args.json)
        _status(args, f"✅ Report saved to {args.json}")


def cmd_count(args):
    threads = resolve_threads(args.threads)
    report = RunReport("count", args.input, k=args.k, parallelism=args.parallelism, threads=threads)
    g = _load(args, report)
    _, dg = _orient(args, report, g)
    counter = CliqueCounter(dg, args.k, CountConfig(args.parallelism, not args.no_induced), threads)
    report.parallelism = counter.mode

    with _Timer(report, "compute"):
        if args.per_vertex:
            counts = counter.count_per_vertex()
        else:
            counts = counter.count_total()
        cliques = None
        if args.list:
            found, lock = [], threading.Lock()

            def emit(clique):
                with lock:
                    found.append(clique)

            counter.list_cliques(emit)
            cliques = sorted(tuple(sorted(g.original_ids[list(c)].tolist())) for c in found)

    if args.per_vertex:
        frame = pd.DataFrame({"vertex": g.original_ids, "count": counts.per_vertex})
        frame.to_csv(args.per_vertex, sep="\t", header=False, index=False, lineterminator="\n")
    if cliques is not None:
        with open(args.list, "w", encoding="utf-8", newline="\n") as f:
            f.writelines(" ".join(map(str, c)) + "\n" for c in cliques)
    if args.id_map:
        save_id_map(g, args.id_map)

    report.result = {"total": counts.total}
    _finish(args, report)
    print(counts.total)
    return EXIT_OK


def cmd_approx(args):
    threads = resolve_threads(args.threads)
    report = RunReport("approx", args.input, k=args.k, threads=threads)
    g = _load(args, report)
    cfg = _orient_config(args)
    report.strategy = cfg.strategy
    count_cfg = CountConfig(args.parallelism)
    report.parallelism = count_cfg.resolve(args.k)

    with _Timer(report, "compute"):
        if args.trials == 1:
            estimate = approx_count(g, args.k, args.colors, args.seed, cfg, count_cfg, threads)
            result = estimate.to_dict()
            line = format_number(estimate.estimate)
        else:
            _, summary = approx_count_trials(g, args.k, args.colors, args.seed, args.trials,
                                             cfg, count_cfg, threads)
            result = dict(summary, colors=args.colors, seed=args.seed)
            line = f"{format_number(summary['mean'])}±{format_number(summary['std'])}"

        if args.variance:
            from oracle import brute_force_count, shared_pairs
            exact = brute_force_count(g, args.k).total
            result["analytic_variance"] = analytic_variance(
                exact, 1.0 / args.colors, args.k, shared_pairs(g, args.k))

    report.result = result
    _finish(args, report)
    print(line)
    return EXIT_OK


def cmd_peel(args):
    if args.mode == "approx" and args.cores:
        raise UsageError("--cores is only available in exact mode")
    threads = resolve_threads(args.threads)
    report = RunReport("peel", args.input, k=args.k, threads=threads)
    g = _load(args, report)
    _, dg = _orient(args, report, g)

    with _Timer(report, "compute"):
        if args.mode == "exact":
            outcome = peel_exact(g, dg, args.k, threads)
        else:
            outcome = peel_approx(g, dg, args.k, args.eps_peel, threads)

    if args.cores:
        write_cores_tsv(outcome, g, args.cores)
    if args.dense:
        write_dense_vertices(outcome, g, args.dense)
    report.result = dict(outcome.summary(), mode=args.mode)
    _finish(args, report)
    print(f"rho={outcome.rho} density={format_number(outcome.best_density)}")
    return EXIT_OK


def cmd_orient(args):
    report = RunReport("orient", args.input, threads=resolve_threads(args.threads))
    g = _load(args, report)
    ranking, dg = _orient(args, report, g)
    if args.output:
        save_ranking(ranking, args.output, ids=g.original_ids)
    report.result = {"max_out_degree": dg.max_out_degree, "rounds": ranking.rounds}
    _finish(args, report)
    print(f"max_out_degree={dg.max_out_degree}")
    return EXIT_OK


def cmd_oracle(args):
    from oracle import LIMITS, brute_force_count, exact_arboricity, exact_densest

    report = RunReport("oracle", args.input, k=args.k)
    g = _load(args, report)
    result = {"total": brute_force_count(g, args.k).total}
    if g.n <= LIMITS.max_n_subsets:
        density, subset = exact_densest(g, args.k)
        result["arboricity"] = exact_arboricity(g)
        result["densest_density"] = density
        result["densest_subset"] = g.original_ids[subset].tolist()
    report.result = result
    _finish(args, report)
    print(json.dumps(result))
    return EXIT_OK


def cmd_demo(args):
    from demo_data import create_demo_files
    create_demo_files(args.output_dir, verbose=args.verbose)
    return EXIT_OK


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _clique_size(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"clique size must be >= 2, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kclique", description="Parallel k-clique counting, sampling and peeling")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="edge list file")
    common.add_argument("--threads", type=_positive_int, default=None)
    common.add_argument("--json", default=None, help="write the run report here")
    common.add_argument("--verbose", action="store_true")

    ordering = argparse.ArgumentParser(add_help=False)
    ordering.add_argument("--order", choices=list(CLI_ORDER_NAMES), default="degree")
    ordering.add_argument("--eps", type=_positive_float, default=DEFAULT_EPSILON,
                          help="orientation epsilon")
    ordering.add_argument("--alpha-hat", type=_positive_int, default=None,
                          help="arboricity estimate for the barenboim order")

    count = sub.add_parser("count", parents=[common, ordering], help="exact k-clique count")
    count.add_argument("--k", type=_clique_size, required=True)
    count.add_argument("--parallelism", choices=PARALLELISM_MODES, default="auto")
    count.add_argument("--no-induced", action="store_true",
                       help="intersect sorted adjacency instead of building induced subgraphs")
    count.add_argument("--per-vertex", default=None, metavar="OUT.tsv")
    count.add_argument("--list", default=None, metavar="OUT.txt")
    count.add_argument("--id-map", default=None, metavar="OUT.tsv")
    count.set_defaults(handler=cmd_count)

    approx = sub.add_parser("approx", parents=[common, ordering],
                            help="colorful-sparsification estimate")
    approx.add_argument("--k", type=_clique_size, required=True)
    approx.add_argument("--colors", type=_positive_int, required=True)
    approx.add_argument("--seed", type=int, default=0)
    approx.add_argument("--trials", type=_positive_int, default=1)
    approx.add_argument("--parallelism", choices=PARALLELISM_MODES, default="auto")
    approx.add_argument("--variance", action="store_true",
                        help="add the analytic variance (small graphs only)")
    approx.set_defaults(handler=cmd_approx)

    peel = sub.add_parser("peel", parents=[common], help="k-clique densest subgraph by peeling")
    peel.add_argument("--k", type=_clique_size, required=True)
    peel.add_argument("--mode", choices=["exact", "approx"], default="exact")
    peel.add_argument("--eps", dest="eps_peel", type=_positive_float, default=DEFAULT_PEEL_EPSILON,
                      help="approximate peeling epsilon")
    peel.add_argument("--order", choices=list(CLI_ORDER_NAMES), default="degree")
    peel.add_argument("--orient-eps", dest="eps", type=_positive_float, default=DEFAULT_EPSILON)
    peel.add_argument("--cores", default=None, metavar="OUT.tsv")
    peel.add_argument("--dense", default=None, metavar="OUT.txt")
    peel.set_defaults(handler=cmd_peel)

    orient_cmd = sub.add_parser("orient", parents=[common, ordering], help="rank and orient")
    orient_cmd.add_argument("--output", default=None, metavar="RANKING.txt")
    orient_cmd.set_defaults(handler=cmd_orient)

    oracle = sub.add_parser("oracle", parents=[common], help=argparse.SUPPRESS)
    oracle.add_argument("--k", type=_clique_size, required=True)
    oracle.set_defaults(handler=cmd_oracle)

    demo = sub.add_parser("demo", help="write demo graphs")
    demo.add_argument("--output-dir", default=DATA_DIR)
    demo.add_argument("--verbose", action="store_true")
    demo.set_defaults(handler=cmd_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code in (0, None) else EXIT_USAGE

    try:
        return args.handler(args)
    except (UsageError, InvalidArgumentError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except (KCliqueError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
