"""Command-line interface.

Subcommands mirror the library surface: ``gen`` emits an edge list,
``centrality`` scores one graph with one exact measure, ``got`` and
``kpath`` run the stochastic estimators, ``correlate`` compares two score
files, and ``experiment`` runs a full matrix from a JSON config file.

Score files are plain text: one score per line in id order (node id or
edge id), ``#`` lines ignored. The optional ``got --trace`` output is
newline-delimited JSON with one record per epoch:
``{"epoch": E, "vdiamonds_held": H, "thieves_carrying": C}``.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .exact import (betweenness_centrality, closeness_centrality,
                    clustering_coefficient, degree_centrality)
from .generators import GeneratorSpec
from .got import GotConfig, run_got
from .graph import largest_connected_component, read_edge_list, write_edge_list
from .harness import ExperimentConfig, run_experiment
from .kpath import KpathConfig, werw_kpath
from .stats import correlate

MEASURES = {
    "dc": degree_centrality,
    "bc": betweenness_centrality,
    "cl": closeness_centrality,
    "cc": clustering_coefficient,
}


def _write_scores(scores: np.ndarray, out, fmt: str) -> None:
    if fmt == "json":
        text = json.dumps({"scores": [float(x) for x in scores]}, indent=2) + "\n"
    else:
        lines = [f"# {len(scores)} scores"]
        lines.extend(repr(float(x)) for x in scores)
        text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def read_scores(path) -> np.ndarray:
    """Read a score file: JSON with a "scores" key, or one float per line."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return np.asarray(json.loads(text)["scores"], dtype=np.float64)
    values = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        values.append(float(line))
    return np.asarray(values, dtype=np.float64)


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="edge-list file to read")
    p.add_argument("--n", type=int, default=None,
                   help="node count (default: max id + 1)")


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family.upper(), args.n, args.param,
                         args.aux_p, args.seed)
    g = spec.generate()
    if args.out is None:
        sys.stdout.write(f"# nodes: {g.n} edges: {g.m}\n")
        for u, v in g.edge_list():
            sys.stdout.write(f"{u} {v}\n")
    else:
        write_edge_list(g, args.out)
    return 0


def _cmd_centrality(args) -> int:
    g = read_edge_list(args.graph, n=args.n)
    if args.lcc:
        g, _ = largest_connected_component(g)
    scores = MEASURES[args.measure](g)
    _write_scores(scores, args.out, args.format)
    return 0


def _cmd_got(args) -> int:
    g = read_edge_list(args.graph, n=args.n)
    if args.lcc:
        g, _ = largest_connected_component(g)
    cfg = GotConfig(thieves_per_node=args.thieves_per_node,
                    vdiamonds_per_node=args.vdiamonds_per_node,
                    epochs=args.epochs,
                    log_base=args.epoch_log_base,
                    mean_convention=args.mean_convention,
                    seed=args.seed)
    res = run_got(g, cfg, collect_trace=args.trace is not None)
    _write_scores(res.phi, args.node_out, args.format)
    if args.edge_out is not None:
        _write_scores(res.psi, args.edge_out, args.format)
    if args.trace is not None:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for rec in res.trace:
                fh.write(json.dumps({"epoch": rec.epoch,
                                     "vdiamonds_held": rec.vdiamonds_held,
                                     "thieves_carrying": rec.thieves_carrying}))
                fh.write("\n")
    return 0


def _cmd_kpath(args) -> int:
    g = read_edge_list(args.graph, n=args.n)
    if args.lcc:
        g, _ = largest_connected_component(g)
    cfg = KpathConfig(k=args.k, rho=args.rho, seed=args.seed)
    scores = werw_kpath(g, cfg)
    _write_scores(scores, args.out, args.format)
    return 0


def _cmd_correlate(args) -> int:
    a = read_scores(args.scores_a)
    b = read_scores(args.scores_b)
    res = correlate(a, b)
    payload = {"pearson": res.r, "spearman": res.rho, "kendall": res.tau,
               "concordant": res.s_c, "discordant": res.s_d,
               "degenerate": res.degenerate}
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        rows = ["coefficient,value"]
        for name in ("pearson", "spearman", "kendall"):
            v = payload[name]
            rows.append(f"{name},{'' if v is None else repr(v)}")
        text = "\n".join(rows) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_experiment(args) -> int:
    cfg = ExperimentConfig.from_file(args.config)
    records, errors = run_experiment(cfg, args.out_dir, workers=args.workers)
    sys.stdout.write(f"{len(records)} records, {len(errors)} failed cells "
                     f"-> {args.out_dir}\n")
    for err in errors:
        sys.stdout.write(f"  failed: {err}\n")
    return 1 if errors and not records else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centbench",
        description="graph centrality measures, estimators and experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random graph edge list")
    p.add_argument("--family", required=True, choices=["sf", "sw", "er"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=float, required=True,
                   help="SF: edges per node; SW: ring neighbors; ER: edge prob")
    p.add_argument("--aux-p", type=float, default=0.0,
                   help="SF triangle prob / SW shortcut prob")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("centrality", help="exact centrality of one graph")
    _add_graph_arg(p)
    p.add_argument("--measure", required=True, choices=sorted(MEASURES))
    p.add_argument("--lcc", action="store_true",
                   help="reduce to the largest connected component first")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_centrality)

    p = sub.add_parser("got", help="run the thief simulation")
    _add_graph_arg(p)
    p.add_argument("--lcc", action="store_true")
    p.add_argument("--thieves-per-node", type=int, default=1)
    p.add_argument("--vdiamonds-per-node", type=int, default=None)
    p.add_argument("--epochs", type=int, default=None)
    p.add_argument("--epoch-log-base", choices=["e", "2", "10"], default="e")
    p.add_argument("--mean-convention", choices=["per-epoch", "arithmetic"],
                   default="per-epoch")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--node-out", default=None)
    p.add_argument("--edge-out", default=None)
    p.add_argument("--trace", default=None,
                   help="write per-epoch NDJSON trace records here")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_got)

    p = sub.add_parser("kpath", help="weighted edge random-walk k-path scores")
    _add_graph_arg(p)
    p.add_argument("--lcc", action="store_true")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--rho", type=int, default=None,
                   help="walk count (default: edge count)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_kpath)

    p = sub.add_parser("correlate", help="correlate two score files")
    p.add_argument("scores_a")
    p.add_argument("scores_b")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_correlate)

    p = sub.add_parser("experiment", help="run a full experiment matrix")
    p.add_argument("--config", required=True, help="JSON experiment config")
    p.add_argument("--out-dir", default="results")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
