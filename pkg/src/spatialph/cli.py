"""Command-line interface wiring the pipelines together.

Subcommands: gen, wtm, ph, table1, compare, cluster, render, threshold.
Every stochastic command takes an explicit --seed, all outputs are plain text
(SVG for render), and re-running a command reproduces its output byte for
byte.
"""

from __future__ import annotations

import argparse
import sys

from . import adjacency, clustering, distance, graphs, levelset, persistence, render
from .errors import Error
from .experiments import MODELS, format_stats, run_model_stats
from .wtm import WtmConfig, read_times, run_wtm, write_times


def _cmd_gen(args) -> int:
    if args.model == "rgg":
        graph = graphs.gen_rgg(args.n, args.radius, args.seed)
    elif args.model == "lattice":
        graph = graphs.gen_lattice(args.side)
    else:
        graph = graphs.gen_ws(args.n, args.k, args.p, args.seed)
    graphs.write_graph(graph, args.out)
    print(f"nodes={len(graph)} edges={len(graph.edges)} -> {args.out}")
    return 0


def _cmd_wtm(args) -> int:
    graph = graphs.read_graph(args.graph)
    config = WtmConfig(rho0=args.rho0, threshold=args.threshold, seed=args.seed)
    times = run_wtm(graph, config)
    write_times(times, args.out)
    infected = len(times.infected_nodes())
    print(
        f"infected={infected}/{len(graph)} "
        f"never_infected_value={times.never_infected_value} -> {args.out}"
    )
    return 0


def _cmd_ph(args) -> int:
    sources = [args.image, args.times, args.node_values, args.edge_values]
    if sum(1 for s in sources if s) != 1:
        raise Error("pick exactly one source: --image, --times, --node-values, --edge-values")
    if args.image:
        img = levelset.read_image(args.image)
        if isinstance(img, levelset.GrayImage):
            img = levelset.threshold_image(img, args.cutoff)
        cx = levelset.levelset_complex(img)
    else:
        graph = graphs.read_graph(args.graph)
        if args.times:
            cx = adjacency.wtm_filtration(graph, read_times(args.times))
        elif args.node_values:
            cx = adjacency.node_value_filtration(graph)
        else:
            cx = adjacency.edge_value_filtration(graph)
    diagram = persistence.compute_persistence(cx)
    persistence.write_diagram(diagram, args.out)
    h0 = persistence.feature_count(diagram, 0)
    h1 = persistence.feature_count(diagram, 1)
    print(f"features: H0={h0} H1={h1} -> {args.out}")
    return 0


def _cmd_table1(args) -> int:
    stats = run_model_stats(args.model, args.runs, args.seed)
    sys.stdout.write(format_stats(stats))
    return 0


def _cmd_compare(args) -> int:
    diagrams = []
    for path in args.diagrams:
        try:
            diagrams.append(persistence.read_diagram(path))
        except OSError as exc:
            raise Error(f"cannot read {path}: {exc}") from exc
    matrix = distance.pairwise_matrix(
        diagrams, dimensions=set(args.dims), labels=list(args.diagrams)
    )
    distance.write_matrix(matrix, args.out)
    print(f"{len(diagrams)}x{len(diagrams)} matrix -> {args.out}")
    return 0


def _cmd_cluster(args) -> int:
    matrix = distance.read_matrix(args.matrix)
    dendrogram = clustering.average_linkage(matrix)
    assignment = clustering.cut(dendrogram, args.k)
    clustering.write_dendrogram(dendrogram, args.dendrogram)
    clustering.write_assignment(matrix.labels, assignment, args.assignment)
    print(f"k={args.k} -> {args.dendrogram}, {args.assignment}")
    return 0


def _cmd_render(args) -> int:
    with open(args.input) as f:
        header = f.readline().strip()
    if header == "dim,birth,death":
        render.render_diagram_svg(persistence.read_diagram(args.input), args.out)
    elif header == "a,b,height,size":
        render.render_dendrogram_svg(clustering.read_dendrogram(args.input), args.out)
    else:
        raise Error(f"{args.input}: neither a diagram nor a dendrogram file")
    print(f"{args.input} -> {args.out}")
    return 0


def _cmd_threshold(args) -> int:
    img = levelset.read_image(args.image)
    if not isinstance(img, levelset.GrayImage):
        raise Error(f"{args.image}: expected a graymap (P2/P5)")
    binary = levelset.threshold_image(img, args.cutoff)
    levelset.write_pbm(binary, args.out)
    print(f"foreground={len(binary.foreground)} pixels -> {args.out}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spatialph",
        description="Persistent homology of spatial graphs and binary images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a synthetic graph")
    gen_sub = p_gen.add_subparsers(dest="model", required=True)
    p_rgg = gen_sub.add_parser("rgg", help="random geometric graph")
    p_rgg.add_argument("--n", type=int, default=100)
    p_rgg.add_argument("--radius", type=float, default=0.1)
    p_rgg.add_argument("--seed", type=int, required=True)
    p_lat = gen_sub.add_parser("lattice", help="square lattice")
    p_lat.add_argument("--side", type=int, default=10)
    p_ws = gen_sub.add_parser("ws", help="Watts-Strogatz small-world graph")
    p_ws.add_argument("--n", type=int, default=100)
    p_ws.add_argument("--k", type=int, default=2, help="neighbours on each side")
    p_ws.add_argument("--p", type=float, default=0.1)
    p_ws.add_argument("--seed", type=int, required=True)
    for p in (p_rgg, p_lat, p_ws):
        p.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_wtm = sub.add_parser("wtm", help="run the threshold contagion on a graph")
    p_wtm.add_argument("--graph", required=True)
    p_wtm.add_argument("--rho0", type=float, default=0.05)
    p_wtm.add_argument("--threshold", type=float, default=0.18)
    p_wtm.add_argument("--seed", type=int, required=True)
    p_wtm.add_argument("--out", required=True)
    p_wtm.set_defaults(func=_cmd_wtm)

    p_ph = sub.add_parser("ph", help="build a filtration and compute its diagram")
    p_ph.add_argument("--graph", help="graph file (for the graph-based sources)")
    p_ph.add_argument("--times", help="infection-times file")
    p_ph.add_argument("--node-values", action="store_true",
                      help="use node values stored in the graph file")
    p_ph.add_argument("--edge-values", action="store_true",
                      help="use edge values stored in the graph file")
    p_ph.add_argument("--image", help="P1/P4 bitmap, or P2/P5 graymap (thresholded)")
    p_ph.add_argument("--cutoff", type=int, default=205,
                      help="threshold applied to graymap input")
    p_ph.add_argument("--out", required=True)
    p_ph.set_defaults(func=_cmd_ph)

    p_t1 = sub.add_parser("table1", help="feature-count statistics over repeated runs")
    p_t1.add_argument("model", choices=MODELS)
    p_t1.add_argument("--runs", type=int, default=100)
    p_t1.add_argument("--seed", type=int, required=True)
    p_t1.set_defaults(func=_cmd_table1)

    p_cmp = sub.add_parser("compare", help="pairwise bottleneck distance matrix")
    p_cmp.add_argument("diagrams", nargs="+", help="diagram files (at least 2)")
    p_cmp.add_argument("--dims", type=int, nargs="+", default=[0, 1],
                       choices=[0, 1])
    p_cmp.add_argument("--out", required=True)
    p_cmp.set_defaults(func=_cmd_compare)

    p_cl = sub.add_parser("cluster", help="average-linkage clustering of a matrix")
    p_cl.add_argument("--matrix", required=True)
    p_cl.add_argument("--k", type=int, required=True)
    p_cl.add_argument("--dendrogram", required=True)
    p_cl.add_argument("--assignment", required=True)
    p_cl.set_defaults(func=_cmd_cluster)

    p_r = sub.add_parser("render", help="render a diagram or dendrogram as SVG")
    p_r.add_argument("input")
    p_r.add_argument("--out", required=True)
    p_r.set_defaults(func=_cmd_render)

    p_th = sub.add_parser("threshold", help="threshold a graymap to a bitmap")
    p_th.add_argument("image")
    p_th.add_argument("--cutoff", type=int, default=205)
    p_th.add_argument("--out", required=True)
    p_th.set_defaults(func=_cmd_threshold)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Error, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
