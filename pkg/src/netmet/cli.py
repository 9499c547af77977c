"""Command-line interface binding the library operations to network files.

Commands: dist, skeleton, blowup, motifs, geodesic, iso, gen.  Every
failure exits nonzero (2) with a one-line reason on stderr; `iso` uses
exit code 1 for "not isomorphic".  Output is deterministic for identical
inputs and flags, except the timing section of distance reports.  The
environment variable NETMET_THREADS bounds the worker count of
`dist --all` (0 or unset = auto).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import fileformat
from .distance import distance_report
from .errors import BudgetError, ParseError
from .generators import constant_network, directed_circle, directed_circle_reversible, random_network
from .geodesics import sample_geodesic
from .isomorphism import strong_isomorphic, weak_isomorphic
from .motifs import motif_set
from .network import Network, blow_up, skeletonize


def _load(path: str) -> Network:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read '{path}': {exc.strerror or exc}") from exc
    try:
        return fileformat.parse_network(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _emit(document: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(document)
    else:
        Path(out).write_text(document)


def _worker_count() -> int:
    raw = os.environ.get("NETMET_THREADS", "0")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"NETMET_THREADS must be an integer, got '{raw}'") from None
    if count < 0:
        raise ValueError("NETMET_THREADS must be nonnegative")
    return count or (os.cpu_count() or 1)


def _cmd_dist(args) -> int:
    orders = tuple(range(1, args.motif_n + 1))
    if args.all:
        directory = Path(args.left)
        paths = sorted(p for p in directory.iterdir() if p.suffix == ".net")
        if len(paths) < 2:
            raise ValueError(f"need at least two .net files in '{directory}' for --all")
        nets = [(p.name, _load(str(p))) for p in paths]
        jobs = [(a, b) for i, a in enumerate(nets) for b in nets[i + 1 :]]

        def run(job):
            (name_a, net_a), (name_b, net_b) = job
            report = distance_report(net_a, net_b, node_budget=args.exact_budget, motif_orders=orders)
            return fileformat.render_distance_report(report, net_a, net_b, name_a, name_b)

        workers = _worker_count()
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                rendered = list(pool.map(run, jobs))
        else:
            rendered = [run(job) for job in jobs]
        sys.stdout.write("\n".join(rendered))
        return 0
    if args.right is None:
        raise ValueError("dist needs two network files (or --all with a directory)")
    left = _load(args.left)
    right = _load(args.right)
    report = distance_report(left, right, node_budget=args.exact_budget, motif_orders=orders)
    sys.stdout.write(fileformat.render_distance_report(report, left, right, args.left, args.right))
    return 0


def _cmd_skeleton(args) -> int:
    net = _load(args.network)
    result = skeletonize(net, args.tolerance)
    document = fileformat.serialize_network(result.skeleton)
    if args.output is None:
        sys.stdout.write(document)
    else:
        Path(args.output).write_text(document)
        for i, cls in enumerate(result.class_of):
            sys.stdout.write(f"map {net.labels[i]} {result.skeleton.labels[cls]}\n")
    return 0


def _cmd_blowup(args) -> int:
    net = _load(args.network)
    try:
        mult = [int(k) for k in args.mult.split(",")]
    except ValueError:
        raise ValueError(f"--mult expects comma-separated integers, got '{args.mult}'") from None
    _emit(fileformat.serialize_network(blow_up(net, mult)), args.output)
    return 0


def _cmd_motifs(args) -> int:
    net = _load(args.network)
    motifs = motif_set(net, args.order, args.tuple_budget)
    _emit(fileformat.render_motif_set(motifs), args.output)
    return 0


def _cmd_geodesic(args) -> int:
    left = _load(args.left)
    right = _load(args.right)
    try:
        ts = [float(t) for t in args.ts.split(",")]
    except ValueError:
        raise ValueError(f"--ts expects comma-separated numbers, got '{args.ts}'") from None
    points = sample_geodesic(left, right, ts, node_budget=args.exact_budget)
    if args.out_dir is None:
        sys.stdout.write("\n".join(fileformat.serialize_network(p.network) for p in points))
        return 0
    directory = Path(args.out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    for raw, point in zip(args.ts.split(","), points):
        path = directory / f"t{raw.strip()}.net"
        path.write_text(fileformat.serialize_network(point.network))
        sys.stdout.write(f"wrote {path}\n")
    return 0


def _cmd_iso(args) -> int:
    left = _load(args.left)
    right = _load(args.right)
    if args.strong:
        witness = strong_isomorphic(left, right, args.epsilon)
        if witness is None:
            sys.stdout.write("strong-isomorphic false\n")
            return 1
        sys.stdout.write("strong-isomorphic true\n")
        for i, j in enumerate(witness.forward):
            sys.stdout.write(f"map {left.labels[i]} {right.labels[j]}\n")
        return 0
    related, witness = weak_isomorphic(left, right, args.epsilon)
    if not related:
        sys.stdout.write("weak-isomorphic false\n")
        return 1
    sys.stdout.write("weak-isomorphic true\n")
    sk_left = skeletonize(left, args.epsilon).skeleton
    sk_right = skeletonize(right, args.epsilon).skeleton
    for i, j in enumerate(witness.forward):
        sys.stdout.write(f"map {sk_left.labels[i]} {sk_right.labels[j]}\n")
    return 0


def _cmd_gen(args) -> int:
    if args.family == "circle":
        net = directed_circle(args.n)
    elif args.family == "circle-rho":
        if args.rho is None:
            raise ValueError("gen circle-rho requires --rho")
        net = directed_circle_reversible(args.n, args.rho)
    elif args.family == "constant":
        if args.value is None:
            raise ValueError("gen constant requires --value")
        net = constant_network(args.n, args.value)
    else:
        net = random_network(args.n, args.low, args.high, args.seed)
    _emit(fileformat.serialize_network(net), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netmet",
                                     description="Distance, motifs, skeleta, isomorphism, and geodesics "
                                                 "for finite weighted directed networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance report between two networks (or all pairs in a directory)")
    p.add_argument("left", help="network file, or a directory with --all")
    p.add_argument("right", nargs="?", default=None, help="second network file")
    p.add_argument("--all", action="store_true", help="treat LEFT as a directory of .net files")
    p.add_argument("--exact-budget", type=int, default=7, metavar="K",
                   help="max nodes per side for the exact solver (default 7)")
    p.add_argument("--motif-n", type=int, default=2, metavar="N",
                   help="compute motif lower bounds for orders 1..N (default 2)")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("skeleton", help="collapse duplicate-profile nodes")
    p.add_argument("network")
    p.add_argument("-o", "--output", default=None, help="write the skeleton here and print the class map")
    p.add_argument("--tolerance", type=float, default=0.0)
    p.set_defaults(func=_cmd_skeleton)

    p = sub.add_parser("blowup", help="replace each node by copies carrying its weights")
    p.add_argument("network")
    p.add_argument("--mult", required=True, help="comma-separated positive multiplicities, one per node")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("motifs", help="enumerate the order-n motif set")
    p.add_argument("network")
    p.add_argument("-n", "--order", type=int, required=True)
    p.add_argument("--tuple-budget", type=int, default=10**6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_motifs)

    p = sub.add_parser("geodesic", help="sample the straight-line geodesic between two networks")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--ts", required=True, help="comma-separated parameters in [0, 1]")
    p.add_argument("--exact-budget", type=int, default=7)
    p.add_argument("-o", "--out-dir", default=None, help="write one network file per parameter here")
    p.set_defaults(func=_cmd_geodesic)

    p = sub.add_parser("iso", help="decide isomorphism (exit 0 yes, 1 no, 2 error)")
    p.add_argument("left")
    p.add_argument("right")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--weak", action="store_true", help="distance-zero equivalence via skeleta (default)")
    group.add_argument("--strong", action="store_true", help="weight-preserving bijection")
    p.add_argument("--epsilon", type=float, default=0.0,
                   help="weight comparison tolerance for noisy data (heuristic)")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("gen", help="generate example networks")
    p.add_argument("family", choices=["circle", "circle-rho", "constant", "random"])
    p.add_argument("n", type=int)
    p.add_argument("--rho", type=float, default=None)
    p.add_argument("--value", type=float, default=None)
    p.add_argument("--low", type=float, default=0.0)
    p.add_argument("--high", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BudgetError, ValueError, OSError) as exc:
        sys.stderr.write(f"netmet: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
