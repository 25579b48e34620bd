"""Command-line front end.

Subcommands: ``cluster`` (kmeans / dbscan / hier on a point table),
``generate`` (seeded synthetic tables), ``dna`` (FASTA profiles, trees,
and tree comparison), and ``plot`` (SVG figures).

Point tables are CSV with a header naming at least ``r`` and ``theta``
columns (``label`` optional).  Angles are radians unless ``--degrees`` is
given, in which case they are converted once at ingestion.  Exit codes:
0 success, 2 validation failure, 3 I/O failure, 4 no valid cluster
combination found by the K-means search.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import math
import sys
import time
from dataclasses import dataclass

from . import __version__
from .analysis import (
    SyntheticSpec,
    UndefinedCorrelationError,
    cophenetic_correlation,
    generate_synthetic,
)
from .bioseq import DINUCLEOTIDES, FastaError, dna_to_polar, parse_fasta, sequence_dendrogram
from .clustering import (
    LINKAGES,
    DbscanConfig,
    Dendrogram,
    KMeansConfig,
    Labeling,
    Merge,
    cut_dendrogram,
)
from .geometry import PolarPoint, ReconstructionParams, normalize_angle
from .search import (
    NoValidCombinationError,
    circular_dbscan,
    circular_hierarchical,
    circular_kmeans,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_NO_COMBINATION = 4


@dataclass
class PointTable:
    """Parsed point table plus the raw rows needed to echo it back."""

    points: list[PolarPoint]
    labels: Labeling | None
    header: list[str]
    rows: list[list[str]]


def _fmt(value) -> str:
    """Stable scalar rendering: shortest round-trip form for floats."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def read_point_table(path: str, degrees: bool = False) -> PointTable:
    """Load a CSV point table, validating and normalizing as it goes."""
    with open(path, "r", newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected a header row") from None
        columns = [c.strip().lower() for c in header]
        if "r" not in columns or "theta" not in columns:
            raise ValueError(f"{path}: header must name 'r' and 'theta' columns, got {header}")
        r_col = columns.index("r")
        t_col = columns.index("theta")
        l_col = columns.index("label") if "label" in columns else None

        points: list[PolarPoint] = []
        labels: Labeling = []
        rows: list[list[str]] = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) < len(columns):
                raise ValueError(f"{path}:{lineno}: expected {len(columns)} fields, got {len(row)}")
            try:
                r = float(row[r_col])
                theta = float(row[t_col])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: r and theta must be numeric") from None
            if degrees:
                theta = math.radians(theta)
            try:
                points.append(PolarPoint(r, normalize_angle(theta)))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            if l_col is not None:
                try:
                    labels.append(int(row[l_col]))
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: label must be an integer") from None
            rows.append(list(row))
    if not points:
        raise ValueError(f"{path}: no data rows")
    return PointTable(points, labels if l_col is not None else None, header, rows)


def write_labeled_table(table: PointTable, labels: Labeling, path: str) -> None:
    """Echo the input rows with the cluster assignment appended as ``label``.

    An existing ``label`` column (e.g. generator ground truth) is carried
    through under the name ``true_label`` so both survive.
    """
    header = [("true_label" if c.strip().lower() == "label" else c) for c in table.header]
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header + ["label"])
        for row, label in zip(table.rows, labels):
            writer.writerow(row + [label])


def write_merge_list(dend: Dendrogram, path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        handle.write("node_a,node_b,height\n")
        for m in dend.merges:
            handle.write(f"{m.node_a},{m.node_b},{_fmt(m.height)}\n")


def read_merge_list(path: str) -> Dendrogram:
    merges: list[Merge] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split(",")
            if lineno == 1 and parts[0].strip().lower() == "node_a":
                continue
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected node_a,node_b,height")
            try:
                a, b, h = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: malformed merge row") from None
            merges.append(Merge(a, b, h, 0))
    n = len(merges) + 1
    merges = [Merge(m.node_a, m.node_b, m.height, n + i) for i, m in enumerate(merges)]
    return Dendrogram(n, merges)


def newick_string(dend: Dendrogram, leaf_names: list[str] | None = None) -> str:
    """Serialize as Newick with ultrametric branch lengths (half the height gap)."""
    names = leaf_names or [str(i) for i in range(dend.n_leaves)]
    height = {i: 0.0 for i in range(dend.n_leaves)}
    rendered = {i: names[i] for i in range(dend.n_leaves)}
    for m in dend.merges:
        la = (m.height - height[m.node_a]) / 2.0
        lb = (m.height - height[m.node_b]) / 2.0
        rendered[m.new_id] = (
            f"({rendered[m.node_a]}:{_fmt(la)},{rendered[m.node_b]}:{_fmt(lb)})"
        )
        height[m.new_id] = m.height
    return rendered[dend.merges[-1].new_id] + ";"


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        digest.update(handle.read())
    return digest.hexdigest()


def write_report(path: str, fields: list[tuple[str, str]]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for key, value in fields:
            handle.write(f"{key}: {value}\n")


def _base_report(command: str, input_path: str, n_points: int) -> list[tuple[str, str]]:
    return [
        ("tool", f"polarclust {__version__}"),
        ("command", command),
        ("input", input_path),
        ("input_sha256", _sha256(input_path)),
        ("n_points", str(n_points)),
    ]


# ---------------------------------------------------------------------------
# subcommands


def _cmd_cluster(args: argparse.Namespace) -> int:
    table = read_point_table(args.input, degrees=args.degrees)
    params = ReconstructionParams(base_radius=args.radius, repetitions=args.c)
    started = time.perf_counter()
    report = _base_report(f"cluster {args.method}", args.input, len(table.points))
    report += [
        ("angle_unit", "degrees" if args.degrees else "radians"),
        ("radius", _fmt(args.radius)),
        ("c", str(args.c)),
    ]
    labels: Labeling | None = None

    if args.method == "kmeans":
        cfg = KMeansConfig(
            k=args.k, max_iter=args.max_iter, n_restarts=args.restarts, seed=args.seed
        )
        result = circular_kmeans(table.points, args.k, params, cfg)
        labels = result.labels
        report += [
            ("k", str(args.k)),
            ("seed", str(args.seed)),
            ("restarts", str(args.restarts)),
            ("max_iter", str(args.max_iter)),
            ("c_used", str(result.c_used)),
            ("chosen_period", str(result.chosen_period)),
            ("chosen_combination", ",".join(map(str, result.chosen_combination))),
        ]
    elif args.method == "dbscan":
        cfg = DbscanConfig(eps=args.eps, min_pts=args.min_pts)
        result = circular_dbscan(table.points, cfg, params, threshold=args.y)
        labels = result.labels
        patterns = ";".join(
            "|".join(map(str, sorted(pattern))) + f"*{count}"
            for pattern, count in result.retained_patterns
        )
        report += [
            ("eps", _fmt(args.eps)),
            ("min_pts", str(args.min_pts)),
            ("y_threshold", str(result.threshold_used)),
            ("n_classes", str(len(result.retained_patterns))),
            ("n_outliers", str(sum(1 for lab in labels if lab == -1))),
            ("patterns", patterns),
        ]
    else:  # hier
        dend = circular_hierarchical(table.points, params, args.linkage)
        merges_path = args.merges or _derive(args.input, ".merges.csv")
        write_merge_list(dend, merges_path)
        report += [
            ("linkage", args.linkage),
            ("n_merges", str(len(dend.merges))),
            ("merge_heights", ",".join(_fmt(h) for h in dend.heights)),
            ("merges_file", merges_path),
        ]
        if args.newick:
            with open(args.newick, "w", encoding="utf-8") as handle:
                handle.write(newick_string(dend) + "\n")
            report.append(("newick_file", args.newick))
        if args.k is not None:
            labels = cut_dendrogram(dend, args.k)
            report.append(("cut_k", str(args.k)))

    if labels is not None:
        report.append(("labels", ",".join(map(str, labels))))
        out_path = args.output or _derive(args.input, ".labeled.csv")
        write_labeled_table(table, labels, out_path)
        report.append(("labeled_table", out_path))
    if args.timing:
        report.append(("elapsed_seconds", f"{time.perf_counter() - started:.3f}"))
    write_report(args.report or _derive(args.input, ".report.txt"), report)
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.centers:
        centers = tuple(float(x) for x in args.centers.split(","))
    else:
        centers = tuple(i * 2.0 * math.pi / args.classes for i in range(args.classes))
    spec = SyntheticSpec(
        n_points=args.n,
        n_classes=args.classes,
        class_centers=centers,
        angular_spread=args.angular_spread,
        radial_spread=args.radial_spread,
        base_radius=args.base_radius,
        seed=args.seed,
    )
    points, labels = generate_synthetic(spec)
    with open(args.output, "w", newline="", encoding="utf-8") as handle:
        handle.write("r,theta,label\n")
        for p, lab in zip(points, labels):
            handle.write(f"{_fmt(p.r)},{_fmt(p.theta)},{lab}\n")
    return EXIT_OK


def _cmd_dna(args: argparse.Namespace) -> int:
    import os

    with open(args.input, "rb") as handle:
        sequences = parse_fasta(handle.read())
    os.makedirs(args.out_dir, exist_ok=True)
    params = ReconstructionParams(base_radius=args.radius, repetitions=args.c)
    report = _base_report("dna", args.input, len(sequences))
    report += [
        ("radius", _fmt(args.radius)),
        ("c", str(args.c)),
        ("linkage", args.linkage),
        ("sequences", ",".join(s.id for s in sequences)),
    ]
    started = time.perf_counter()

    trees: list[Dendrogram] = []
    for seq in sequences:
        profile = dna_to_polar(seq)
        with open(
            os.path.join(args.out_dir, f"{seq.id}.profile.csv"), "w", encoding="utf-8"
        ) as handle:
            handle.write(profile.as_table())
        tree = sequence_dendrogram(seq, params, args.linkage)
        trees.append(tree)
        write_merge_list(tree, os.path.join(args.out_dir, f"{seq.id}.merges.csv"))

    if len(sequences) >= 2:
        matrix_path = os.path.join(args.out_dir, "cophenetic.csv")
        ids = [s.id for s in sequences]
        with open(matrix_path, "w", newline="", encoding="utf-8") as handle:
            handle.write("," + ",".join(ids) + "\n")
            for i, tree_i in enumerate(trees):
                cells = []
                for j, tree_j in enumerate(trees):
                    if i == j:
                        cells.append("1")
                    else:
                        cells.append(_fmt(cophenetic_correlation(tree_i, tree_j)))
                handle.write(ids[i] + "," + ",".join(cells) + "\n")
        report.append(("cophenetic_matrix", matrix_path))
        for i in range(len(trees)):
            for j in range(i + 1, len(trees)):
                value = cophenetic_correlation(trees[i], trees[j])
                report.append((f"cophenetic_{ids[i]}_{ids[j]}", _fmt(value)))
    if args.timing:
        report.append(("elapsed_seconds", f"{time.perf_counter() - started:.3f}"))
    write_report(args.report or os.path.join(args.out_dir, "report.txt"), report)
    return EXIT_OK


def _cmd_plot(args: argparse.Namespace) -> int:
    from . import plots

    if args.kind == "dendrogram":
        try:
            dend = read_merge_list(args.input)
        except ValueError as exc:
            raise ValueError(f"kind 'dendrogram' needs a merge-list file: {exc}") from exc
        names = list(DINUCLEOTIDES) if dend.n_leaves == 16 and args.dinucleotide_leaves else None
        plots.dendrogram_plot(dend, args.output, names)
        return EXIT_OK

    table = read_point_table(args.input, degrees=args.degrees)
    labels = table.labels if table.labels is not None else [0] * len(table.points)
    if args.kind == "polar_scatter":
        plots.polar_scatter(table.points, labels, args.output)
    else:  # plane_scatter
        params = ReconstructionParams(base_radius=args.radius, repetitions=args.c)
        plots.plane_scatter(table.points, labels, params, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser plumbing


def _derive(input_path: str, suffix: str) -> str:
    stem = input_path[:-4] if input_path.lower().endswith(".csv") else input_path
    return stem + suffix


def _add_common_cluster_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="point table CSV")
    sub.add_argument("--output", help="labeled table path (default: <input>.labeled.csv)")
    sub.add_argument("--report", help="report path (default: <input>.report.txt)")
    sub.add_argument("--radius", type=float, default=1.0,
                     help="base-circle radius weighting angular differences "
                          "(1 = balanced; 10 = angle-driven)")
    sub.add_argument("--degrees", action="store_true", help="input theta is in degrees")
    sub.add_argument("--timing", action="store_true",
                     help="append wall-clock time to the report (breaks byte-for-byte "
                          "reproducibility of report files)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarclust",
        description="Cluster polar-coordinate data on an unrolled cylindrical plane.",
    )
    parser.add_argument("--version", action="version", version=f"polarclust {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    cluster = commands.add_parser("cluster", help="run a circular clusterer on a point table")
    methods = cluster.add_subparsers(dest="method", required=True)

    km = methods.add_parser("kmeans", help="period-repetition K-means search")
    _add_common_cluster_flags(km)
    km.add_argument("--k", type=int, required=True, help="number of clusters")
    km.add_argument("--c", type=int, default=2, help="extra period repetitions (even)")
    km.add_argument("--seed", type=int, default=0)
    km.add_argument("--restarts", type=int, default=16)
    km.add_argument("--max-iter", type=int, default=300)
    km.set_defaults(func=_cmd_cluster)

    db = methods.add_parser("dbscan", help="period-repetition DBSCAN search")
    _add_common_cluster_flags(db)
    db.add_argument("--eps", type=float, required=True, help="neighborhood radius")
    db.add_argument("--min-pts", type=int, required=True,
                    help="minimum neighborhood size, the point itself included")
    db.add_argument("--c", type=int, default=4, help="extra period repetitions")
    db.add_argument("--y", type=int, default=None,
                    help="pattern repetition threshold (default c+1: every period)")
    db.set_defaults(func=_cmd_cluster)

    hi = methods.add_parser("hier", help="period-repetition hierarchical clustering")
    _add_common_cluster_flags(hi)
    hi.add_argument("--linkage", choices=LINKAGES, default="single")
    hi.add_argument("--c", type=int, default=2, help="extra period repetitions")
    hi.add_argument("--merges", help="merge-list path (default: <input>.merges.csv)")
    hi.add_argument("--newick", help="also write a Newick rendering to this path")
    hi.add_argument("--k", type=int, default=None,
                    help="also cut the tree into k flat clusters and write a labeled table")
    hi.set_defaults(func=_cmd_cluster)

    gen = commands.add_parser("generate", help="write a seeded synthetic point table")
    gen.add_argument("--n", type=int, required=True, help="total number of points")
    gen.add_argument("--classes", type=int, required=True)
    gen.add_argument("--centers", help="comma-separated class center angles in radians "
                                       "(default: evenly spaced)")
    gen.add_argument("--angular-spread", type=float, default=0.25)
    gen.add_argument("--radial-spread", type=float, default=0.0)
    gen.add_argument("--base-radius", type=float, default=1.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output", required=True)
    gen.set_defaults(func=_cmd_generate)

    dna = commands.add_parser("dna", help="profile FASTA sequences and compare their trees")
    dna.add_argument("--input", required=True, help="FASTA file")
    dna.add_argument("--out-dir", required=True)
    dna.add_argument("--report", help="report path (default: <out-dir>/report.txt)")
    dna.add_argument("--radius", type=float, default=1.0)
    dna.add_argument("--c", type=int, default=1)
    dna.add_argument("--linkage", choices=LINKAGES, default="single")
    dna.add_argument("--timing", action="store_true")
    dna.set_defaults(func=_cmd_dna)

    plot = commands.add_parser("plot", help="render an SVG figure")
    plot.add_argument("--input", required=True, help="labeled point table or merge-list file")
    plot.add_argument("--kind", required=True,
                      choices=["polar_scatter", "plane_scatter", "dendrogram"])
    plot.add_argument("--output", required=True, help="SVG path")
    plot.add_argument("--radius", type=float, default=1.0)
    plot.add_argument("--c", type=int, default=4, help="periods shown by plane_scatter")
    plot.add_argument("--degrees", action="store_true")
    plot.add_argument("--dinucleotide-leaves", action="store_true",
                      help="label 16-leaf dendrograms with base pairs")
    plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoValidCombinationError as exc:
        print(f"polarclust: {exc}", file=sys.stderr)
        return EXIT_NO_COMBINATION
    except (ValueError, UndefinedCorrelationError) as exc:
        print(f"polarclust: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"polarclust: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
