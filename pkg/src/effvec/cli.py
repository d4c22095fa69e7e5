"""Command-line entry point.

Subcommands: validate, check, extend, enumerate, sweep, perron, table,
experiment. Matrices are read from CSV or JSON files; vectors are given
inline ("4/3,7/6,1", fractions allowed) or as files. Exit codes: 0 success,
1 domain error (JSON detail on stderr), 2 usage error. Numeric output uses 6
significant digits to match table precision; --full-precision switches to 17.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .column_means import sweep_all_subsets
from .construction import SamplingStrategy, extension_interval, extend, inductive_enumerate
from .efficiency import build_digraph, is_efficient, is_strongly_connected
from .errors import EffvecError
from .experiments import (
    ExperimentConfig,
    batch_compare,
    best_worst_summary,
    experiment_summary,
    generate_matrices,
    per_matrix_csv,
    subset_statistics,
    subset_stats_csv,
)
from .pcm import load_matrix, load_vector, parse_vector
from .spectral import perron_vector

DEFAULT_SIG = 6
FULL_SIG = 17


def _sig(args) -> int:
    return FULL_SIG if getattr(args, "full_precision", False) else DEFAULT_SIG


def _num(x: float, sig: int) -> float:
    return float(f"{x:.{sig}g}")


def _vec(v, sig: int) -> list:
    return [_num(float(x), sig) for x in v.weights]


def _read_vector(arg: str):
    if os.path.exists(arg):
        return load_vector(arg)
    return parse_vector(arg)


def _resolve_seed(explicit) -> int:
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("EFFVEC_SEED")
    return int(env) if env else 0


def _emit(text: str, args) -> None:
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    matrix = load_matrix(args.matrix)
    _emit(json.dumps({"ok": True, "n": matrix.n}) + "\n", args)
    return 0


def cmd_check(args) -> int:
    matrix = load_matrix(args.matrix)
    vector = _read_vector(args.vector)
    digraph = build_digraph(matrix, vector, args.eps)
    result = is_strongly_connected(digraph)
    out = {
        "efficient": result.strongly_connected,
        "witness": sorted(result.witness) if result.witness else None,
        "edges": [list(e) for e in digraph.edges()],
        "eps": args.eps,
    }
    _emit(json.dumps(out) + "\n", args)
    return 0


def cmd_extend(args) -> int:
    sig = _sig(args)
    matrix = load_matrix(args.matrix)
    vector = _read_vector(args.vector)
    interval = extension_interval(matrix, vector, args.position, args.eps)
    strategy = SamplingStrategy(interior_draws=args.draws)
    rng = np.random.default_rng(_resolve_seed(args.rng_seed))
    extensions = []
    for x in strategy.sample(interval.lo, interval.hi, rng):
        grown = extend(matrix, vector, args.position, x, args.eps)
        extensions.append(
            {
                "x": _num(x, sig),
                "vector": _vec(grown.normalized(), sig),
                "efficient": bool(is_efficient(matrix, grown, args.eps)),
            }
        )
    out = {
        "interval": {"lo": _num(interval.lo, sig), "hi": _num(interval.hi, sig)},
        "extensions": extensions,
    }
    if args.x is not None:
        grown = extend(matrix, vector, args.position, args.x, args.eps)
        out["requested"] = {
            "x": _num(args.x, sig),
            "vector": _vec(grown.normalized(), sig),
            "efficient": bool(is_efficient(matrix, grown, args.eps)),
        }
    _emit(json.dumps(out) + "\n", args)
    return 0


def cmd_enumerate(args) -> int:
    sig = _sig(args)
    matrix = load_matrix(args.matrix)
    seed_set = [int(tok) for tok in args.start.split(",") if tok.strip()]
    family = inductive_enumerate(
        matrix,
        seed_set,
        strategy=SamplingStrategy(interior_draws=args.draws),
        grid=args.grid,
        rng_seed=_resolve_seed(args.rng_seed),
        max_members=args.max_members,
    )
    lines = [json.dumps(_vec(m.normalized(), sig)) for m in family.members]
    _emit("\n".join(lines) + "\n", args)
    if family.provenance.truncated:
        sys.stderr.write(
            json.dumps({"warning": "family truncated", "max_members": args.max_members}) + "\n"
        )
    return 0


def cmd_sweep(args) -> int:
    sig = _sig(args)
    matrix = load_matrix(args.matrix)
    rows = sweep_all_subsets(matrix)
    lines = ["# subset geometric means: deviation norms per subset index"]
    lines.append("index,bitpattern,norm1,norm2," + ",".join(f"w{k}" for k in range(1, matrix.n + 1)))
    for row in rows:
        cells = [str(row.index), row.subset.bitpattern, f"{row.norm1:.{sig}g}", f"{row.norm2:.{sig}g}"]
        cells += [f"{x:.{sig}g}" for x in row.vector.weights]
        lines.append(",".join(cells))
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_perron(args) -> int:
    sig = _sig(args)
    matrix = load_matrix(args.matrix)
    result = perron_vector(matrix, tol=args.tol, max_iter=args.max_iter)
    out = {
        "vector": _vec(result.vector.normalized(), sig),
        "eigenvalue": _num(result.eigenvalue, sig),
        "iterations": result.iterations,
        "residual": _num(result.residual, sig),
        "efficient": bool(is_efficient(matrix, result.vector, args.eps)),
    }
    _emit(json.dumps(out) + "\n", args)
    return 0


def _round_tree(obj, sig: int):
    if isinstance(obj, float):
        return _num(obj, sig)
    if isinstance(obj, dict):
        return {k: _round_tree(v, sig) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_tree(v, sig) for v in obj]
    return obj


def cmd_table(args) -> int:
    sig = _sig(args)
    matrix = load_matrix(args.matrix)
    summary = best_worst_summary(matrix)
    if args.format == "json":
        _emit(json.dumps(_round_tree(summary.to_dict(), sig)) + "\n", args)
        return 0
    lines = ["label,index,bitpattern,norm1,norm2"]
    e1, e2 = summary.norm1, summary.frobenius
    lines.append(f"min_norm1,{e1.min_index},{e1.min_bitpattern},{e1.min_value:.{sig}g},")
    lines.append(f"max_norm1,{e1.max_index},{e1.max_bitpattern},{e1.max_value:.{sig}g},")
    lines.append(f"min_frobenius,{e2.min_index},{e2.min_bitpattern},,{e2.min_value:.{sig}g}")
    lines.append(f"max_frobenius,{e2.max_index},{e2.max_bitpattern},,{e2.max_value:.{sig}g}")
    lines.append(
        f"all_columns,{summary.all_columns_index},"
        f"{'1' * summary.n},{summary.all_columns_norm1:.{sig}g},{summary.all_columns_norm2:.{sig}g}"
    )
    lines.append(f"perron,,,{summary.perron_norm1:.{sig}g},{summary.perron_norm2:.{sig}g}")
    lines.append(f"ratio,,,{e1.ratio:.{sig}g},{e2.ratio:.{sig}g}")
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_experiment(args) -> int:
    norms = tuple(tok.strip() for tok in args.norms.split(",") if tok.strip())
    config = ExperimentConfig(
        n=args.n,
        count=args.count,
        generator=args.generator,
        lo=args.lo,
        hi=args.hi,
        seed=_resolve_seed(args.seed),
        norms=norms,
    )
    matrices = generate_matrices(config)
    records = batch_compare(config, matrices=matrices, max_workers=args.threads)
    stats = None
    if "frobenius" in config.norms:
        stats = subset_statistics(config, matrices=matrices, max_workers=args.threads)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = experiment_summary(config, records, stats)
    (out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    (out_dir / "per_matrix.csv").write_text(per_matrix_csv(records, config.norms), encoding="utf-8")
    if stats is not None:
        (out_dir / "subset_stats.csv").write_text(subset_stats_csv(stats), encoding="utf-8")
    sys.stdout.write(json.dumps({"out_dir": str(out_dir), "matrices": len(records)}) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effvec",
        description="Efficiency tools for priority vectors of reciprocal pairwise-comparison matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vector=False, output=True):
        p.add_argument("-m", "--matrix", required=True, help="matrix file (CSV or JSON)")
        if vector:
            p.add_argument("-w", "--vector", required=True, help="weights, inline or a file path")
        if output:
            p.add_argument("-o", "--output", help="write to file instead of stdout")
        p.add_argument("--full-precision", action="store_true", help="17 significant digits")
        p.add_argument("--eps", type=float, default=1e-9, help="edge tolerance (relative)")

    p = sub.add_parser("validate", help="validate a matrix file")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="decide whether a vector is efficient")
    common(p, vector=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("extend", help="extension interval and sample extensions")
    common(p, vector=True)
    p.add_argument("-p", "--position", type=int, required=True, help="1-based insert position")
    p.add_argument("-x", type=float, help="also extend with this specific value")
    p.add_argument("--draws", type=int, default=3, help="log-uniform interior samples")
    p.add_argument("--rng-seed", type=int, default=None)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("enumerate", help="grow a family of efficient vectors from a seed")
    common(p)
    p.add_argument("--start", required=True, help="comma-separated 1-based seed indices (2 or 3)")
    p.add_argument("--draws", type=int, default=3)
    p.add_argument("--grid", type=int, default=5, help="grid size for 3-index seeds")
    p.add_argument("--max-members", type=int, default=10_000)
    p.add_argument("--rng-seed", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="deviation norms for every column subset")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("perron", help="dominant eigenpair by power iteration")
    common(p)
    p.add_argument("--tol", type=float, default=1e-13)
    p.add_argument("--max-iter", type=int, default=100_000)
    p.set_defaults(func=cmd_perron)

    p = sub.add_parser("table", help="best/worst subset summary with Perron comparison")
    common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("experiment", help="seeded batch benchmark over random matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--generator", choices=("uniform-upper", "hadamard-quotient"), default="uniform-upper")
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=100.0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--norms", default="norm1,frobenius")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--threads", type=int, default=1, help="worker cap for batch loops")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except EffvecError as exc:
        sys.stderr.write(json.dumps(exc.payload()) + "\n")
        return 1
    except FileNotFoundError as exc:
        sys.stderr.write(json.dumps({"error": "FileNotFound", "detail": str(exc)}) + "\n")
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
