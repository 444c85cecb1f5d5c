"""Command-line interface.

Subcommands: ``rank`` (aggregate a ranks table by one method), ``analyze``
(majority matrices and cycle counts), ``correlate`` (pairwise correlation
matrix), ``metarank`` (rank the candidate rankings), ``cip`` (cardinal
index from raw indicators) and ``reproduce`` (recompute the bundled case
study against its reference tables).

Exit codes: 0 success, 1 failed check or numerical failure, 2 usage or
input error.  Output formatting is fixed (tau-b three decimals, shares
two, probabilities six significant digits) so repeated runs are
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path
from typing import TextIO

from . import io as mio
from .cip import cip_index, cip_ranking
from .copeland import copeland_ranking
from .core import DENSE, SCHEMES
from .correlation import COINCIDING, TAU_B, correlation_matrix
from .errors import DegenerateRankingError, InputError, NumericalError, SingletonLeagueError, SizeLimitError
from .majority import build_majority, count_cycles
from .markovian import markovian_ranking
from .metarank import closest_weak_order, rankings_majority
from .solutions import sort_by_solution

METHODS = ("copeland1", "copeland2", "copeland3", "uc-sort", "mes-sort", "wtc-sort", "markovian")
MEASURE_FLAGS = {"tau-b": TAU_B, "coinciding": COINCIDING}
_MEASURE_DECIMALS = {TAU_B: 3, COINCIDING: 2}


def _open_output(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return Path(path).open("w", encoding="utf-8", newline=""), True


def _load_profile(ranks_csv: str, weights_path: str | None):
    alternatives, rankings = mio.load_ranks(ranks_csv)
    weights_file = Path(weights_path) if weights_path else mio.bundled_fixtures_dir() / "weights.cfg"
    weights = mio.load_weights(weights_file)
    return alternatives, rankings, mio.build_profile(alternatives, rankings, weights)


def _aggregate(structure, method: str, scheme: str):
    if method == "copeland1":
        return copeland_ranking(structure, 1, scheme=scheme)
    if method == "copeland2":
        return copeland_ranking(structure, 2, scheme=scheme)
    if method == "copeland3":
        return copeland_ranking(structure, 3, scheme=scheme)
    if method == "markovian":
        return markovian_ranking(structure, scheme=scheme)
    kind = {"uc-sort": "UC", "mes-sort": "MES", "wtc-sort": "WTC"}[method]
    return sort_by_solution(structure, kind).ranking(scheme=scheme)


def cmd_rank(args: argparse.Namespace) -> int:
    _, _, profile = _load_profile(args.ranks_csv, args.weights)
    structure = build_majority(profile)
    ranking = _aggregate(structure, args.method, args.scheme)
    handle, close = _open_output(args.output)
    try:
        mio.save_ranking(handle, ranking)
    finally:
        if close:
            handle.close()
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    _, _, profile = _load_profile(args.ranks_csv, args.weights)
    structure = build_majority(profile)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    labels = structure.alternatives.items
    mio.write_labeled_matrix(outdir / "M.csv", labels, structure.beats.astype(int))
    mio.write_labeled_matrix(outdir / "T.csv", labels, structure.ties.astype(int))
    with (outdir / "cycles.csv").open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["k", "cycles"])
        for k in (3, 4, 5):
            writer.writerow([k, count_cycles(structure, k)])
    return 0


def cmd_correlate(args: argparse.Namespace) -> int:
    _, rankings = mio.load_ranks(args.ranks_csv)
    measure = MEASURE_FLAGS[args.measure]
    matrix = correlation_matrix(rankings, measure)
    decimals = _MEASURE_DECIMALS[measure]
    handle, close = _open_output(args.output)
    try:
        mio.write_labeled_matrix(handle, matrix.labels, matrix.values, fmt=lambda v: f"{v:.{decimals}f}")
    finally:
        if close:
            handle.close()
    return 0


def _write_dot(handle: TextIO, comparison) -> None:
    handle.write("digraph meta {\n")
    for name in comparison.candidates:
        handle.write(f'  "{name}";\n')
    n = len(comparison.candidates)
    for i in range(n):
        for j in range(n):
            if comparison.majority[i, j]:
                handle.write(
                    f'  "{comparison.candidates[i]}" -> "{comparison.candidates[j]}"'
                    f' [label="{int(comparison.wins[i, j])}"];\n'
                )
    handle.write("}\n")


def cmd_metarank(args: argparse.Namespace) -> int:
    alternatives, rankings, profile = _load_profile(args.ranks_csv, args.weights)
    candidates = dict(rankings)
    for extra in args.candidates or ():
        extra_alternatives, extra_rankings = mio.load_ranks(extra)
        if extra_alternatives.items != alternatives.items:
            raise InputError(f"{extra}: candidate table covers a different alternative set")
        for name, ranking in extra_rankings.items():
            if name in candidates:
                raise InputError(f"duplicate candidate column {name!r}")
            candidates[name] = ranking
    measure = MEASURE_FLAGS[args.measure]
    comparison = rankings_majority(candidates, list(profile.criteria), measure)
    weak_order = closest_weak_order(comparison)
    if args.emit_dot:
        with Path(args.emit_dot).open("w", encoding="utf-8") as handle:
            _write_dot(handle, comparison)
    handle, close = _open_output(args.output)
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["candidate", "rank", *(f"wins_vs_{name}" for name in comparison.candidates)])
        order = sorted(comparison.candidates, key=lambda name: (weak_order.ranks[name], name))
        for name in order:
            i = comparison.candidates.index(name)
            writer.writerow([name, weak_order.ranks[name], *(int(w) for w in comparison.wins[i])])
    finally:
        if close:
            handle.close()
    return 0


def cmd_cip(args: argparse.Namespace) -> int:
    records = mio.load_indicators(args.indicators_csv)
    ranking = cip_ranking(records, scheme=args.scheme)
    handle, close = _open_output(args.output)
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["country", "index", "rank"])
        for record in records:
            writer.writerow([record.country, f"{cip_index(record):.6g}", ranking.ranks[record.country]])
    finally:
        if close:
            handle.close()
    return 0


def cmd_reproduce(args: argparse.Namespace) -> int:
    report = mio.run_reproduce(args.fixtures_dir)
    print(report.format_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majorityrank",
        description="Aggregate criteria rankings with majority-rule methods and analyse the results.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="aggregate a ranks table into a single ranking")
    p_rank.add_argument("ranks_csv")
    p_rank.add_argument("--method", choices=METHODS, required=True)
    p_rank.add_argument("--weights", help="criterion weights config (default: bundled study weights)")
    p_rank.add_argument("--scheme", choices=SCHEMES, default=DENSE)
    p_rank.add_argument("--output", help="output CSV (default: stdout)")
    p_rank.set_defaults(func=cmd_rank)

    p_analyze = sub.add_parser("analyze", help="emit majority matrices M.csv/T.csv and cycles.csv")
    p_analyze.add_argument("ranks_csv")
    p_analyze.add_argument("--weights")
    p_analyze.add_argument("--output", required=True, help="output directory")
    p_analyze.set_defaults(func=cmd_analyze)

    p_correlate = sub.add_parser("correlate", help="pairwise correlation matrix of the table's columns")
    p_correlate.add_argument("ranks_csv")
    p_correlate.add_argument("--measure", choices=sorted(MEASURE_FLAGS), default="tau-b")
    p_correlate.add_argument("--output")
    p_correlate.set_defaults(func=cmd_correlate)

    p_meta = sub.add_parser("metarank", help="rank candidate rankings by weighted criterion closeness")
    p_meta.add_argument("ranks_csv", help="criteria table (also the default candidate set)")
    p_meta.add_argument("--candidates", nargs="*", help="extra CSV tables of candidate columns")
    p_meta.add_argument("--weights")
    p_meta.add_argument("--measure", choices=sorted(MEASURE_FLAGS), default="tau-b")
    p_meta.add_argument("--emit-dot", help="write the majority digraph in DOT format")
    p_meta.add_argument("--output")
    p_meta.set_defaults(func=cmd_metarank)

    p_cip = sub.add_parser("cip", help="cardinal index and ranking from raw indicator values")
    p_cip.add_argument("indicators_csv")
    p_cip.add_argument("--scheme", choices=SCHEMES, default=DENSE)
    p_cip.add_argument("--output")
    p_cip.set_defaults(func=cmd_cip)

    p_repro = sub.add_parser("reproduce", help="recompute the bundled case study and diff against references")
    p_repro.add_argument("fixtures_dir", nargs="?", help="fixture directory (default: bundled)")
    p_repro.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SingletonLeagueError, SizeLimitError, DegenerateRankingError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
