"""Command-line interface for monomial ideal polarity and system reliability.

Usage:
    python -m src hilbert data/four_component.ideal
    python -m src reliability data/flow_network.sys --level 4
"""

import argparse
import sys
from typing import Sequence

from dotenv import load_dotenv
from loguru import logger

from src.algebra.betti import betti_numbers
from src.algebra.hilbert import hilbert_numerator, taylor_numerator
from src.algebra.monomials import polarize_ideal
from src.algebra.mvt import (
    PIVOT_REGISTRY,
    get_pivot_strategy,
    mayer_vietoris_tree,
    mvt_numerator,
    rank_totals,
)
from src.bench import (
    BENCH_COLUMNS,
    BenchStats,
    maximal_depolarization,
    monotone_in_level,
    run_consecutive_bench,
    run_ms_experiment,
)
from src.config import PolarityConfig
from src.errors import PolarityError
from src.exporters.dot_exporter import poset_to_dot
from src.exporters.jsonl_exporter import write_records_jsonl
from src.exporters.table_exporter import export_table
from src.models import MonomialIdeal, PathPartition, ProbabilityTable, SystemSpec
from src.parsers.ideal_format import emit_ideal, load_ideal
from src.parsers.system_format import load_system
from src.polar.depolarize import depolarize
from src.polar.enumerate import enumerate_depolarizations
from src.polar.paths import min_path_partition, pd_upper_bound
from src.polar.poset import ordered_support_poset, squarefree_form, support_poset, width
from src.polar.quasi_stable import is_quasi_stable
from src.reliability.bounds import bounds
from src.reliability.evaluate import reliability, reliability_profile
from src.reliability.oracles import exhaustive_reliability, monte_carlo
from src.utils.file_io import write_text_atomic
from src.utils.formatting import format_decimal

# Load environment variables from .env file
load_dotenv()


def setup_logging(verbose: bool = False, log_dir: str = "logs") -> None:
    """Configure loguru logging.

    Args:
        verbose: Whether to enable debug logging on stderr
        log_dir: Directory for the daily log file
    """
    logger.remove()  # Remove default handler

    log_level = "DEBUG" if verbose else "INFO"
    log_format = (
        "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
        "<level>{message}</level>"
    )

    logger.add(sys.stderr, format=log_format, level=log_level, colorize=True)
    logger.add(
        f"{log_dir}/polarity_{{time:YYYY-MM-DD}}.log",
        format=log_format,
        level="DEBUG",
        rotation="1 day",
        retention="30 days",
    )


def parse_blocks(text: str, names: Sequence[str]) -> tuple[tuple[int, ...], ...]:
    """Turn ``"x,y;z"`` into variable-index blocks.

    Raises:
        ValueError: On an unknown or empty name
    """
    index = {name: i for i, name in enumerate(names)}
    blocks = []
    for raw in text.split(";"):
        members = [name.strip() for name in raw.split(",") if name.strip()]
        if not members:
            raise ValueError(f"Empty block in partition {text!r}")
        unknown = [name for name in members if name not in index]
        if unknown:
            raise ValueError(f"Unknown variables {unknown} in partition. Available: {', '.join(names)}")
        blocks.append(tuple(index[name] for name in members))
    return tuple(blocks)


def parse_cases(text: str) -> list[tuple[int, int]]:
    """Turn ``"10:3,20:6"`` into (n, k) pairs."""
    cases = []
    for item in text.split(","):
        n, _, k = item.partition(":")
        try:
            cases.append((int(n), int(k)))
        except ValueError:
            raise ValueError(f"Bench cases look like n:k, got {item!r}")
    return cases


def _emit(text: str, output: str | None) -> None:
    if output:
        write_text_atomic(text, output)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _squarefree_input(path: str) -> MonomialIdeal:
    ideal = load_ideal(path)
    squarefree = squarefree_form(ideal)
    if squarefree is not ideal:
        logger.info(f"Input is not squarefree; working on its polarization {squarefree.format()}")
    return squarefree


def cmd_polarize(args: argparse.Namespace, config: PolarityConfig) -> int:
    polarized, _ = polarize_ideal(load_ideal(args.ideal))
    _emit(emit_ideal(polarized), args.output)
    return 0


def cmd_depolarize(args: argparse.Namespace, config: PolarityConfig) -> int:
    ideal = _squarefree_input(args.ideal)
    names = ideal.variable_names
    if args.partition:
        order = parse_blocks(args.order, names)[0] if args.order else None
        partition = PathPartition(parse_blocks(args.partition, names), order)
        record = depolarize(ideal, partition, names=args.names.split() if args.names else None)
    else:
        record = maximal_depolarization(ideal)
    blocks = " | ".join(",".join(names[v] for v in block) for block in record.partition.blocks)
    logger.info(f"Blocks: {blocks}")
    if args.jsonl:
        write_records_jsonl([record], args.jsonl)
    _emit(emit_ideal(record.result), args.output)
    return 0


def cmd_support_poset(args: argparse.Namespace, config: PolarityConfig) -> int:
    ideal = _squarefree_input(args.ideal)
    poset = support_poset(ideal)
    if args.dot:
        write_text_atomic(poset_to_dot(poset, ideal.variable_names), args.dot)
    names = ideal.variable_names
    partition = min_path_partition(ordered_support_poset(poset))
    for k, members in enumerate(poset.classes):
        c = ",".join(names[v] for v in sorted(poset.class_set(k)))
        print(f"{','.join(names[v] for v in members)}: C = {{{c}}}")
    print(f"width: {width(poset)}")
    paths = " | ".join(",".join(names[v] for v in block) for block in partition.blocks)
    print(f"minimum path partition ({partition.num_blocks}): {paths}")
    print(f"pd upper bound: {pd_upper_bound(ideal)}")
    return 0


def cmd_enumerate(args: argparse.Namespace, config: PolarityConfig) -> int:
    ideal = load_ideal(args.ideal)
    result = enumerate_depolarizations(ideal, config, paths_only=args.paths_only)
    for i, record in enumerate(result.records):
        marker = "*" if i in result.maxima else " "
        print(f"{marker} [{i}] {record.result.num_vars} vars: {record.result.format()}")
    for a, b in result.refinement:
        print(f"  [{a}] < [{b}]")
    if args.jsonl:
        write_records_jsonl(result.records, args.jsonl)
    return 0


def cmd_hilbert(args: argparse.Namespace, config: PolarityConfig) -> int:
    ideal = load_ideal(args.ideal)
    if args.method == "mvt":
        tree = mayer_vietoris_tree(ideal, get_pivot_strategy(args.pivot))
        numerator = mvt_numerator(tree)
        logger.info(f"Mayer-Vietoris tree: {len(tree)} nodes, relevant ranks {rank_totals(tree)}")
    elif args.method == "taylor":
        numerator = taylor_numerator(ideal, config)
    else:
        numerator = hilbert_numerator(ideal)
    if args.graded:
        graded = numerator.total_degree_specialization()
        print(" ".join(f"{d}:{c}" for d, c in graded.items()))
    else:
        print(numerator.format(ideal.variable_names))
    return 0


def cmd_betti(args: argparse.Namespace, config: PolarityConfig) -> int:
    ideal = load_ideal(args.ideal)
    table = betti_numbers(ideal, config)
    for (i, degree), beta in table.graded().items():
        print(f"beta_{i},{degree} = {beta}")
    print(f"totals: {' '.join(map(str, table.totals()))}")
    print(f"pd: {table.proj_dim}")
    print(f"reg: {table.regularity}")
    return 0


def cmd_quasi_stable(args: argparse.Namespace, config: PolarityConfig) -> int:
    ideal = load_ideal(args.ideal)
    stable = is_quasi_stable(ideal)
    print("quasi-stable" if stable else "not quasi-stable")
    return 0


def _load_system_with_table(path: str) -> tuple[SystemSpec, ProbabilityTable]:
    system, probs = load_system(path)
    if probs is None:
        raise PolarityError(f"System file {path} has no probability lines")
    return system, probs


def cmd_reliability(args: argparse.Namespace, config: PolarityConfig) -> int:
    system, probs = _load_system_with_table(args.system)
    places = config.decimal_places
    if args.method == "monte-carlo":
        estimate = monte_carlo(system, probs, args.level or 1, args.trials, args.seed, args.workers, config)
        print(f"R_{args.level or 1} ~ {estimate.mean:.6f} +/- {estimate.std_error:.6f}")
        return 0
    if args.method == "exhaustive":
        levels = [args.level] if args.level is not None else range(1, system.system_levels + 1)
        for j in levels:
            print(f"R_{j} = {format_decimal(exhaustive_reliability(system, probs, j, config), places)}")
        return 0

    reports = (
        [reliability(system, probs, args.level)]
        if args.level is not None
        else reliability_profile(system, probs)
    )
    for report in reports:
        print(
            f"R_{report.level} = {format_decimal(report.reliability, places)}  "
            f"r_{report.level} = {format_decimal(report.point_mass, places)}"
        )
    return 0


def cmd_bounds(args: argparse.Namespace, config: PolarityConfig) -> int:
    system, probs = _load_system_with_table(args.system)
    depths = [int(d) for d in args.depths.split(",")] if args.depths else None
    for step in bounds(system, probs, args.level, depths, args.resolution, config):
        flag = "" if step.brackets else "  (does not bracket)"
        print(
            f"depth {step.depth}: {format_decimal(step.value, config.decimal_places)} "
            f"{step.direction}{flag}"
        )
    return 0


def cmd_bench(args: argparse.Namespace, config: PolarityConfig) -> int:
    if args.ms:
        rows = run_ms_experiment(args.ms, args.components)
        if not monotone_in_level(rows):
            logger.warning("Reliability is not monotone in the level on the grid")
        columns = None
    else:
        cases = args.cases if args.cases else [(args.n, args.k)]
        stats = BenchStats()
        rows = [row.as_dict() for row in run_consecutive_bench(cases, stats)]
        stats.print_summary()
        columns = list(BENCH_COLUMNS)

    if args.output:
        export_table(rows, args.output, columns)
    else:
        header = columns or list(rows[0])
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[c]) for c in header))
    return 0


COMMANDS = {
    "polarize": cmd_polarize,
    "depolarize": cmd_depolarize,
    "support-poset": cmd_support_poset,
    "enumerate": cmd_enumerate,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "quasi-stable": cmd_quasi_stable,
    "reliability": cmd_reliability,
    "bounds": cmd_bounds,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarity",
        description="Polarization, depolarization and reliability of monomial ideals",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Hilbert numerator of an ideal file
  python -m src hilbert data/four_component.ideal

  # Maximal depolarization, or along explicit blocks
  python -m src depolarize data/four_component_polar.ideal
  python -m src depolarize data/four_component_polar.ideal --partition "x1;y1,y2;z1,t1"

  # Support poset as Graphviz DOT
  python -m src support-poset data/nested_supports.ideal --dot poset.dot

  # Exact reliability of every level, then bounds at level 1
  python -m src reliability data/ms_k_out_of_3.sys
  python -m src bounds data/four_component.sys --level 1

  # Consecutive k-out-of-n benchmark written as CSV
  python -m src bench --cases 10:3,20:6 --output bench.csv
        """,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose debug logging")
    parser.add_argument("--config", "-c", help="YAML file with computation limits")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polarize", help="Polarize an ideal file")
    p.add_argument("ideal")
    p.add_argument("--output", "-o", help="Write the ideal here instead of stdout")

    p = sub.add_parser("depolarize", help="Depolarize a squarefree ideal")
    p.add_argument("ideal")
    p.add_argument("--partition", "-p", help='Blocks like "x,y;z" (default: a minimum path partition)')
    p.add_argument("--order", help="Variable order as a comma-separated list, smallest first")
    p.add_argument("--names", help="Space-separated names for the new variables")
    p.add_argument("--jsonl", help="Also write the record as JSON lines")
    p.add_argument("--output", "-o", help="Write the ideal here instead of stdout")

    p = sub.add_parser("support-poset", help="Support poset, width and minimum path partition")
    p.add_argument("ideal")
    p.add_argument("--dot", help="Write the Hasse diagram as DOT")

    p = sub.add_parser("enumerate", help="All depolarizations up to renaming")
    p.add_argument("ideal")
    p.add_argument(
        "--paths-only", action="store_true", help="Search path partitions only (can miss depolarizations)"
    )
    p.add_argument("--jsonl", help="Write the records as JSON lines")

    p = sub.add_parser("hilbert", help="Multigraded Hilbert numerator")
    p.add_argument("ideal")
    p.add_argument("--method", choices=["split", "mvt", "taylor"], default="split")
    p.add_argument(
        "--pivot", choices=list(PIVOT_REGISTRY), default="last", help="MVT pivot strategy (default: last)"
    )
    p.add_argument("--graded", action="store_true", help="Print the total-degree specialization")

    p = sub.add_parser("betti", help="Betti numbers, projective dimension and regularity")
    p.add_argument("ideal")

    p = sub.add_parser("quasi-stable", help="Test whether an ideal is quasi-stable")
    p.add_argument("ideal")

    p = sub.add_parser("reliability", help="Exact or sampled level reliabilities")
    p.add_argument("system")
    p.add_argument("--level", "-j", type=int, help="Level j (default: every level)")
    p.add_argument("--method", choices=["exact", "exhaustive", "monte-carlo"], default="exact")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bounds", help="Truncated resolution bounds for a level")
    p.add_argument("system")
    p.add_argument("--level", "-j", type=int, required=True)
    p.add_argument("--depths", help="Comma-separated truncation depths (default: all)")
    p.add_argument("--resolution", choices=["mvt", "taylor"], default="mvt")

    p = sub.add_parser("bench", help="Depolarization benchmark or MS k-out-of-n experiment")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--cases", type=parse_cases, help="Comma-separated n:k pairs")
    p.add_argument("--ms", type=int, nargs="+", help="Thresholds k_1 .. k_m of an MS k-out-of-n system")
    p.add_argument("--components", type=int, default=10, help="Components for --ms (default: 10)")
    p.add_argument("--output", "-o", help="Write a .csv or .xlsx table")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point.

    Returns:
        Exit code (0 for success, 1 for domain errors, 2 for usage errors)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = PolarityConfig.from_yaml(args.config) if args.config else PolarityConfig.from_env()
    except (ValueError, FileNotFoundError) as e:
        setup_logging(args.verbose)
        logger.error(str(e))
        return 1
    setup_logging(args.verbose, config.log_dir)

    try:
        code = COMMANDS[args.command](args, config)
        logger.success(f"{args.command} finished")
        return code
    except (PolarityError, ValueError, FileNotFoundError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1
    except Exception as e:
        logger.exception(f"{args.command} failed: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
