"""Command-line front end: ``hjreach run | bench | convergence``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from hjreach.runner import ConfigError, RunConfig, bench, load_config, parse_bool, run
from hjreach.studies import format_table, spatial_convergence


def _add_run_flags(parser):
    parser.add_argument("--config", type=Path, help="key = value config file")
    parser.add_argument("--problem", help="rockets | rigid_rotation")
    parser.add_argument("--grid-counts", type=int, help="nodes per dimension")
    parser.add_argument("--tspan", type=float, nargs=2, metavar=("T0", "TF"))
    parser.add_argument("--checkpoints", type=int, help="snapshots including the initial one")
    parser.add_argument("--scheme", help="first | eno2 | eno3 | weno5")
    parser.add_argument("--integrator", help="cfl_1 | cfl_2 | cfl_3")
    parser.add_argument("--cfl-factor", type=float)
    parser.add_argument("--clamp", type=parse_bool, metavar="BOOL",
                        help="restrict updates so the zero sublevel set only grows")
    parser.add_argument("--output", help="output directory")
    parser.add_argument("--seed", type=int)


def _config_from_args(args) -> RunConfig:
    config = RunConfig()
    if args.config is not None:
        config = load_config(args.config, config)
    config = config.updated(
        problem=args.problem,
        grid_counts=args.grid_counts,
        tspan=tuple(args.tspan) if args.tspan else None,
        checkpoints=args.checkpoints,
        scheme=args.scheme,
        integrator=args.integrator,
        cfl_factor=args.cfl_factor,
        clamp=args.clamp,
        output_dir=args.output,
        seed=args.seed,
    )
    return config.validate()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hjreach",
        description="Level-set solvers for time-dependent Hamilton-Jacobi equations.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="solve once and write snapshots and a report")
    _add_run_flags(p_run)

    p_bench = sub.add_parser("bench", help="time repeated solves")
    _add_run_flags(p_bench)
    p_bench.add_argument("--repeats", type=int, default=20)

    p_conv = sub.add_parser("convergence", help="spatial refinement study on sin(2 pi x)")
    p_conv.add_argument("--scheme", default="weno5")
    p_conv.add_argument("--refinements", type=int, default=4)
    p_conv.add_argument("--n0", type=int, default=32)
    p_conv.add_argument("--profile", default="sine", choices=["sine", "linear"])
    p_conv.add_argument("--output", help="also write the table to OUTPUT/convergence.tsv")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.command == "run":
            report = run(_config_from_args(args))
            print(report.to_text(), end="")
        elif args.command == "bench":
            config = _config_from_args(args)
            report = bench(config, args.repeats)
            out = Path(config.output_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / "bench_report.txt").write_text(report.to_text())
            print(report.to_text(), end="")
        else:
            table = format_table(
                spatial_convergence(args.scheme, args.refinements, args.n0, args.profile)
            )
            print(table)
            if args.output:
                out = Path(args.output)
                out.mkdir(parents=True, exist_ok=True)
                (out / "convergence.tsv").write_text(table + "\n")
    except (ConfigError, ValueError) as exc:
        print(f"hjreach: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"hjreach: I/O error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
