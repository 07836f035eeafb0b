"""
Command-line entry point.

Usage:
    python -m hopfext.cli run fixtures/jordan-p3.toml [--out report.json]
    python -m hopfext.cli list-fixtures
    python -m hopfext.cli betti --algebra fixtures/betti-jordan.toml --method both --max-degree 4
    python -m hopfext.cli twist-check --config fixtures/laestry-p3-q-1.toml
    python -m hopfext.cli verify-extension --config fixtures/jordan-p3.toml --level cleft
    python -m hopfext.cli emit-presentation --config fixtures/jordan-p3.toml [--bosonization]
"""
from __future__ import annotations

import argparse
import json
import sys
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from hopfext.api.schemas import BettiBlock, BettiTable, Report
from hopfext.core.enums import BettiMethod, ExtensionLevel, TaskKind, Verdict
from hopfext.core.errors import HopfextError, InconclusiveError, ParseError
from hopfext.core.field import field_make
from hopfext.core.logger import log, log_error
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.presentation import emit_presentation, load_presentation
from hopfext.services.cohomology.probe import export_betti_csv, fgc_probe
from hopfext.services.nichols.bosonization import bosonization_presentation
from hopfext.services.nichols.braided import realize
from hopfext.services.nichols.data import braiding_data_from_block
from hopfext.services.nichols.presentation import nichols_presentation
from hopfext.services.scenarios.loader import list_fixtures, load_scenario
from hopfext.services.scenarios.runner import betti_tables, exit_code, run_scenario, worst, write_report


def _run_one(path: str, args: argparse.Namespace, update: dict | None = None) -> Report:
    config = load_scenario(path)
    if update:
        config = config.model_copy(update=update)
    report = run_scenario(
        config,
        seed=args.seed,
        max_degree=args.max_degree,
        level=ExtensionLevel(args.level) if getattr(args, "level", None) else None,
        budget_mb=args.budget_mb,
    )
    return report


def _emit(report: Report, out: str | None) -> None:
    if out:
        write_report(report, out)
    print(report.model_dump_json(indent=2))


def cmd_run(args: argparse.Namespace) -> int:
    if len(args.configs) == 1 or args.jobs == 1:
        reports = [_run_one(p, args) for p in args.configs]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, args.configs, [args] * len(args.configs)))
    for report in reports:
        out = args.out
        if out and len(reports) > 1:
            out = str(Path(out) / f"{report.scenario}.json")
        _emit(report, out)
    return exit_code(worst(r.verdict for r in reports))


def cmd_list_fixtures(args: argparse.Namespace) -> int:
    entries = list_fixtures(args.dir)
    if not entries:
        print("No fixtures found.")
        return 0
    print(f"\n{'Name':<22} {'Tasks':<40} Anchor")
    print("-" * 100)
    for e in entries:
        print(f"{e.name:<22} {','.join(e.tasks):<40} {e.anchor or ''}")
    print(f"\nTotal: {len(entries)} fixtures")
    return 0


def _probe(table: BettiTable) -> dict | None:
    # too few degrees for a growth estimate
    if len(table.betti) < 4:
        return None
    return fgc_probe(table).model_dump(mode="json")


def cmd_betti(args: argparse.Namespace) -> int:
    path = Path(args.algebra)
    data = tomllib.loads(path.read_text(encoding="utf-8"))
    if "relations" not in data:
        config = load_scenario(path)
        block = (config.betti or BettiBlock()).model_copy(update={"method": BettiMethod(args.method)})
        return cmd_scenario_task(args, path, TaskKind.BETTI, {"betti": block})
    alg = FinBasisAlgebra.build(load_presentation(path))
    tables, verdict, message = betti_tables(alg, BettiMethod(args.method), args.max_degree or 4, args.budget_mb)
    if args.out:
        export_betti_csv(tables, Path(args.out).with_suffix(".csv"))
    payload = {
        "algebra": alg.name,
        "verdict": verdict.value,
        "message": message,
        "tables": [t.model_dump(mode="json") for t in tables],
        "fgc_probe": [_probe(t) for t in tables],
    }
    print(json.dumps(payload, indent=2))
    return exit_code(verdict)


def cmd_scenario_task(args: argparse.Namespace, path, task: TaskKind, update: dict | None = None) -> int:
    tasks = [task] if task in (TaskKind.TWIST_CHECK, TaskKind.BETTI) else [TaskKind.BUILD, task]
    report = _run_one(str(path), args, {"tasks": tasks, **(update or {})})
    _emit(report, args.out)
    return exit_code(report.verdict)


def cmd_emit_presentation(args: argparse.Namespace) -> int:
    config = load_scenario(args.config)
    if config.family is None:
        raise ParseError(f"{args.config}: emit-presentation needs a [family] block")
    field = field_make(config.field.p, config.field.m, config.field.modulus)
    d = braiding_data_from_block(field, config.family)
    pres = nichols_presentation(d)
    if args.bosonization:
        pres = bosonization_presentation(pres, realize(d, config.family.f or d.minimal_f))
    text = emit_presentation(pres)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=None, help="Cohomological / search degree bound")
    common.add_argument("--budget-mb", type=int, default=None, help="Memory budget (MB); tightens the Betti size caps")
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled checks")
    common.add_argument("--out", default=None, help="Output path")

    parser = argparse.ArgumentParser(prog="hopfext", description="Hopf algebra verification harness")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    run_parser = subparsers.add_parser("run", parents=[common], help="Run scenario files")
    run_parser.add_argument("configs", nargs="+", help="Scenario TOML files")
    run_parser.add_argument("--level", choices=[l.value for l in ExtensionLevel], default=None)
    run_parser.add_argument("--jobs", type=int, default=1, help="Scenarios run in parallel processes")

    list_parser = subparsers.add_parser("list-fixtures", help="List bundled scenario files")
    list_parser.add_argument("--dir", default=None, help="Fixture directory")

    betti_parser = subparsers.add_parser("betti", parents=[common], help="Betti numbers of Ext(k,k)")
    betti_parser.add_argument("--algebra", required=True, help="Presentation or scenario TOML")
    betti_parser.add_argument("--method", choices=[m.value for m in BettiMethod], default=BettiMethod.BOTH.value)

    twist_parser = subparsers.add_parser("twist-check", parents=[common], help="Twist-equivalence report")
    twist_parser.add_argument("--config", required=True)

    ext_parser = subparsers.add_parser("verify-extension", parents=[common], help="exact / cleft / split checks")
    ext_parser.add_argument("--config", required=True)
    ext_parser.add_argument("--level", choices=[l.value for l in ExtensionLevel], default=ExtensionLevel.SPLIT.value)

    emit_parser = subparsers.add_parser("emit-presentation", parents=[common], help="Print the induced presentation")
    emit_parser.add_argument("--config", required=True)
    emit_parser.add_argument("--bosonization", action="store_true", help="Emit the bosonization instead")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args)
        elif args.command == "list-fixtures":
            return cmd_list_fixtures(args)
        elif args.command == "betti":
            return cmd_betti(args)
        elif args.command == "twist-check":
            return cmd_scenario_task(args, args.config, TaskKind.TWIST_CHECK)
        elif args.command == "verify-extension":
            return cmd_scenario_task(args, args.config, TaskKind.VERIFY_EXTENSION)
        elif args.command == "emit-presentation":
            return cmd_emit_presentation(args)
        parser.print_help()
        return 0
    except ParseError as e:
        log_error("parse", str(e))
        return exit_code(Verdict.FAIL)
    except InconclusiveError as e:
        log("INCONCLUSIVE", command=args.command, msg=str(e))
        return exit_code(Verdict.INCONCLUSIVE)
    except (HopfextError, OSError, tomllib.TOMLDecodeError) as e:
        log_error(args.command, str(e))
        return exit_code(Verdict.FAIL)


if __name__ == "__main__":
    sys.exit(main())
