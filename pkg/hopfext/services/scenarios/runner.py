"""Run the tasks of a scenario in order and collect a Report."""
from __future__ import annotations

import time
from pathlib import Path
from typing import Callable

from hopfext import __version__
from hopfext.api.schemas import BettiTable, Report, ScenarioConfig, TaskReport, VerificationReport
from hopfext.core.config import settings
from hopfext.core.enums import BettiMethod, ExtensionLevel, TaskKind, Verdict
from hopfext.core.errors import BudgetError, FieldError, HopfextError, InconclusiveError
from hopfext.core.field import FieldSpec, field_make
from hopfext.core.logger import log, log_error
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.presentation import make_presentation
from hopfext.services.cohomology.augmented import AugmentedAlgebra
from hopfext.services.cohomology.betti import bar_betti, minimal_graded_betti
from hopfext.services.cohomology.probe import export_betti_csv
from hopfext.services.extensions.bicrossed import extract_datum
from hopfext.services.extensions.restricted import split_extension
from hopfext.services.extensions.sequence import verify_extension
from hopfext.services.hopf.axioms import check_hopf
from hopfext.services.hopf.structure import HopfStructure
from hopfext.services.lie.ghost import build_l_from_data, ghost_matched_pair, small_enveloping
from hopfext.services.lie.matched import verify_matched_pair
from hopfext.services.lie.restricted import verify_restricted
from hopfext.services.nichols.bosonization import bosonize
from hopfext.services.nichols.braided import realize
from hopfext.services.nichols.data import BraidingData, braiding_data_from_block
from hopfext.services.nichols.presentation import nichols_algebra
from hopfext.services.scenarios.loader import config_hash
from hopfext.services.twist.twist import verify_twist_iso

EXIT_CODES = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.INCONCLUSIVE: 2}


def exit_code(verdict: Verdict) -> int:
    return EXIT_CODES[verdict]


def worst(verdicts) -> Verdict:
    verdicts = set(verdicts)
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    return Verdict.PASS


class ScenarioContext:
    """Objects shared between the tasks of one run; built on first use."""

    def __init__(self, config: ScenarioConfig, seed: int | None, max_degree: int | None, level: ExtensionLevel,
                 budget_mb: int | None = None):
        self.config = config
        self.seed = seed
        self.max_degree = max_degree
        self.level = level
        self.budget_mb = budget_mb or settings.budget_mb
        self.field: FieldSpec = field_make(config.field.p, config.field.m, config.field.modulus)
        self.dimensions: dict[str, int] = {}
        self._data: BraidingData | None = None
        self._nichols: FinBasisAlgebra | None = None
        self._hopf: HopfStructure | None = None

    @property
    def data(self) -> BraidingData:
        if self._data is None:
            self._data = braiding_data_from_block(self.field, self.config.family)
        return self._data

    @property
    def f(self) -> int:
        return self.config.family.f or self.data.minimal_f

    def nichols(self) -> FinBasisAlgebra:
        if self._nichols is None:
            self._nichols = nichols_algebra(self.data)
            self.dimensions["nichols"] = self._nichols.dim
        return self._nichols

    def hopf(self) -> HopfStructure:
        if self._hopf is None:
            self._hopf = bosonize(self.nichols(), realize(self.data, self.f))
            self.dimensions["bosonization"] = self._hopf.dim
        return self._hopf


def _from_reports(task: TaskKind, reports: list[VerificationReport], **detail) -> TaskReport:
    verdict = worst(r.verdict for r in reports)
    failures = [f"{r.subject}: {c.name}: {c.witness}" for r in reports for c in r.failures()]
    detail["checks"] = {f"{r.subject}/{c.name}": c.verdict.value for r in reports for c in r.checks}
    return TaskReport(task=task, verdict=verdict, message=failures[0] if failures else None, detail=detail)


# ── tasks ──

def task_build(ctx: ScenarioContext) -> TaskReport:
    alg = ctx.nichols()
    expected = alg.presentation.expected_dimension
    verdict = Verdict.PASS if alg.dimension_matches else Verdict.FAIL
    message = None if alg.dimension_matches else f"found {alg.dim} normal words, expected {expected}"
    return TaskReport(task=TaskKind.BUILD, verdict=verdict, message=message,
                      detail={"dim": alg.dim, "expected": expected, "hilbert": alg.hilbert_series(), "f": ctx.f})


def task_verify_hopf(ctx: ScenarioContext) -> TaskReport:
    report = check_hopf(ctx.hopf(), ctx.config.mode)
    return _from_reports(TaskKind.VERIFY_HOPF, [report], dim=report.dimension, mode=report.mode.value)


def task_verify_extension(ctx: ScenarioContext) -> TaskReport:
    ext, pair = split_extension(ctx.data, ctx.f)
    ctx.dimensions.update({f"extension_{k}": v for k, v in ext.dimensions.items()})
    reports: list[VerificationReport] = verify_extension(ext, pair, ctx.level, ctx.config.mode, ctx.seed)
    detail = {"dimensions": ext.dimensions, "levels": [r.level.value for r in reports], "abelian": reports[0].abelian}
    split_done = ctx.level == ExtensionLevel.SPLIT and len(reports) == 3 and all(r.passed for r in reports)
    if split_done and ext.H.dim <= settings.extension_exhaustive_cap:
        _, datum_report = extract_datum(ext, pair, split=True)
        reports.append(datum_report)
        detail["sigma_trivial"] = datum_report.sigma_trivial
        detail["tau_trivial"] = datum_report.tau_trivial
    return _from_reports(TaskKind.VERIFY_EXTENSION, reports, **detail)


def task_twist(ctx: ScenarioContext) -> TaskReport:
    d = ctx.data
    twist = ctx.config.twist
    if twist is not None and twist.q_target is not None:
        block = ctx.config.family.model_copy(update={"q": twist.q_target})
        d = braiding_data_from_block(ctx.field, block)
    f = ctx.config.family.f or d.minimal_f
    report = verify_twist_iso(d, f, seed=ctx.seed)
    ctx.dimensions.update({f"twist_{k}": v for k, v in report.dimensions.items()})
    return _from_reports(TaskKind.TWIST_CHECK, [report], hilbert=report.hilbert_twisted, dims=report.dimensions)


def betti_tables(alg: FinBasisAlgebra, method: BettiMethod, max_degree: int,
                 budget_mb: int | None = None) -> tuple[list[BettiTable], Verdict, str | None]:
    """Compute the requested tables; with both methods they must agree wherever both ran.

    With both methods a minimal resolution over budget is skipped and noted; the bar table stands.
    """
    aug = AugmentedAlgebra(alg)
    tables = []
    skipped = None
    if method in (BettiMethod.BAR, BettiMethod.BOTH):
        tables.append(bar_betti(aug, max_degree, budget_mb))
    if method == BettiMethod.MINIMAL:
        tables.append(minimal_graded_betti(aug, max_degree, budget_mb))
    elif method == BettiMethod.BOTH and aug.connected:
        try:
            tables.append(minimal_graded_betti(aug, max_degree, budget_mb))
        except BudgetError as e:
            log("INCONCLUSIVE", op="minimal", algebra=alg.name, msg=str(e))
            skipped = f"minimal skipped: {e}"
    if len(tables) == 2:
        n = min(len(t.betti) for t in tables)
        if tables[0].betti[:n] != tables[1].betti[:n]:
            return tables, Verdict.FAIL, f"bar {tables[0].betti[:n]} vs minimal {tables[1].betti[:n]}"
    cut = [t for t in tables if not t.complete]
    if cut and not any(t.complete for t in tables):
        return tables, Verdict.INCONCLUSIVE, "; ".join(filter(None, [cut[0].note, skipped]))
    return tables, Verdict.PASS, skipped


def task_betti(ctx: ScenarioContext) -> TaskReport:
    block = ctx.config.betti
    if block is not None and block.algebra == "custom":
        pres = make_presentation(ctx.field, block.generators, block.relations, name=ctx.config.name)
        top = max((rel.degree() for rel in pres.relations), default=1)
        alg = FinBasisAlgebra.build(pres, block.degree_bound or 4 * top)
    else:
        alg = ctx.nichols()
    method = block.method if block else BettiMethod.BOTH
    max_degree = ctx.max_degree or (block.max_degree if block else 4)
    tables, verdict, message = betti_tables(alg, method, max_degree, ctx.budget_mb)
    if ctx.config.out:
        export_betti_csv(tables, Path(ctx.config.out).with_suffix(".csv"))
    return TaskReport(task=TaskKind.BETTI, verdict=verdict, message=message,
                      detail={t.method.value: t.betti for t in tables} | {"algebra": alg.name})


def task_lie(ctx: ScenarioContext) -> TaskReport:
    lie = build_l_from_data(ctx.data)
    u = small_enveloping(lie)
    ctx.dimensions.update({"lie": lie.dim, "enveloping": u.dim})
    reports = [verify_restricted(lie, seed=ctx.seed), verify_matched_pair(ghost_matched_pair(lie))]
    out = _from_reports(TaskKind.LIE, reports, dim=lie.dim, enveloping=u.dim)
    if u.dim != ctx.field.p ** lie.dim:
        out.verdict = Verdict.FAIL
        out.message = f"dim u(l) = {u.dim}, expected {ctx.field.p ** lie.dim}"
    return out


TASKS: dict[TaskKind, Callable[[ScenarioContext], TaskReport]] = {
    TaskKind.BUILD: task_build,
    TaskKind.VERIFY_HOPF: task_verify_hopf,
    TaskKind.VERIFY_EXTENSION: task_verify_extension,
    TaskKind.TWIST_CHECK: task_twist,
    TaskKind.BETTI: task_betti,
    TaskKind.LIE: task_lie,
}


def _run_task(ctx: ScenarioContext, task: TaskKind) -> TaskReport:
    start = time.perf_counter()
    log("TASK", scenario=ctx.config.name, task=task.value)
    try:
        report = TASKS[task](ctx)
    except InconclusiveError as e:
        log("INCONCLUSIVE", task=task.value, msg=str(e))
        report = TaskReport(task=task, verdict=Verdict.INCONCLUSIVE, message=str(e))
    except (HopfextError, FieldError) as e:
        log_error(task.value, str(e))
        report = TaskReport(task=task, verdict=Verdict.FAIL, message=f"{type(e).__name__}: {e}")
    report.seconds = round(time.perf_counter() - start, 3)
    return report


def run_scenario(config: ScenarioConfig, seed: int | None = None, max_degree: int | None = None,
                 level: ExtensionLevel | None = None, budget_mb: int | None = None) -> Report:
    seed = seed if seed is not None else config.seed
    ctx = ScenarioContext(config, seed, max_degree or config.max_degree, level or config.level, budget_mb)
    log("RUN", scenario=config.name, tasks=",".join(t.value for t in config.tasks), field=str(ctx.field))
    report = Report(
        scenario=config.name,
        tool_version=__version__,
        config_hash=config_hash(config),
        field=str(ctx.field),
        seed=seed,
        budget_mb=ctx.budget_mb,
    )
    for task in config.tasks:
        result = _run_task(ctx, task)
        report.tasks.append(result)
        report.timings[task.value] = result.seconds
    report.dimensions = dict(sorted(ctx.dimensions.items()))
    log("RUN", scenario=config.name, verdict=report.verdict.value)
    return report


def write_report(report: Report, out: str | Path | None = None) -> Path:
    path = Path(out) if out else settings.reports_path / f"{report.scenario}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    log("RUN", report=str(path))
    return path
