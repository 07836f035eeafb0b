"""Pydantic schemas for scenario configs and verification reports."""
from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator

from hopfext.core.enums import BettiMethod, CheckMode, ExtensionLevel, TaskKind, Verdict

SCHEMA_VERSION = "1.0"


# ============ Checks ============

class CheckResult(BaseModel):
    name: str
    verdict: Verdict
    witness: Optional[str] = None
    detail: dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    @classmethod
    def of(cls, name: str, ok: bool, witness: Optional[str] = None, **detail) -> "CheckResult":
        return cls(
            name=name,
            verdict=Verdict.PASS if ok else Verdict.FAIL,
            witness=None if ok else witness,
            detail=detail,
        )


class VerificationReport(BaseModel):
    subject: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> Verdict:
        if any(c.verdict == Verdict.FAIL for c in self.checks):
            return Verdict.FAIL
        if any(c.verdict == Verdict.INCONCLUSIVE for c in self.checks):
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


# ============ Hopf / Lie ============

class HopfReport(VerificationReport):
    dimension: int
    mode: CheckMode = CheckMode.GENERATORS


class LieReport(VerificationReport):
    dimension: int
    samples: int = 0
    seed: Optional[int] = None


class YDTripleReport(VerificationReport):
    forces_p_divides_ord_g: bool = False


# ============ Extensions ============

class ExtensionReport(VerificationReport):
    level: ExtensionLevel
    mode: CheckMode = CheckMode.EXHAUSTIVE
    dimensions: dict[str, int] = Field(default_factory=dict)
    abelian: Optional[bool] = None


class DatumReport(VerificationReport):
    sigma_trivial: bool
    tau_trivial: bool
    action_trivial: bool
    coaction_trivial: bool


# ============ Twist ============

class TwistReport(VerificationReport):
    hilbert_original: list[int] = Field(default_factory=list)
    hilbert_twisted: list[int] = Field(default_factory=list)
    dimensions: dict[str, int] = Field(default_factory=dict)


# ============ Cohomology ============

class BettiTable(BaseModel):
    algebra: str
    method: BettiMethod
    betti: list[int]
    cutoff: Optional[int] = None
    note: Optional[str] = None

    @property
    def complete(self) -> bool:
        return self.cutoff is None


class FgcProbe(BaseModel):
    heuristic: bool = True
    apparent_degree: Optional[int] = None
    polynomial_fit: bool
    differences: list[list[int]] = Field(default_factory=list)
    note: str = "HEURISTIC: finite Betti data is consistency evidence only, never a proof of finite generation"


# ============ Scenarios ============

class FieldBlock(BaseModel):
    p: int
    m: int = 1
    modulus: Optional[list[int]] = None


class FamilyBlock(BaseModel):
    t: int
    theta: int
    root: int = 1
    q: Optional[list[list[int]]] = None
    a: list[list[int]] = Field(default_factory=list)
    f: Optional[int] = None


class TwistBlock(BaseModel):
    q_target: Optional[list[list[int]]] = None


class BettiBlock(BaseModel):
    algebra: str = "nichols"
    method: BettiMethod = BettiMethod.BOTH
    max_degree: int = 4
    relations: list[str] = Field(default_factory=list)
    generators: list[str] = Field(default_factory=list)
    degree_bound: Optional[int] = None


class ScenarioConfig(BaseModel):
    name: str
    anchor: Optional[str] = None
    field: FieldBlock
    family: Optional[FamilyBlock] = None
    tasks: list[TaskKind]
    level: ExtensionLevel = ExtensionLevel.SPLIT
    mode: Optional[CheckMode] = None
    twist: Optional[TwistBlock] = None
    betti: Optional[BettiBlock] = None
    out: Optional[str] = None
    seed: Optional[int] = None
    max_degree: Optional[int] = None

    @model_validator(mode="after")
    def _check_tasks(self) -> "ScenarioConfig":
        needs_family = {TaskKind.BUILD, TaskKind.VERIFY_HOPF, TaskKind.VERIFY_EXTENSION, TaskKind.TWIST_CHECK, TaskKind.LIE}
        if self.family is None and any(t in needs_family for t in self.tasks):
            raise ValueError("tasks need a [family] block")
        if TaskKind.BETTI in self.tasks and (self.betti is None or self.betti.algebra == "nichols") and self.family is None:
            raise ValueError("betti on the Nichols algebra needs a [family] block")
        for needs_build in (TaskKind.VERIFY_HOPF, TaskKind.VERIFY_EXTENSION):
            if needs_build in self.tasks:
                if TaskKind.BUILD not in self.tasks or self.tasks.index(TaskKind.BUILD) > self.tasks.index(needs_build):
                    raise ValueError(f"{needs_build.value} needs build earlier in the task list")
        return self


class TaskReport(BaseModel):
    task: TaskKind
    verdict: Verdict
    seconds: float = 0.0
    message: Optional[str] = None
    detail: dict[str, Any] = Field(default_factory=dict)


class Report(BaseModel):
    schema_version: str = SCHEMA_VERSION
    scenario: str
    tool_version: str
    config_hash: str
    field: str
    seed: Optional[int] = None
    budget_mb: int
    tasks: list[TaskReport] = Field(default_factory=list)
    dimensions: dict[str, int] = Field(default_factory=dict)
    timings: dict[str, float] = Field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        verdicts = {t.verdict for t in self.tasks}
        if Verdict.FAIL in verdicts:
            return Verdict.FAIL
        if Verdict.INCONCLUSIVE in verdicts:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS
