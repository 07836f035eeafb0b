import json

import pytest

from hopfext.core.config import settings
from hopfext.core.enums import BettiMethod, ExtensionLevel, TaskKind, Verdict
from hopfext.core.errors import ParseError
from hopfext.services.scenarios.loader import config_hash, list_fixtures, load_scenario
from hopfext.services.scenarios.runner import betti_tables, exit_code, run_scenario, worst, write_report

FIXTURES = settings.fixtures_path


def test_load_scenario_reads_anchor():
    config = load_scenario(FIXTURES / "jordan-p3.toml")
    assert config.name == "jordan-p3"
    assert config.anchor.startswith("Jordan block V(1,2) over F_3")
    assert config.tasks == [TaskKind.BUILD, TaskKind.VERIFY_HOPF, TaskKind.VERIFY_EXTENSION]
    assert config.level == ExtensionLevel.SPLIT
    assert config.family.f == 3


def test_name_defaults_to_file_stem(tmp_path):
    path = tmp_path / "plain.toml"
    path.write_text('tasks = ["build"]\n\n[field]\np = 3\n\n[family]\nt = 1\ntheta = 1\n', encoding="utf-8")
    config = load_scenario(path)
    assert config.name == "plain"
    assert config.anchor is None


def test_malformed_toml(tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text("tasks = [\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_scenario(path)


def test_task_order_is_validated(tmp_path):
    path = tmp_path / "order.toml"
    path.write_text('tasks = ["verify-hopf"]\n\n[field]\np = 3\n\n[family]\nt = 1\ntheta = 1\n', encoding="utf-8")
    with pytest.raises(ParseError, match="needs build"):
        load_scenario(path)


def test_family_required(tmp_path):
    path = tmp_path / "nofamily.toml"
    path.write_text('tasks = ["build"]\n\n[field]\np = 3\n', encoding="utf-8")
    with pytest.raises(ParseError, match="family"):
        load_scenario(path)


def test_list_fixtures():
    entries = list_fixtures()
    names = [e.name for e in entries]
    assert names == sorted(names)
    assert "jordan-p3" in names
    assert "truncated-x3" not in names
    assert len(entries) >= 12


def test_config_hash_is_stable():
    a = load_scenario(FIXTURES / "jordan-p3.toml")
    b = load_scenario(FIXTURES / "jordan-p3.toml")
    assert config_hash(a) == config_hash(b)
    assert config_hash(a) != config_hash(a.model_copy(update={"seed": 1}))


def test_verdict_aggregation():
    assert worst([Verdict.PASS, Verdict.INCONCLUSIVE]) == Verdict.INCONCLUSIVE
    assert worst([Verdict.INCONCLUSIVE, Verdict.FAIL]) == Verdict.FAIL
    assert worst([]) == Verdict.PASS
    assert [exit_code(v) for v in (Verdict.PASS, Verdict.FAIL, Verdict.INCONCLUSIVE)] == [0, 1, 2]


def test_run_jordan_scenario(tmp_path):
    report = run_scenario(load_scenario(FIXTURES / "jordan-p3.toml"), seed=3)
    assert report.verdict == Verdict.PASS, [t.message for t in report.tasks]
    assert [t.task for t in report.tasks] == [TaskKind.BUILD, TaskKind.VERIFY_HOPF, TaskKind.VERIFY_EXTENSION]
    assert report.dimensions["nichols"] == 9
    assert report.dimensions["bosonization"] == 27
    assert report.tasks[0].detail["hilbert"] == [1, 2, 3, 2, 1]
    assert report.tasks[2].detail["sigma_trivial"]
    assert set(report.timings) == {"build", "verify-hopf", "verify-extension"}

    path = write_report(report, tmp_path / "reports" / "jordan.json")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["scenario"] == "jordan-p3"
    assert data["seed"] == 3
    assert data["tasks"][0]["verdict"] == "pass"


def test_run_custom_betti_scenario():
    report = run_scenario(load_scenario(FIXTURES / "betti-truncated.toml"))
    assert report.verdict == Verdict.PASS
    detail = report.tasks[0].detail
    assert detail["bar"] == [1] * 7
    assert detail["minimal"] == [1] * 7


def test_max_degree_override():
    report = run_scenario(load_scenario(FIXTURES / "betti-truncated.toml"), max_degree=3)
    assert report.tasks[0].detail["bar"] == [1, 1, 1, 1]


def test_failing_task_is_reported(tmp_path):
    path = tmp_path / "twisted-split.toml"
    path.write_text(
        'tasks = ["build", "verify-extension"]\n\n[field]\np = 3\n\n'
        "[family]\nt = 1\ntheta = 2\nroot = 2\nq = [[0, 1], [1, 0]]\na = [[1]]\nf = 6\n",
        encoding="utf-8",
    )
    report = run_scenario(load_scenario(path))
    assert report.tasks[0].verdict == Verdict.PASS
    assert report.tasks[1].verdict == Verdict.FAIL
    assert "PreconditionError" in report.tasks[1].message
    assert exit_code(report.verdict) == 1


def test_betti_tables_agree(jordan):
    tables, verdict, message = betti_tables(jordan, BettiMethod.BOTH, 2)
    assert verdict == Verdict.PASS and message is None
    assert [t.method for t in tables] == [BettiMethod.BAR, BettiMethod.MINIMAL]
    assert tables[0].betti == [1, 2, 3]


def test_minimal_over_budget_keeps_bar_table(jordan, monkeypatch):
    monkeypatch.setattr(settings, "minimal_dim_cap", 4)
    tables, verdict, message = betti_tables(jordan, BettiMethod.BOTH, 2)
    assert [t.method for t in tables] == [BettiMethod.BAR]
    assert tables[0].betti == [1, 2, 3]
    assert verdict == Verdict.PASS
    assert message.startswith("minimal skipped")


def test_run_scenario_memory_budget_is_inconclusive():
    config = load_scenario(FIXTURES / "betti-jordan.toml")
    config = config.model_copy(update={"betti": config.betti.model_copy(update={"method": BettiMethod.BAR})})
    report = run_scenario(config, max_degree=5, budget_mb=1)
    assert report.budget_mb == 1
    assert report.tasks[0].verdict == Verdict.INCONCLUSIVE
    assert "bar budget" in report.tasks[0].message
    assert exit_code(report.verdict) == 2
