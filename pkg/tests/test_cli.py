import json

from hopfext.cli import build_parser, main
from hopfext.core.config import settings
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.presentation import load_presentation

FIXTURES = settings.fixtures_path


def test_parser_defaults():
    args = build_parser().parse_args(["verify-extension", "--config", "x.toml"])
    assert args.level == "split"
    assert args.max_degree is None
    args = build_parser().parse_args(["run", "a.toml", "b.toml", "--jobs", "2"])
    assert args.configs == ["a.toml", "b.toml"]
    assert args.jobs == 2


def test_list_fixtures(capsys):
    assert main(["list-fixtures"]) == 0
    out = capsys.readouterr().out
    assert "jordan-p3" in out
    assert "Total:" in out


def test_list_empty_directory(tmp_path, capsys):
    assert main(["list-fixtures", "--dir", str(tmp_path)]) == 0
    assert "No fixtures found." in capsys.readouterr().out


def test_betti_on_presentation_file(capsys):
    code = main(["betti", "--algebra", str(FIXTURES / "presentations" / "truncated-x3.toml"), "--max-degree", "4"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "pass"
    assert [t["betti"] for t in payload["tables"]] == [[1] * 5, [1] * 5]
    assert payload["fgc_probe"][0]["apparent_degree"] == 0


def test_betti_csv_export(tmp_path, capsys):
    out = tmp_path / "truncated.json"
    args = ["betti", "--algebra", str(FIXTURES / "presentations" / "truncated-x3.toml"),
            "--method", "bar", "--max-degree", "3", "--out", str(out)]
    assert main(args) == 0
    capsys.readouterr()
    assert (tmp_path / "truncated.csv").exists()


def test_emit_presentation_round_trip(tmp_path, capsys):
    out = tmp_path / "jordan.toml"
    assert main(["emit-presentation", "--config", str(FIXTURES / "jordan-p3.toml"), "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "[relations]" in text
    assert out.read_text(encoding="utf-8") == text
    alg = FinBasisAlgebra.build(load_presentation(out))
    assert alg.dim == 9


def test_run_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["run", str(FIXTURES / "betti-truncated.toml"), "--max-degree", "3", "--out", str(out)]) == 0
    capsys.readouterr()
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["scenario"] == "betti-truncated"
    assert data["tasks"][0]["detail"]["bar"] == [1, 1, 1, 1]


def test_missing_file_fails(tmp_path):
    assert main(["run", str(tmp_path / "missing.toml")]) == 1


def test_parse_error_fails(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("tasks = [\n", encoding="utf-8")
    assert main(["run", str(path)]) == 1


def test_betti_short_table_has_no_growth_estimate(capsys):
    code = main(["betti", "--algebra", str(FIXTURES / "presentations" / "truncated-x3.toml"), "--max-degree", "2"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert [t["betti"] for t in payload["tables"]] == [[1, 1, 1], [1, 1, 1]]
    assert payload["fgc_probe"] == [None, None]


def test_betti_memory_budget_exits_inconclusive(capsys):
    args = ["betti", "--algebra", str(FIXTURES / "betti-jordan.toml"), "--method", "bar",
            "--max-degree", "5", "--budget-mb", "1"]
    assert main(args) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["tasks"][0]["verdict"] == "inconclusive"
    assert report["budget_mb"] == 1


def test_betti_minimal_over_cap_exits_inconclusive(monkeypatch, capsys):
    monkeypatch.setattr(settings, "minimal_dim_cap", 2)
    args = ["betti", "--algebra", str(FIXTURES / "presentations" / "truncated-x3.toml"), "--method", "minimal"]
    assert main(args) == 2
    assert capsys.readouterr().out == ""
