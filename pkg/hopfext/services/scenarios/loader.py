"""Scenario files: TOML in, validated ScenarioConfig out."""
from __future__ import annotations

import hashlib
import json
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from hopfext.api.schemas import ScenarioConfig
from hopfext.core.config import settings
from hopfext.core.errors import ParseError


def load_scenario(path: str | Path) -> ScenarioConfig:
    path = Path(path)
    try:
        data = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"{path.name}: {e}", line=getattr(e, "lineno", 0) or 0, column=getattr(e, "colno", 0) or 0) from e
    data.setdefault("name", path.stem)
    if "anchor" not in data:
        data["anchor"] = read_anchor(path)
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "config"
        raise ParseError(f"{path.name}: {where}: {first['msg']}") from e


def read_anchor(path: Path) -> str | None:
    """The text of the leading comment block, joined into one line."""
    lines = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.startswith("#"):
            break
        lines.append(line.lstrip("#").strip())
    return " ".join(s for s in lines if s) or None


def config_hash(config: ScenarioConfig) -> str:
    payload = json.dumps(config.model_dump(mode="json"), sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    path: Path
    anchor: str | None
    tasks: list[str]


def list_fixtures(directory: str | Path | None = None) -> list[FixtureEntry]:
    """Bundled scenario files, sorted by name."""
    directory = Path(directory) if directory else settings.fixtures_path
    entries = []
    for path in sorted(directory.glob("*.toml")):
        config = load_scenario(path)
        entries.append(FixtureEntry(config.name, path, config.anchor, [t.value for t in config.tasks]))
    return entries
