from pathlib import Path

from pydantic_settings import BaseSettings

ROOT_DIR = Path(__file__).resolve().parents[2]


class Settings(BaseSettings):
    fixtures_dir: str = "fixtures"
    reports_dir: str = "reports"

    # Randomized property checks
    default_seed: int = 20240917
    random_samples: int = 200

    # Size caps (dimensions)
    dual_cap: int = 2000
    exhaustive_cap: int = 200
    extension_exhaustive_cap: int = 1000
    convolution_solve_cap: int = 1024

    # Cohomology budgets
    bar_budget: int = 10_000_000
    minimal_dim_cap: int = 200

    # Memory budget (MB); --budget-mb overrides. Tightens bar_budget and minimal_dim_cap
    budget_mb: int = 2048
    bytes_per_chain: int = 200

    log_color: bool = True

    model_config = {"env_file": ".env", "env_prefix": "HOPFEXT_", "extra": "ignore"}

    @property
    def fixtures_path(self) -> Path:
        """Bundled scenario directory, resolved against the repo root when relative."""
        path = Path(self.fixtures_dir)
        return path if path.is_absolute() else ROOT_DIR / path

    @property
    def reports_path(self) -> Path:
        path = Path(self.reports_dir)
        return path if path.is_absolute() else ROOT_DIR / path


settings = Settings()
