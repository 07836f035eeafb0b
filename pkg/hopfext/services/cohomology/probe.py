"""Growth probe and CSV export for Betti tables."""
from __future__ import annotations

from pathlib import Path

import pandas as pd

from hopfext.api.schemas import BettiTable, FgcProbe
from hopfext.core.errors import PreconditionError
from hopfext.core.logger import log

# Shortest constant difference row that counts as a fit; a 4-entry table leaves
# two second differences after b_0 is dropped.
MIN_CONSTANT_RUN = 2


def fgc_probe(table: BettiTable) -> FgcProbe:
    """Apparent polynomial growth degree of b_1, b_2, ... from successive differences. HEURISTIC."""
    if len(table.betti) < 4:
        raise PreconditionError(f"need at least 4 Betti numbers, got {len(table.betti)}")
    row = list(table.betti[1:])
    differences = [row]
    degree = None
    while len(row) >= MIN_CONSTANT_RUN:
        if len(set(row)) == 1:
            degree = len(differences) - 1
            break
        row = [b - a for a, b in zip(row, row[1:])]
        differences.append(row)
    probe = FgcProbe(apparent_degree=degree, polynomial_fit=degree is not None, differences=differences)
    log("BETTI", op="fgc_probe", algebra=table.algebra, degree=degree, fit=probe.polynomial_fit)
    return probe


def betti_frame(tables: list[BettiTable]) -> pd.DataFrame:
    rows = [
        {"algebra": t.algebra, "method": t.method.value, "n": n, "b_n": b, "cutoff": t.cutoff}
        for t in tables for n, b in enumerate(t.betti)
    ]
    return pd.DataFrame(rows, columns=["algebra", "method", "n", "b_n", "cutoff"])


def export_betti_csv(tables: list[BettiTable], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df = betti_frame(tables)
    df.to_csv(path, index=False)
    log("BETTI", op="export", path=str(path), rows=len(df))
    return path
