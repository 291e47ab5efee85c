"""Fixed-schema CSV tables for plotting."""

import logging
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import pandas as pd

from prahmlab.core.exceptions import PrahmLabError

logger = logging.getLogger(__name__)

SYNTH_COLUMNS = [
    "tau", "envelope",
    "Et_x_re", "Et_x_im", "Et_y_re", "Et_y_im",
    "cBt_x_re", "cBt_x_im", "cBt_y_re", "cBt_y_im",
    "Ez_re", "Ez_im", "cBz_re", "cBz_im",
]

# Column order of every table the CLI writes
SCHEMAS: dict[str, list[str]] = {
    "synth": SYNTH_COLUMNS,
    "sweep": ["ratio", "residual"],
    "dispersion": ["M", "velocity", "distortion"],
    "txline": ["t", "power", "energy"],
    "spectrum": ["M", "Q", "dw", "dt", "product"],
    "ladder": ["M", "coeff", "number_dev", "commutator_dev", "energy"],
    "interaction": ["M", "map", "value", "constant"],
}


class CSVExporter:
    """Write rows under a named schema.

    Floats are written in their shortest round-trip form, so the same rows
    always give byte-identical files.
    """

    def __init__(self, schema: str) -> None:
        if schema not in SCHEMAS:
            raise PrahmLabError(f"unknown table schema {schema!r}")
        self.schema = schema
        self.columns = SCHEMAS[schema]

    def frame(self, rows: Sequence[Mapping[str, Any]]) -> pd.DataFrame:
        """Rows as a DataFrame with exactly the schema's columns, in order."""
        for row in rows:
            missing = [c for c in self.columns if c not in row]
            if missing:
                raise PrahmLabError(f"{self.schema} row lacks columns: {', '.join(missing)}")
        return pd.DataFrame([[row[c] for c in self.columns] for row in rows], columns=self.columns)

    def export(self, rows: Sequence[Mapping[str, Any]], output_path: Path) -> None:
        """Write the table to `output_path`.

        Raises:
            OSError: If the file cannot be written.
        """
        self.frame(rows).to_csv(output_path, index=False, lineterminator="\n")
        logger.debug("wrote %d %s rows to %s", len(rows), self.schema, output_path)

    def export_string(self, rows: Sequence[Mapping[str, Any]]) -> str:
        return str(self.frame(rows).to_csv(index=False, lineterminator="\n"))
