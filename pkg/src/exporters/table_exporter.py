"""CSV and XLSX export of benchmark and experiment tables."""

from pathlib import Path
from typing import Any, Sequence

import pandas as pd
from loguru import logger

MAX_COLUMN_WIDTH = 50


def export_table(
    rows: Sequence[dict[str, Any]],
    output_path: str | Path,
    columns: Sequence[str] | None = None,
    sheet_name: str = "Results",
) -> Path:
    """Write rows to CSV or XLSX, chosen by the file suffix.

    Args:
        rows: One dict per row
        output_path: Destination ``.csv`` or ``.xlsx`` file
        columns: Column order; defaults to the keys of the first row
        sheet_name: Worksheet name for XLSX output

    Returns:
        Path to the written file

    Raises:
        ValueError: If rows is empty or the suffix is not .csv/.xlsx
    """
    if not rows:
        raise ValueError("Cannot export an empty table")

    output_file = Path(output_path)
    df = pd.DataFrame(list(rows), columns=list(columns) if columns else None)
    output_file.parent.mkdir(parents=True, exist_ok=True)

    suffix = output_file.suffix.lower()
    if suffix == ".csv":
        df.to_csv(output_file, index=False, encoding="utf-8")
    elif suffix == ".xlsx":
        with pd.ExcelWriter(output_file, engine="openpyxl") as writer:
            df.to_excel(writer, sheet_name=sheet_name, index=False)
            worksheet = writer.sheets[sheet_name]
            for column in worksheet.columns:
                longest = max(len(str(cell.value)) for cell in column if cell.value is not None)
                worksheet.column_dimensions[column[0].column_letter].width = min(
                    longest + 2, MAX_COLUMN_WIDTH
                )
    else:
        raise ValueError(f"Unsupported table format: {suffix or output_file.name}. Available: .csv, .xlsx")

    logger.info(f"Exported {len(df)} rows to {output_file}")
    return output_file
