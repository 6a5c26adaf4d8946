"""JSON-lines export of depolarization records."""

import json
from pathlib import Path
from typing import Any, Iterable

from src.models import DepolarizationRecord
from src.parsers.ideal_format import emit_ideal
from src.utils.file_io import write_text_atomic


def record_to_dict(record: DepolarizationRecord) -> dict[str, Any]:
    """Flatten a record; map entries read (depolarized variable, slot) -> source variable."""
    names = record.source.variable_names
    result_names = record.result.variable_names
    return {
        "source": record.source.format(),
        "result": record.result.format(),
        "num_vars": record.result.num_vars,
        "blocks": [[names[v] for v in block] for block in record.partition.blocks],
        "variable_map": [
            {"from": [result_names[base], slot], "to": names[target]}
            for (base, slot), (target, _) in record.variable_map.pairs
        ],
        "ideal_text": emit_ideal(record.result),
    }


def write_records_jsonl(records: Iterable[DepolarizationRecord], output_path: str | Path) -> Path:
    """Write one JSON object per record, atomically.

    Raises:
        RuntimeError: If the file cannot be written
    """
    lines = [json.dumps(record_to_dict(r), ensure_ascii=False) for r in records]
    return write_text_atomic("".join(f"{line}\n" for line in lines), output_path)
