"""Atomic file writes for reports and exports."""

import os
import tempfile
from pathlib import Path

from loguru import logger


def write_text_atomic(text: str, output_path: str | Path) -> Path:
    """Write text through a temp file in the target directory, then rename.

    Raises:
        RuntimeError: If the rename fails; the temp file is removed
    """
    target = Path(output_path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)

    with tempfile.NamedTemporaryFile(
        mode="w", encoding="utf-8", dir=target.parent, delete=False, suffix=".tmp"
    ) as tmp_file:
        tmp_file.write(text)
        tmp_path = tmp_file.name

    try:
        os.replace(tmp_path, target)
        logger.info(f"Wrote {target}")
    except Exception as e:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise RuntimeError(f"Failed to write {target}: {e}")
    return target
