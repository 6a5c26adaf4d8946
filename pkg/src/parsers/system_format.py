"""Reader and writer for the multi-state system text format.

    components: 2
    levels: 4
    names: x y
    states 1: 2
    states 2: 2
    p 1: 0.1 0.1 0.8
    p 2: 0.1 0.1 0.8
    family: flow

Instead of ``family:`` a system may list ``paths j:`` blocks, each followed
by one minimal j-path per line as space-separated component states.
Component and level indices are 1-based.
"""

from fractions import Fraction
from pathlib import Path

from src.errors import FormatError
from src.models import FamilyName, ProbabilityTable, SystemSpec
from src.reliability.families import get_available_families
from src.utils.formatting import format_decimal, terminates


def _int(value: str, line_number: int, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise FormatError(line_number, f"{what} must be an integer, got {value!r}")


def _fraction(value: str, line_number: int) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise FormatError(line_number, f"bad probability {value!r}")


def _indexed(key: str, line_number: int, count: int | None) -> int:
    """1-based index from ``states 3`` or ``p 3``, returned 0-based."""
    _, _, raw = key.partition(" ")
    index = _int(raw.strip(), line_number, "index")
    if count is None:
        raise FormatError(line_number, "components must be declared first")
    if not 1 <= index <= count:
        raise FormatError(line_number, f"index {index} outside 1..{count}")
    return index - 1


def parse_system(text: str) -> tuple[SystemSpec, ProbabilityTable | None]:
    """Parse a system file into a SystemSpec and (optional) probability table.

    Raises:
        FormatError: With the offending line number
    """
    n: int | None = None
    levels: int | None = None
    names: tuple[str, ...] | None = None
    states: dict[int, int] = {}
    probs: dict[int, tuple[Fraction, ...]] = {}
    family: tuple[str, tuple[int, ...]] | None = None
    paths: dict[int, list[tuple[int, ...]]] = {}
    current_level: int | None = None
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            if current_level is None:
                raise FormatError(line_number, f"expected 'key: value', got {line!r}")
            vector = tuple(_int(v, line_number, "path entry") for v in line.split())
            if n is not None and len(vector) != n:
                raise FormatError(line_number, f"path {vector} needs {n} entries")
            paths[current_level].append(vector)
            continue

        key, _, value = (part.strip() for part in line.partition(":"))
        current_level = None
        if key == "components":
            n = _int(value, line_number, "components")
            if n < 1:
                raise FormatError(line_number, "components must be positive")
        elif key == "levels":
            levels = _int(value, line_number, "levels")
            if levels < 1:
                raise FormatError(line_number, "levels must be positive")
        elif key == "names":
            names = tuple(value.split())
        elif key.startswith("states "):
            states[_indexed(key, line_number, n)] = _int(value, line_number, "state count")
        elif key.startswith("p "):
            probs[_indexed(key, line_number, n)] = tuple(
                _fraction(v, line_number) for v in value.split()
            )
        elif key == "family":
            parts = value.split()
            if not parts:
                raise FormatError(line_number, "family needs a name")
            if parts[0] not in get_available_families():
                available = ", ".join(get_available_families())
                raise FormatError(line_number, f"unknown family: {parts[0]}. Available: {available}")
            family = (parts[0], tuple(_int(v, line_number, "family parameter") for v in parts[1:]))
        elif key.startswith("paths "):
            level = _int(key.partition(" ")[2].strip(), line_number, "level")
            if value:
                raise FormatError(line_number, "path vectors go on the following lines")
            paths.setdefault(level, [])
            current_level = level
        else:
            raise FormatError(line_number, f"unknown key {key!r}")

    if n is None or levels is None:
        raise FormatError(last_line or 1, "components and levels are required")
    missing = [i + 1 for i in range(n) if i not in states]
    if missing:
        raise FormatError(last_line, f"missing states lines for components {missing}")
    if (family is None) == (not paths):
        raise FormatError(last_line, "give exactly one of a family line or paths blocks")
    if family is not None and family[0] == "ms_k_of_n" and len(family[1]) != levels:
        raise FormatError(last_line, f"ms_k_of_n needs {levels} thresholds, got {len(family[1])}")

    try:
        system = SystemSpec(
            num_components=n,
            state_counts=tuple(states[i] for i in range(n)),
            system_levels=levels,
            paths={j: tuple(v) for j, v in paths.items()} if paths else None,
            family=FamilyName(family[0]) if family else None,
            family_params=family[1] if family else (),
            names=names,
        )
        table = None
        if probs:
            if len(probs) != n:
                missing = [i + 1 for i in range(n) if i not in probs]
                raise ValueError(f"missing probability lines for components {missing}")
            table = ProbabilityTable(tuple(probs[i] for i in range(n)))
    except ValueError as exc:
        raise FormatError(last_line, str(exc))
    return system, table


def load_system(path: str | Path) -> tuple[SystemSpec, ProbabilityTable | None]:
    """Read a system file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        FormatError: If a line is malformed
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"System file not found: {path}")
    return parse_system(file_path.read_text(encoding="utf-8"))


def _decimal(value: Fraction) -> str:
    return format_decimal(value) if terminates(value) else f"{value.numerator}/{value.denominator}"


def emit_system(system: SystemSpec, probs: ProbabilityTable | None = None) -> str:
    """Write a system (and table) so that parse_system reads it back unchanged."""
    lines = [f"components: {system.num_components}", f"levels: {system.system_levels}"]
    if system.names:
        lines.append(f"names: {' '.join(system.names)}")
    lines.extend(f"states {i + 1}: {m}" for i, m in enumerate(system.state_counts))
    if probs is not None:
        lines.extend(
            f"p {i + 1}: {' '.join(_decimal(p) for p in row)}"
            for i, row in enumerate(probs.point_masses)
        )
    if system.family is not None:
        lines.append(" ".join(["family:", system.family, *map(str, system.family_params)]))
    else:
        for level in sorted(system.paths or {}):
            lines.append(f"paths {level}:")
            lines.extend(" ".join(map(str, v)) for v in system.paths[level])
    return "\n".join(lines) + "\n"
