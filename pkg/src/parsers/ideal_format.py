"""Reader and writer for the ideal text format.

    # comment
    vars: x y z t
    x*y
    y^2
    z*t

One generator per line after the ``vars:`` line; ``^1`` is optional.
"""

from pathlib import Path
from typing import Sequence

from src.errors import FormatError
from src.models import Monomial, MonomialIdeal
from src.algebra.monomials import minimalize


def parse_monomial(text: str, names: Sequence[str], line_number: int) -> Monomial:
    """Parse ``x^2*y`` against the declared variable names."""
    index = {name: i for i, name in enumerate(names)}
    exponents = [0] * len(names)
    body = text.replace(" ", "")
    if body == "1":
        return Monomial(tuple(exponents))
    for factor in body.split("*"):
        name, _, power = factor.partition("^")
        if name not in index:
            raise FormatError(line_number, f"unknown variable {name!r} in {text!r}")
        try:
            exponent = int(power) if power else 1
        except ValueError:
            raise FormatError(line_number, f"bad exponent {power!r} in {text!r}")
        if exponent < 1:
            raise FormatError(line_number, f"exponent must be positive in {text!r}")
        exponents[index[name]] += exponent
    return Monomial(tuple(exponents))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ideal text; generators are minimalized.

    Raises:
        FormatError: With the offending line number
    """
    names: list[str] | None = None
    generators: list[Monomial] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if names is not None:
                raise FormatError(line_number, "duplicate vars line")
            names = line[len("vars:") :].split()
            if not names:
                raise FormatError(line_number, "vars line declares no variables")
            if len(set(names)) != len(names):
                raise FormatError(line_number, f"repeated variable name in {names}")
            continue
        if names is None:
            raise FormatError(line_number, "generator before the vars line")
        generators.append(parse_monomial(line, names, line_number))

    if names is None:
        raise FormatError(1, "missing vars line")
    return minimalize(generators, len(names), names)


def load_ideal(path: str | Path) -> MonomialIdeal:
    """Read an ideal file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        FormatError: If a line is malformed
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Ideal file not found: {path}")
    return parse_ideal(file_path.read_text(encoding="utf-8"))


def emit_ideal(ideal: MonomialIdeal) -> str:
    """Write an ideal in canonical generator order."""
    names = ideal.variable_names
    lines = [f"vars: {' '.join(names)}"]
    lines.extend(g.format(names) for g in ideal.generators)
    return "\n".join(lines) + "\n"
