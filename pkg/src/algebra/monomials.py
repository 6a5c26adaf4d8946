"""Monomial ideal arithmetic: minimalization, polarization and colon ideals."""

from typing import Iterable, Sequence

import numpy as np
from loguru import logger

from src.errors import CapExceededError, ImproperIdealError, SlotPatternError
from src.models import Exponents, Monomial, MonomialIdeal, VariableMap

# Above this many candidates the divisibility scan runs on a numpy matrix
VECTORIZE_THRESHOLD = 64


def minimal_exponents(vectors: Iterable[Exponents]) -> list[Exponents]:
    """Return the divisibility-minimal exponent vectors, duplicates removed.

    Args:
        vectors: Exponent vectors of equal length

    Returns:
        The minimal vectors, sorted by total degree
    """
    candidates = sorted(set(vectors), key=lambda v: (sum(v), v))
    if len(candidates) < 2:
        return candidates
    if len(candidates) > VECTORIZE_THRESHOLD:
        return _minimal_exponents_numpy(candidates)

    kept: list[Exponents] = []
    for vector in candidates:
        if not any(all(a <= b for a, b in zip(k, vector)) for k in kept):
            kept.append(vector)
    return kept


def _minimal_exponents_numpy(candidates: list[Exponents]) -> list[Exponents]:
    matrix = np.array(candidates, dtype=np.int64)
    keep = np.ones(len(candidates), dtype=bool)
    # Candidates are sorted by degree, so only earlier rows can divide a row
    for row in range(1, len(candidates)):
        earlier = matrix[:row][keep[:row]]
        if np.any(np.all(earlier <= matrix[row], axis=1)):
            keep[row] = False
    return [candidates[i] for i in np.flatnonzero(keep)]


def minimalize(
    generators: Iterable[Monomial], num_vars: int, names: Sequence[str] | None = None
) -> MonomialIdeal:
    """Build the ideal generated by ``generators`` from its minimal subset.

    The unit monomial absorbs everything and yields the improper ideal <1>;
    an empty input yields the zero ideal.

    Args:
        generators: Monomials with ``num_vars`` exponents each
        num_vars: Ambient variable count
        names: Optional variable names carried for printing

    Returns:
        Canonically ordered MonomialIdeal

    Raises:
        ValueError: If a generator has the wrong length
    """
    vectors = []
    for g in generators:
        if g.num_vars != num_vars:
            raise ValueError(f"Generator {g.exponents} has {g.num_vars} exponents, expected {num_vars}")
        vectors.append(g.exponents)

    if not vectors:
        logger.debug("minimalize: empty generating set gives the zero ideal")
    minimal = minimal_exponents(vectors)
    return MonomialIdeal(
        num_vars, tuple(Monomial(v) for v in minimal), tuple(names) if names else None
    )


def require_proper(ideal: MonomialIdeal, operation: str) -> None:
    """Reject the zero and unit ideals for analysis operations."""
    if ideal.is_zero:
        raise ImproperIdealError(f"{operation} needs a nonzero ideal")
    if ideal.is_improper:
        raise ImproperIdealError(f"{operation} needs a proper ideal, got <1>")


def polarized_names(names: Sequence[str], caps: Sequence[int]) -> tuple[str, ...]:
    """Names for slot variables: ``a`` gives a1, a2; ``x1`` gives x1_1, x1_2."""
    result = []
    for name, cap in zip(names, caps):
        separator = "_" if name[-1:].isdigit() else ""
        result.extend(f"{name}{separator}{slot}" for slot in range(1, cap + 1))
    return tuple(result)


def polarization_map(caps: Sequence[int]) -> VariableMap:
    """Slot map (i, l) -> (t, 1) onto the flat polarized variables.

    Variables are laid out base by base, slots in increasing order.
    """
    pairs = []
    target = 0
    for base, cap in enumerate(caps):
        for slot in range(1, cap + 1):
            pairs.append(((base, slot), (target, 1)))
            target += 1
    return VariableMap(tuple(pairs), len(caps), target)


def polarize_monomial(monomial: Monomial, caps: Sequence[int]) -> Monomial:
    """Replace each x_i^b by x_{i,1}...x_{i,b} in a ring with sum(caps) variables.

    Raises:
        CapExceededError: If an exponent exceeds its cap
    """
    if len(caps) != monomial.num_vars:
        raise ValueError(f"Got {len(caps)} caps for {monomial.num_vars} variables")
    bits: list[int] = []
    for variable, (exponent, cap) in enumerate(zip(monomial.exponents, caps)):
        if exponent > cap:
            raise CapExceededError(variable, exponent, cap)
        bits.extend([1] * exponent + [0] * (cap - exponent))
    return Monomial(tuple(bits))


def polarize_ideal(
    ideal: MonomialIdeal, caps: Sequence[int] | None = None
) -> tuple[MonomialIdeal, VariableMap]:
    """Polarize every minimal generator.

    Args:
        ideal: Proper, nonzero monomial ideal
        caps: Slot counts per variable; defaults to the ideal's own caps

    Returns:
        Tuple of (squarefree ideal, slot map from (i, l) to polarized variables)

    Raises:
        ImproperIdealError: For the zero or unit ideal
        CapExceededError: If explicit caps are too small
    """
    require_proper(ideal, "polarize_ideal")
    caps = tuple(caps) if caps is not None else ideal.caps()
    vmap = polarization_map(caps)
    polarized = MonomialIdeal(
        vmap.target_size,
        tuple(polarize_monomial(g, caps) for g in ideal.generators),
        polarized_names(ideal.variable_names, caps),
    )
    logger.debug(
        f"Polarized {len(ideal.generators)} generators: "
        f"{ideal.num_vars} -> {polarized.num_vars} variables"
    )
    return polarized, vmap


def pull_back_exponents(
    exponents: Exponents, slot_map: VariableMap, target_size: int | None = None
) -> Exponents:
    """Translate a monomial through a slot map into target exponents.

    Variable v with exponent e stands for slots (v, 1..e); each slot is mapped
    and the images are grouped by target variable. The images of a target
    variable must form a prefix 1..k of its slots, and k becomes its exponent.

    Raises:
        SlotPatternError: If some target variable gets a non-prefix slot set
    """
    size = target_size if target_size is not None else slot_map.target_size
    slots: dict[int, list[int]] = {}
    for variable, exponent in enumerate(exponents):
        for slot in range(1, exponent + 1):
            base, target_slot = slot_map.image((variable, slot))
            slots.setdefault(base, []).append(target_slot)

    result = [0] * size
    for base, taken in slots.items():
        taken.sort()
        if taken != list(range(1, len(taken) + 1)):
            raise SlotPatternError(
                f"Slots {taken} of variable {base} are not a prefix 1..{len(taken)}; "
                f"only Pr(c >= k) patterns can be evaluated"
            )
        result[base] = len(taken)
    return tuple(result)


def depolarize_monomial(monomial: Monomial, polar_map: VariableMap) -> Monomial:
    """Inverse of polarize_monomial for slot-prefix monomials."""
    return Monomial(pull_back_exponents(monomial.exponents, polar_map.inverse()))


def colon(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    """The ideal quotient I : m."""
    return minimalize((g.colon(monomial) for g in ideal.generators), ideal.num_vars, ideal.names)


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """I and J intersect in the ideal generated by pairwise lcms."""
    if first.num_vars != second.num_vars:
        raise ValueError(f"Cannot intersect ideals in {first.num_vars} and {second.num_vars} variables")
    return minimalize(
        (f.lcm(s) for f in first.generators for s in second.generators),
        first.num_vars,
        first.names,
    )


def saturate(ideal: MonomialIdeal, variable: int) -> MonomialIdeal:
    """I : x_v^infinity, obtained by deleting x_v from every generator."""
    if not 0 <= variable < ideal.num_vars:
        raise ValueError(f"Variable index {variable} outside 0..{ideal.num_vars - 1}")
    return minimalize(
        (
            Monomial(tuple(0 if i == variable else a for i, a in enumerate(g.exponents)))
            for g in ideal.generators
        ),
        ideal.num_vars,
        ideal.names,
    )


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    return minimalize((*first.generators, *second.generators), first.num_vars, first.names)
