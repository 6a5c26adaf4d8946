"""Truncation bounds from resolution ranks.

Grouping the Hilbert numerator by homological index, R = V_0 - V_1 + V_2 - ...
where V_i sums the probabilities of the rank-i multidegrees. Stopping after
an even index gives an upper bound, after an odd index a lower bound.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from loguru import logger

from src.algebra.hilbert import taylor_ranks
from src.algebra.mvt import mayer_vietoris_tree, mvt_ranks
from src.config import PolarityConfig
from src.models import BoundStep, MonomialIdeal, ProbabilityTable, ResolutionKind, SystemSpec, VariableMap
from src.reliability.evaluate import check_table, monomial_probability
from src.reliability.families import j_reliability_ideal


def _brackets(value: Fraction, exact: Fraction, direction: str) -> bool:
    if direction == "upper":
        return value >= exact
    if direction == "lower":
        return value <= exact
    return value == exact


def ideal_bounds(
    ideal: MonomialIdeal,
    probs: ProbabilityTable,
    depths: Sequence[int] | None = None,
    resolution: ResolutionKind = "mvt",
    slot_map: VariableMap | None = None,
    config: PolarityConfig | None = None,
) -> tuple[BoundStep, ...]:
    """Ladder of partial sums for Pr(states in ideal).

    Args:
        ideal: j-reliability ideal (or a polarization/depolarization of it)
        probs: Component point masses
        depths: Truncation depths to report; all by default
        resolution: "mvt" for Mayer-Vietoris tree ranks, "taylor" for subsets
        slot_map: Slot map for ideals outside the component ring
        config: Limits for the Taylor ranks

    Returns:
        BoundStep per requested depth; the last full depth is "exact"
    """
    if ideal.is_zero or ideal.is_improper:
        exact = Fraction(0) if ideal.is_zero else Fraction(1)
        return (BoundStep(depth=0, value=exact, direction="exact", brackets=True),)

    if resolution == "mvt":
        ranks = mvt_ranks(mayer_vietoris_tree(ideal))
    elif resolution == "taylor":
        ranks = taylor_ranks(ideal, config)
    else:
        raise ValueError(f"Unknown resolution: {resolution}. Available: mvt, taylor")

    per_index: dict[int, Fraction] = defaultdict(Fraction)
    for (i, mu), count in ranks.items():
        per_index[i] += count * monomial_probability(mu, probs, slot_map)
    top = max(per_index)

    partial = []
    running = Fraction(0)
    for i in range(top + 1):
        running += (-1) ** i * per_index[i]
        partial.append(running)
    exact = partial[-1]

    steps = []
    for depth in depths if depths is not None else range(top + 1):
        if depth < 0:
            raise ValueError(f"Truncation depth must be non-negative, got {depth}")
        value = partial[min(depth, top)]
        direction = "exact" if depth >= top else ("upper" if depth % 2 == 0 else "lower")
        brackets = _brackets(value, exact, direction)
        if not brackets:
            logger.warning(
                f"Truncation at depth {depth} gives {float(value):.6f}, which is not an "
                f"{direction} bound for {float(exact):.6f}"
            )
        steps.append(BoundStep(depth=depth, value=value, direction=direction, brackets=brackets))
    return tuple(steps)


def bounds(
    system: SystemSpec,
    probs: ProbabilityTable,
    j: int,
    depths: Sequence[int] | None = None,
    resolution: ResolutionKind = "mvt",
    config: PolarityConfig | None = None,
) -> tuple[BoundStep, ...]:
    """Bounds ladder for R_{S,j}."""
    check_table(system, probs)
    return ideal_bounds(j_reliability_ideal(system, j), probs, depths, resolution, config=config)
