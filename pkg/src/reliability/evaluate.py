"""Exact reliability from Hilbert numerators.

Substituting x_i^a by P_{i,a} = Pr(c_i >= a) in the numerator of the
j-reliability ideal gives R_{S,j} for independent components. Numerators of
polarized or depolarized ideals are evaluated through a slot map back to
the components.
"""

from collections import Counter
from fractions import Fraction
from typing import Sequence

import sympy
from loguru import logger

from src.algebra.hilbert import hilbert_numerator
from src.algebra.monomials import pull_back_exponents
from src.models import (
    Exponents,
    MonomialIdeal,
    MultigradedPolynomial,
    ProbabilityTable,
    ReliabilityReport,
    SystemSpec,
    VariableMap,
)
from src.reliability.families import j_reliability_ideal


def monomial_probability(
    exponents: Exponents, probs: ProbabilityTable, slot_map: VariableMap | None = None
) -> Fraction:
    """Pr(c_i >= a_i for all i) for the component exponents of one monomial.

    Raises:
        SlotPatternError: If the slot map sends a monomial to a non-prefix slot set
    """
    if slot_map is not None:
        exponents = pull_back_exponents(exponents, slot_map, probs.num_components)
    elif len(exponents) != probs.num_components:
        raise ValueError(
            f"Monomial has {len(exponents)} variables but the table has "
            f"{probs.num_components} components; pass a slot map"
        )
    value = Fraction(1)
    for component, level in enumerate(exponents):
        if level:
            value *= probs.at_least(component, level)
    return value


def evaluate(
    numerator: MultigradedPolynomial,
    probs: ProbabilityTable,
    slot_map: VariableMap | None = None,
) -> Fraction:
    """Evaluate a numerator at the cumulative component probabilities.

    Args:
        numerator: Hilbert numerator, in component variables or in the ring of
            a polarization or depolarization
        probs: Point masses per component
        slot_map: Map from the numerator's slots (variable, l) to component
            slots; None when the numerator is in component variables

    Returns:
        Exact value of the substitution
    """
    return sum(
        (coeff * monomial_probability(exps, probs, slot_map) for exps, coeff in numerator.terms),
        Fraction(0),
    )


def ideal_reliability(
    ideal: MonomialIdeal, probs: ProbabilityTable, slot_map: VariableMap | None = None
) -> Fraction:
    """Probability that the component states lie in the ideal."""
    if ideal.is_zero:
        return Fraction(0)
    if ideal.is_improper:
        return Fraction(1)
    return evaluate(hilbert_numerator(ideal), probs, slot_map)


def check_table(system: SystemSpec, probs: ProbabilityTable) -> None:
    if probs.state_counts != system.state_counts:
        raise ValueError(
            f"Probability table has state counts {probs.state_counts}, "
            f"system expects {system.state_counts}"
        )


def level_reliability(system: SystemSpec, probs: ProbabilityTable, j: int) -> Fraction:
    """R_{S,j}; R_{S,0} = 1 and R_{S,m+1} = 0."""
    if j <= 0:
        return Fraction(1)
    if j > system.system_levels:
        return Fraction(0)
    return ideal_reliability(j_reliability_ideal(system, j), probs)


def reliability(system: SystemSpec, probs: ProbabilityTable, j: int) -> ReliabilityReport:
    """R_{S,j} and the point mass r_{S,j} = R_{S,j} - R_{S,j+1}.

    Raises:
        ValueError: If j is outside 0..m or the table does not fit the system
    """
    check_table(system, probs)
    if not 0 <= j <= system.system_levels:
        raise ValueError(f"Level {j} outside 0..{system.system_levels}")
    at_least = level_reliability(system, probs, j)
    above = level_reliability(system, probs, j + 1)
    logger.debug(f"R_{j} = {at_least}, R_{j + 1} = {above}")
    return ReliabilityReport(level=j, reliability=at_least, point_mass=at_least - above)


def reliability_profile(system: SystemSpec, probs: ProbabilityTable) -> list[ReliabilityReport]:
    """Reports for every level 0..m, sharing one numerator per level."""
    check_table(system, probs)
    values = [level_reliability(system, probs, j) for j in range(system.system_levels + 1)]
    values.append(Fraction(0))
    return [
        ReliabilityReport(level=j, reliability=values[j], point_mass=values[j] - values[j + 1])
        for j in range(system.system_levels + 1)
    ]


def iid_polynomial(numerator: MultigradedPolynomial) -> sympy.Expr:
    """The numerator with x_i^a replaced by P_a for identically distributed components.

    P_a stands for the probability that a component is at level a or above.
    """
    coefficients = iid_coefficients(numerator)
    logger.debug(f"{len(numerator)} numerator terms fold to {len(coefficients)} i.i.d. terms")
    return iid_expression(coefficients)


def iid_coefficients(numerator: MultigradedPolynomial) -> Counter[tuple[int, ...]]:
    """Fold the numerator for identically distributed components.

    Each x_i^a becomes P_a, so a term is keyed by how often every level
    1..top occurs among its exponents. Keys whose coefficients cancel are
    dropped.
    """
    top = max((max(exps) for exps, _ in numerator.terms), default=0)
    folded: Counter[tuple[int, ...]] = Counter()
    for exps, coeff in numerator.terms:
        powers = [0] * top
        for a in exps:
            if a:
                powers[a - 1] += 1
        folded[tuple(powers)] += coeff
    return Counter({powers: coeff for powers, coeff in folded.items() if coeff})


def iid_expression(coefficients: Counter[tuple[int, ...]]) -> sympy.Expr:
    """Sympy expression in P1..Ptop for folded coefficients."""
    if not coefficients:
        return sympy.Integer(0)
    top = len(next(iter(coefficients)))
    if not top:
        return sympy.Integer(sum(coefficients.values()))
    levels = sympy.symbols(f"P1:{top + 1}")
    return sympy.Poly.from_dict(dict(coefficients), *levels).as_expr()


def iid_value(coefficients: Counter[tuple[int, ...]], at_least: Sequence[Fraction]) -> Fraction:
    """Exact value of folded coefficients at P_a = at_least[a - 1]."""
    total = Fraction(0)
    for powers, coeff in coefficients.items():
        term = Fraction(coeff)
        for p, power in zip(at_least, powers):
            if power:
                term *= p**power
        total += term
    return total
