"""Multigraded Hilbert series numerators of monomial ideals.

The engine computes the K-polynomial of S/I by pivot splitting

    K(S/I) = K(S/(I + p)) + p * K(S/(I : p))

with p a pure power x^e, and returns the numerator of the ideal itself,
N(I) = 1 - K(S/I). Ideals with at most one mixed generator are closed
forms, and variable-disjoint pieces are multiplied together.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from loguru import logger
from networkx.utils import UnionFind

from src.algebra.monomials import minimal_exponents
from src.config import PolarityConfig, resolve_config
from src.errors import GeneratorLimitError, ImproperIdealError
from src.models import Exponents, MonomialIdeal, MultigradedPolynomial

KPoly = dict[Exponents, int]
Generators = tuple[Exponents, ...]


@dataclass
class _SplitState:
    num_vars: int
    memo: dict[Generators, KPoly] = field(default_factory=dict)
    hits: int = 0
    splits: int = 0


def _canonical(vectors: list[Exponents]) -> Generators:
    return tuple(sorted(vectors, reverse=True))


def _add_into(target: KPoly, source: KPoly, shift: Exponents | None = None, sign: int = 1) -> None:
    for exps, coeff in source.items():
        if shift is not None:
            exps = tuple(a + b for a, b in zip(exps, shift))
        value = target.get(exps, 0) + sign * coeff
        if value:
            target[exps] = value
        else:
            target.pop(exps, None)


def _multiply(first: KPoly, second: KPoly) -> KPoly:
    product: KPoly = {}
    for exps, coeff in second.items():
        _add_into(product, first, shift=exps, sign=coeff)
    return product


def _one_minus_power(num_vars: int, variable: int, exponent: int) -> KPoly:
    zero = (0,) * num_vars
    power = tuple(exponent if i == variable else 0 for i in range(num_vars))
    return {zero: 1, power: -1}


def _mixed(vector: Exponents) -> bool:
    return sum(1 for a in vector if a) > 1


def _closed_form(gens: Generators, num_vars: int) -> KPoly | None:
    """K-polynomial when at most one generator involves two variables."""
    mixed = [g for g in gens if _mixed(g)]
    if len(mixed) > 1:
        return None

    pure = {next(i for i, a in enumerate(g) if a): max(g) for g in gens if not _mixed(g)}
    result: KPoly = {(0,) * num_vars: 1}
    for variable, exponent in pure.items():
        result = _multiply(result, _one_minus_power(num_vars, variable, exponent))
    if not mixed:
        return result

    # (J + m) with J pure powers: subtract m * K(S/(J : m))
    m = mixed[0]
    quotient: KPoly = {(0,) * num_vars: 1}
    for variable, exponent in pure.items():
        quotient = _multiply(
            quotient, _one_minus_power(num_vars, variable, exponent - m[variable])
        )
    _add_into(result, quotient, shift=m, sign=-1)
    return result


def _components(gens: Generators) -> list[list[Exponents]]:
    sets = UnionFind()
    for g in gens:
        sets.union(*(i for i, a in enumerate(g) if a))
    groups: dict[int, list[Exponents]] = {}
    for g in gens:
        first = next(i for i, a in enumerate(g) if a)
        groups.setdefault(sets[first], []).append(g)
    return list(groups.values())


def _choose_pivot(gens: Generators, num_vars: int) -> tuple[int, int]:
    """Most frequent variable among mixed generators, median exponent."""
    mixed = [g for g in gens if _mixed(g)]
    counts = Counter(i for g in mixed for i, a in enumerate(g) if a)
    top = max(counts.values())
    variable = min(i for i, c in counts.items() if c == top)
    exponents = sorted(g[variable] for g in mixed if g[variable])
    return variable, exponents[len(exponents) // 2]


def _k_polynomial(gens: Generators, state: _SplitState) -> KPoly:
    if not gens:
        return {(0,) * state.num_vars: 1}
    if not any(gens[-1]):
        return {}
    cached = state.memo.get(gens)
    if cached is not None:
        state.hits += 1
        return cached

    result = _closed_form(gens, state.num_vars)
    if result is None:
        pieces = _components(gens)
        if len(pieces) > 1:
            result = {(0,) * state.num_vars: 1}
            for piece in pieces:
                result = _multiply(result, _k_polynomial(_canonical(piece), state))
        else:
            result = _split(gens, state)

    state.memo[gens] = result
    return result


def _split(gens: Generators, state: _SplitState) -> KPoly:
    state.splits += 1
    variable, exponent = _choose_pivot(gens, state.num_vars)
    power = tuple(exponent if i == variable else 0 for i in range(state.num_vars))

    # I + x^e: generators divisible by x^e are absorbed, the rest stay minimal
    left = [g for g in gens if g[variable] < exponent]
    left.append(power)
    right = minimal_exponents(
        tuple(max(a - exponent, 0) if i == variable else a for i, a in enumerate(g)) for g in gens
    )

    result = dict(_k_polynomial(_canonical(left), state))
    _add_into(result, _k_polynomial(_canonical(right), state), shift=power)
    return result


def hilbert_numerator(ideal: MonomialIdeal) -> MultigradedPolynomial:
    """Numerator H_I of the multigraded Hilbert series of the ideal I.

    Args:
        ideal: Monomial ideal; the zero ideal gives the zero polynomial

    Returns:
        H_I with terms in print order

    Raises:
        ImproperIdealError: For the unit ideal
    """
    if ideal.is_improper:
        raise ImproperIdealError("hilbert_numerator needs a proper ideal, got <1>")
    if ideal.is_zero:
        return MultigradedPolynomial.zero(ideal.num_vars)

    state = _SplitState(ideal.num_vars)
    gens = _canonical([g.exponents for g in ideal.generators])
    k_poly = _k_polynomial(gens, state)

    numerator: KPoly = {(0,) * ideal.num_vars: 1}
    _add_into(numerator, k_poly, sign=-1)
    logger.debug(
        f"Hilbert numerator: {len(gens)} generators, {state.splits} splits, "
        f"{len(state.memo)} memo entries, {state.hits} hits, {len(numerator)} terms"
    )
    return MultigradedPolynomial.from_terms(ideal.num_vars, numerator)


def _check_taylor_size(ideal: MonomialIdeal, config: PolarityConfig | None) -> None:
    limit = resolve_config(config).taylor_generator_limit
    if len(ideal.generators) > limit:
        raise GeneratorLimitError(
            f"Taylor expansion over {len(ideal.generators)} generators exceeds the "
            f"limit of {limit} (2^r subsets); use hilbert_numerator instead"
        )


def taylor_ranks(
    ideal: MonomialIdeal, config: PolarityConfig | None = None
) -> dict[tuple[int, Exponents], int]:
    """Ranks of the Taylor resolution: subsets of size i+1 keyed by (i, lcm).

    Raises:
        GeneratorLimitError: If the ideal has more generators than the Taylor limit
    """
    _check_taylor_size(ideal, config)
    ranks: Counter[tuple[int, Exponents]] = Counter()
    gens = [g.exponents for g in ideal.generators]
    for size in range(1, len(gens) + 1):
        for subset in combinations(gens, size):
            lcm = tuple(max(column) for column in zip(*subset))
            ranks[(size - 1, lcm)] += 1
    return dict(ranks)


def taylor_numerator(
    ideal: MonomialIdeal, config: PolarityConfig | None = None
) -> MultigradedPolynomial:
    """Inclusion-exclusion over all nonempty subsets of G(I)."""
    ranks = taylor_ranks(ideal, config)
    return MultigradedPolynomial.from_terms(
        ideal.num_vars, [(mu, (-1) ** i * count) for (i, mu), count in ranks.items()]
    )


def graded_numerator(ideal: MonomialIdeal) -> dict[int, int]:
    """Total-degree specialization of H_I."""
    return hilbert_numerator(ideal).total_degree_specialization()
