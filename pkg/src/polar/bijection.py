"""Variable bijections between monomial ideals.

Two ideals are isomorphic when a bijection of their support variables maps
one minimal generating set onto the other; they are copolar when their
polarizations are isomorphic. The search backtracks over variables with
matching occurrence profiles and prunes with pairwise co-occurrence.
"""

from collections import Counter
from functools import lru_cache

from loguru import logger

from src.algebra.monomials import polarize_ideal
from src.config import PolarityConfig, resolve_config
from src.errors import SearchLimitError
from src.models import Exponents, MonomialIdeal, VariableMap

Profile = tuple[int, tuple[tuple[int, int], ...]]


def variable_profile(ideal: MonomialIdeal, variable: int) -> Profile:
    """Occurrence count and sorted (exponent, generator degree) pairs."""
    pairs = sorted(
        (g.exponents[variable], g.degree) for g in ideal.generators if g.exponents[variable]
    )
    return len(pairs), tuple(pairs)


def ideal_signature(ideal: MonomialIdeal) -> tuple:
    """Invariant of an ideal under renaming variables."""
    return (
        len(ideal.generators),
        len(ideal.support),
        tuple(sorted(tuple(sorted(g.exponents)) for g in ideal.generators)),
        tuple(sorted(variable_profile(ideal, v) for v in ideal.support)),
    )


class _Matcher:
    def __init__(self, source: MonomialIdeal, target: MonomialIdeal, budget: int):
        self.source = source
        self.target = target
        self.budget = budget
        self.visited = 0
        self.source_vars = sorted(source.support)
        target_vars = sorted(target.support)
        target_profiles = {w: variable_profile(target, w) for w in target_vars}
        self.candidates = {
            v: [w for w in target_vars if target_profiles[w] == variable_profile(source, v)]
            for v in self.source_vars
        }
        self.targets = {g.exponents for g in target.generators}
        self._pair_source = lru_cache(maxsize=None)(self._pairs_of(source))
        self._pair_target = lru_cache(maxsize=None)(self._pairs_of(target))

    @staticmethod
    def _pairs_of(ideal: MonomialIdeal):
        def pairs(v: int, w: int) -> tuple[tuple[int, int], ...]:
            return tuple(
                sorted(
                    (g.exponents[v], g.exponents[w])
                    for g in ideal.generators
                    if g.exponents[v] or g.exponents[w]
                )
            )

        return pairs

    def solve(self) -> dict[int, int] | None:
        order = sorted(self.source_vars, key=lambda v: (len(self.candidates[v]), v))
        if any(not self.candidates[v] for v in order):
            return None
        return self._extend(order, {}, set())

    def _extend(self, order: list[int], assigned: dict[int, int], used: set[int]) -> dict[int, int] | None:
        self.visited += 1
        if self.visited > self.budget:
            raise SearchLimitError(
                f"Bijection search exceeded {self.budget} nodes; the result is inconclusive "
                f"(raise bijection_search_limit)"
            )
        if len(assigned) == len(order):
            return dict(assigned) if self._verify(assigned) else None

        v = order[len(assigned)]
        for w in self.candidates[v]:
            if w in used:
                continue
            if any(
                self._pair_source(v, u) != self._pair_target(w, assigned[u]) for u in assigned
            ):
                continue
            assigned[v] = w
            used.add(w)
            found = self._extend(order, assigned, used)
            if found is not None:
                return found
            del assigned[v]
            used.discard(w)
        return None

    def _verify(self, assigned: dict[int, int]) -> bool:
        for g in self.source.generators:
            image = [0] * self.target.num_vars
            for v, a in enumerate(g.exponents):
                if a:
                    image[assigned[v]] = a
            if tuple(image) not in self.targets:
                return False
        return True


def _quick_reject(first: MonomialIdeal, second: MonomialIdeal) -> bool:
    if len(first.generators) != len(second.generators):
        return True
    if len(first.support) != len(second.support):
        return True
    return Counter(g.degree for g in first.generators) != Counter(g.degree for g in second.generators)


def ideal_isomorphism(
    first: MonomialIdeal, second: MonomialIdeal, config: PolarityConfig | None = None
) -> VariableMap | None:
    """Find a renaming of support variables carrying G(first) onto G(second).

    Returns:
        VariableMap on slot-1 variables, or None when the ideals are not isomorphic

    Raises:
        SearchLimitError: If the search budget runs out before a decision
    """
    if _quick_reject(first, second) or ideal_signature(first) != ideal_signature(second):
        return None
    matcher = _Matcher(first, second, resolve_config(config).bijection_search_limit)
    assignment = matcher.solve()
    logger.debug(f"Isomorphism search: {matcher.visited} nodes, found={assignment is not None}")
    if assignment is None:
        return None
    return VariableMap(
        tuple(sorted(((v, 1), (w, 1)) for v, w in assignment.items())),
        first.num_vars,
        second.num_vars,
    )


def copolar_bijection(
    first: MonomialIdeal, second: MonomialIdeal, config: PolarityConfig | None = None
) -> VariableMap | None:
    """Bijection between the polarized variables of two copolar ideals.

    Returns:
        Map from the flat polarized variables of ``first`` to those of
        ``second``, or None when the polarizations are not isomorphic

    Raises:
        SearchLimitError: If the search is inconclusive within the budget
    """
    first_polar, _ = polarize_ideal(first)
    second_polar, _ = polarize_ideal(second)
    return ideal_isomorphism(first_polar, second_polar, config)


def apply_renaming(exponents: Exponents, renaming: VariableMap) -> Exponents:
    """Image of an exponent vector under a slot-1 renaming."""
    image = [0] * renaming.target_size
    for v, a in enumerate(exponents):
        if a:
            image[renaming.image((v, 1))[0]] = a
    return tuple(image)
