"""Multi-state system families and their j-reliability ideals.

Provides a registry of named families. A family builder returns the minimal
j-paths of a system as exponent vectors; adding a family only requires an
entry in FAMILY_REGISTRY.
"""

from itertools import combinations
from typing import Callable, Sequence

from src.algebra.monomials import minimal_exponents, minimalize
from src.models import Exponents, Monomial, MonomialIdeal, SystemSpec

FamilyBuilder = Callable[[SystemSpec, int], list[Exponents]]


def _check_level(j: int, top: int) -> None:
    if not 1 <= j <= top:
        raise ValueError(f"Level {j} outside 1..{top}")


def ms_k_of_n_paths(k: Sequence[int], n: int, j: int) -> list[Exponents]:
    """Minimal j-paths of the multi-state k-out-of-n system.

    The system is at level >= j when, for some l >= j, at least k_l components
    are at level >= l.
    """
    _check_level(j, len(k))
    for level, needed in enumerate(k, start=1):
        if not 1 <= needed <= n:
            raise ValueError(f"k_{level} = {needed} outside 1..{n}")
    candidates = [
        tuple(level if i in chosen else 0 for i in range(n))
        for level in range(j, len(k) + 1)
        for chosen in combinations(range(n), k[level - 1])
    ]
    return minimal_exponents(candidates)


def flow_paths(caps: Sequence[int], j: int) -> list[Exponents]:
    """Exponent vectors with sum j and entries bounded by ``caps``."""
    _check_level(j, sum(caps))
    paths: list[Exponents] = []

    def extend(prefix: list[int], remaining: int) -> None:
        position = len(prefix)
        if position == len(caps):
            if remaining == 0:
                paths.append(tuple(prefix))
            return
        rest = sum(caps[position + 1 :])
        for value in range(max(0, remaining - rest), min(caps[position], remaining) + 1):
            extend(prefix + [value], remaining - value)

    extend([], j)
    return paths


def consecutive_paths(k: int, n: int) -> list[Exponents]:
    """The n - k + 1 windows of k consecutive components."""
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} outside 1..{n}")
    return [tuple(1 if start <= i < start + k else 0 for i in range(n)) for start in range(n - k + 1)]


def binary_k_of_n_paths(k: int, n: int) -> list[Exponents]:
    """All sets of k working components."""
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} outside 1..{n}")
    return [tuple(1 if i in chosen else 0 for i in range(n)) for chosen in combinations(range(n), k)]


def _ideal(paths: list[Exponents], n: int) -> MonomialIdeal:
    return minimalize((Monomial(p) for p in paths), n)


def ms_k_of_n_ideal(k: Sequence[int], n: int, j: int) -> MonomialIdeal:
    return _ideal(ms_k_of_n_paths(k, n, j), n)


def flow_network_ideal(caps: Sequence[int], j: int) -> MonomialIdeal:
    return _ideal(flow_paths(caps, j), len(caps))


def consecutive_k_of_n_ideal(k: int, n: int) -> MonomialIdeal:
    return _ideal(consecutive_paths(k, n), n)


def binary_k_of_n_ideal(k: int, n: int) -> MonomialIdeal:
    return _ideal(binary_k_of_n_paths(k, n), n)


def _binary_param(system: SystemSpec, family: str) -> int:
    if len(system.family_params) != 1:
        raise ValueError(f"Family {family} takes one parameter k, got {list(system.family_params)}")
    return system.family_params[0]


# Registry of available families
FAMILY_REGISTRY: dict[str, FamilyBuilder] = {
    "ms_k_of_n": lambda s, j: ms_k_of_n_paths(s.family_params, s.num_components, j),
    "flow": lambda s, j: flow_paths(s.state_counts, j),
    "consecutive": lambda s, j: consecutive_paths(_binary_param(s, "consecutive"), s.num_components),
    "binary_k_of_n": lambda s, j: binary_k_of_n_paths(_binary_param(s, "binary_k_of_n"), s.num_components),
}


def get_family_builder(family: str) -> FamilyBuilder:
    """Get the path builder for a family name.

    Raises:
        ValueError: If the family is not registered
    """
    if family not in FAMILY_REGISTRY:
        available = ", ".join(FAMILY_REGISTRY.keys())
        raise ValueError(f"Unknown family: {family}. Available: {available}")
    return FAMILY_REGISTRY[family]


def get_available_families() -> list[str]:
    return list(FAMILY_REGISTRY.keys())


def minimal_paths(system: SystemSpec, j: int) -> list[Exponents]:
    """Minimal j-paths from the explicit table or the system's family."""
    _check_level(j, system.system_levels)
    if system.paths is not None:
        return minimal_exponents(system.paths.get(j, ()))
    return get_family_builder(system.family)(system, j)


def j_reliability_ideal(system: SystemSpec, j: int) -> MonomialIdeal:
    """Ideal generated by the monomials of the minimal j-paths.

    Returns the zero ideal when the system never reaches level j.

    Raises:
        ValueError: If j is outside 1..m or the family is unknown
    """
    return minimalize(
        (Monomial(p) for p in minimal_paths(system, j)), system.num_components, system.names
    )
