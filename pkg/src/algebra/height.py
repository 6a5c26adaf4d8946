"""Height of a monomial ideal as a minimum hitting set of generator supports."""

from loguru import logger

from src.algebra.monomials import require_proper
from src.models import MonomialIdeal


def _minimal_supports(ideal: MonomialIdeal) -> list[frozenset[int]]:
    supports = sorted({g.support for g in ideal.generators}, key=len)
    kept: list[frozenset[int]] = []
    for s in supports:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def _packing_bound(sets: list[frozenset[int]]) -> int:
    """Size of a greedy family of pairwise disjoint sets (each needs its own variable)."""
    used: set[int] = set()
    count = 0
    for s in sorted(sets, key=len):
        if not s & used:
            used |= s
            count += 1
    return count


def height(ideal: MonomialIdeal) -> int:
    """Minimum number of variables meeting the support of every generator.

    Raises:
        ImproperIdealError: For the zero or unit ideal
    """
    require_proper(ideal, "height")
    supports = _minimal_supports(ideal)
    best = len(ideal.support)
    visited = 0

    def search(remaining: list[frozenset[int]], chosen: int) -> None:
        nonlocal best, visited
        visited += 1
        if not remaining:
            best = min(best, chosen)
            return
        if chosen + _packing_bound(remaining) >= best:
            return
        branch = min(remaining, key=len)
        for variable in sorted(branch):
            search([s for s in remaining if variable not in s], chosen + 1)

    search(supports, 0)
    logger.debug(f"height: {len(supports)} minimal supports, {visited} search nodes")
    return best
