"""Ideals with a prescribed support poset."""

from itertools import combinations
from typing import Sequence

from loguru import logger

from src.errors import ConstructionError
from src.models import CoverSetsReport, DepolarizationRecord, Monomial, MonomialIdeal, PathPartition
from src.algebra.monomials import minimalize
from src.polar.depolarize import depolarize
from src.polar.poset import cover_sets


def ideal_from_cover_sets(
    sets: Sequence[frozenset[int] | set[int]], sigma: Sequence[Sequence[int]]
) -> CoverSetsReport:
    """Build I_Sigma from sets C_0..C_{n-1} and a collection Sigma of index sets.

    With m_i the product of the variables in C_i and m_s the lcm of m_i over
    i in s, I_Sigma is generated by the m_s for s in Sigma. The result
    has (C, inclusion) as support poset when every variable divides some m_s
    (condition one) and equal-or-smaller occurrence sets force reverse
    inclusion of the C's (condition two); the report records both and the
    direct check.

    Raises:
        ConstructionError: If i is missing from C_i or the C's are not transitive
    """
    n = len(sets)
    cs = [frozenset(c) for c in sets]
    for i, c in enumerate(cs):
        if i not in c:
            raise ConstructionError(f"C_{i} = {sorted(c)} must contain {i}")
        if not c <= set(range(n)):
            raise ConstructionError(f"C_{i} = {sorted(c)} has indices outside 0..{n - 1}")
    for i, j in ((i, j) for i in range(n) for j in range(n)):
        if i in cs[j] and not cs[i] <= cs[j]:
            raise ConstructionError(
                f"Transitivity fails: {i} is in C_{j} but C_{i} = {sorted(cs[i])} is not inside "
                f"C_{j} = {sorted(cs[j])}"
            )
    if not sigma:
        raise ConstructionError("Sigma must contain at least one index set")

    lcm_supports = [frozenset().union(*(cs[i] for i in s)) for s in sigma]
    ideal = minimalize(
        (Monomial.from_support(support, n) for support in lcm_supports if support), n
    )

    failures = []
    occurrences = [frozenset(k for k, s in enumerate(lcm_supports) if i in s) for i in range(n)]
    uncovered = [i for i in range(n) if not occurrences[i]]
    if uncovered:
        failures.append(f"condition one: variables {uncovered} divide no m_sigma")
    violations = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and occurrences[i] <= occurrences[j] and not cs[j] <= cs[i]
    ]
    if violations:
        failures.append(
            f"condition two: occurrence sets nested without reverse inclusion of C for pairs {violations}"
        )

    realized = cover_sets(ideal) if not ideal.is_zero and not ideal.is_improper else {}
    realizes = realized == {i: cs[i] for i in range(n)}
    if not realizes:
        failures.append("the support poset of I_Sigma differs from (C, inclusion)")

    logger.debug(f"I_Sigma = {ideal.format()}; failures: {failures or 'none'}")
    return CoverSetsReport(
        ideal=ideal,
        condition_one=not uncovered,
        condition_two=not violations,
        realizes_poset=realizes,
        failures=tuple(failures),
    )


def disjoint_paths_generators(
    lengths: Sequence[int],
) -> tuple[list[Monomial], list[Monomial], list[Monomial]]:
    """The three generator families for n disjoint paths of the given lengths.

    Path i uses consecutive variables a_{i,1}, ..., a_{i,m_i}. The families
    are the full-path products, the prefixes a_{i,1}...a_{i,j} b_{i,j} for
    1 < j < m_i with b_{i,j} the first variable of path (i + j - 1) mod n,
    and pairwise products of eligible first variables that divide nothing
    in the first two families. Two paths of length one have no eligible
    pair whose product keeps them apart, so the third family is then the two
    variables themselves.

    Raises:
        ConstructionError: If the lengths admit no such ideal
    """
    m = list(lengths)
    n = len(m)
    if n < 2:
        raise ConstructionError(f"Need at least two paths, got {n}")
    if any(not 1 <= length <= n for length in m):
        raise ConstructionError(f"Path lengths must lie in 1..{n}, got {m}")
    if any(a < b for a, b in zip(m, m[1:])):
        raise ConstructionError(f"Path lengths must be non-increasing, got {m}")
    if n == 2 and m[0] != m[1]:
        raise ConstructionError(
            f"Two paths of lengths {m[0]} and {m[1]} are not the support poset of any ideal: "
            f"every candidate generated by a multiple of the longer path has a different poset"
        )

    starts = [sum(m[:i]) for i in range(n)]
    total = sum(m)

    def var(i: int, j: int) -> int:
        return starts[i] + j - 1

    def mono(indices: Sequence[int]) -> Monomial:
        return Monomial.from_support(indices, total)

    full = [mono([var(i, j) for j in range(1, m[i] + 1)]) for i in range(n) if m[i] > 1]

    prefixes = []
    b_count = [0] * n
    for i in range(n):
        for j in range(2, m[i]):
            k = (i + j - 1) % n
            b_count[k] += 1
            prefixes.append(mono([*(var(i, t) for t in range(1, j + 1)), var(k, 1)]))

    if m == [1, 1]:
        return [], [], [mono([var(0, 1)]), mono([var(1, 1)])]

    eligible = [
        var(i, 1) for i in range(n) if (m[i] == 1 and b_count[i] <= 1) or (m[i] > 1 and b_count[i] == 0)
    ]
    earlier = full + prefixes
    pairs = [
        mono(pair)
        for pair in combinations(eligible, 2)
        if not any(mono(pair).divides(g) for g in earlier)
    ]
    return full, prefixes, pairs


def ideal_from_disjoint_paths(lengths: Sequence[int]) -> MonomialIdeal:
    """Squarefree ideal whose support poset is n disjoint paths.

    Raises:
        ConstructionError: If the lengths violate the hypothesis or the built
            ideal does not realize the paths
    """
    full, prefixes, pairs = disjoint_paths_generators(lengths)
    total = sum(lengths)
    ideal = minimalize(full + prefixes + pairs, total)

    expected = {}
    start = 0
    for length in lengths:
        for j in range(length):
            expected[start + j] = frozenset(range(start, start + j + 1))
        start += length
    if len(ideal.generators) != len(full) + len(prefixes) + len(pairs) or cover_sets(ideal) != expected:
        raise ConstructionError(
            f"Constructed ideal {ideal.format()} does not have {list(lengths)} disjoint paths "
            f"as its support poset"
        )
    logger.debug(f"Disjoint paths {list(lengths)}: {len(ideal.generators)} generators")
    return ideal


def disjoint_paths_depolarization(lengths: Sequence[int]) -> DepolarizationRecord:
    """Depolarize the disjoint-paths ideal along its own paths.

    When every path is longer than one, each new variable has a pure power
    among the generators, so the result is zero-dimensional.

    Raises:
        ConstructionError: If some path has length one
    """
    if any(length < 2 for length in lengths):
        raise ConstructionError(
            f"A zero-dimensional depolarization needs every path longer than one, got {list(lengths)}"
        )
    ideal = ideal_from_disjoint_paths(lengths)
    blocks = []
    start = 0
    for length in lengths:
        blocks.append(tuple(range(start, start + length)))
        start += length
    record = depolarize(ideal, PathPartition(tuple(blocks)))

    pure = {next(iter(g.support)) for g in record.result.generators if len(g.support) == 1}
    if pure != set(range(record.result.num_vars)):
        raise ConstructionError(f"Depolarization {record.result.format()} is not zero-dimensional")
    return record
