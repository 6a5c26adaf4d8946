"""Enumeration of all depolarizations of a squarefree ideal.

Every chain of the ordered support poset meets each generator support in an
initial segment, so every chain partition gives a depolarization. Equal-C
classes are chains under any linearization, which makes one order enough for
the chain search. The narrower search over path partitions runs over every
linearization of the equal-C classes instead. Results are merged up to
renaming of variables.
"""

from itertools import permutations, product

from loguru import logger

from src.algebra.monomials import require_proper
from src.config import PolarityConfig, resolve_config
from src.errors import EnumerationLimitError, SearchLimitError
from src.models import DepolarizationRecord, EnumerationResult, MonomialIdeal, SupportPoset
from src.polar.bijection import ideal_isomorphism, ideal_signature
from src.polar.depolarize import depolarize
from src.polar.paths import all_chain_partitions, all_path_partitions, refines
from src.polar.poset import ordered_support_poset, squarefree_form, support_poset


def class_linearizations(poset: SupportPoset, class_limit: int) -> list[tuple[int, ...]]:
    """Variable orders covering every linearization of the equal-C classes.

    Falls back to the index order when a class is larger than ``class_limit``.
    """
    if any(len(members) > class_limit for members in poset.classes):
        largest = max(len(members) for members in poset.classes)
        logger.warning(
            f"An equal-C class has {largest} variables (limit {class_limit}); "
            f"enumerating only the index order, so some depolarizations may be missed"
        )
        return [poset.variables]
    return [
        tuple(v for chain in choice for v in chain)
        for choice in product(*(permutations(members) for members in poset.classes))
    ]


def enumerate_depolarizations(
    ideal: MonomialIdeal,
    config: PolarityConfig | None = None,
    keep_raw: bool = False,
    paths_only: bool = False,
) -> EnumerationResult:
    """All depolarizations of ``ideal`` up to renaming, with the refinement order.

    Args:
        ideal: Monomial ideal; non-squarefree ideals are polarized first
        config: Limits (``enumeration_variable_limit``,
            ``linearization_class_limit``, ``bijection_search_limit``)
        keep_raw: Also return one record per distinct partition
        paths_only: Restrict the search to path partitions; chain partitions
            with gaps can give depolarizations with fewer variables

    Returns:
        EnumerationResult; ``maxima`` index the records with fewest variables

    Raises:
        EnumerationLimitError: If the support has more variables than the limit
    """
    require_proper(ideal, "enumerate_depolarizations")
    config = resolve_config(config)
    squarefree = squarefree_form(ideal)
    poset = support_poset(squarefree)
    if len(poset.variables) > config.enumeration_variable_limit:
        raise EnumerationLimitError(
            f"Enumeration is limited to {config.enumeration_variable_limit} variables, "
            f"got {len(poset.variables)}; use min_path_partition for a maximum depolarization"
        )

    raw: list[DepolarizationRecord] = []
    seen_blocks: set[frozenset[frozenset[int]]] = set()
    if paths_only:
        orders = class_linearizations(poset, config.linearization_class_limit)
        search = all_path_partitions
    else:
        orders = [poset.variables]
        search = all_chain_partitions
    for order in orders:
        ordered = ordered_support_poset(poset, order)
        for partition in search(ordered):
            key = partition.block_sets()
            if key in seen_blocks:
                continue
            seen_blocks.add(key)
            raw.append(depolarize(squarefree, partition, poset=poset, chains=not paths_only))

    records = _merge_isomorphic(raw, config)
    refinement = tuple(
        (a, b)
        for a, first in enumerate(records)
        for b, second in enumerate(records)
        if a != b and refines(first.partition, second.partition)
    )
    fewest = min(r.result.num_vars for r in records)
    maxima = tuple(i for i, r in enumerate(records) if r.result.num_vars == fewest)

    kind = "path" if paths_only else "chain"
    logger.info(
        f"Enumerated {len(raw)} {kind} partitions, {len(records)} depolarizations up to renaming, "
        f"{len(maxima)} maximum with {fewest} variables"
    )
    return EnumerationResult(
        records=tuple(records),
        refinement=refinement,
        maxima=maxima,
        raw=tuple(raw) if keep_raw else (),
    )


def _merge_isomorphic(
    records: list[DepolarizationRecord], config: PolarityConfig
) -> list[DepolarizationRecord]:
    buckets: dict[tuple, list[DepolarizationRecord]] = {}
    merged: list[DepolarizationRecord] = []
    for record in records:
        key = (record.result.num_vars, ideal_signature(record.result))
        bucket = buckets.setdefault(key, [])
        if not any(_same(record, other, config) for other in bucket):
            bucket.append(record)
            merged.append(record)
    return merged


def _same(first: DepolarizationRecord, second: DepolarizationRecord, config: PolarityConfig) -> bool:
    try:
        return ideal_isomorphism(first.result, second.result, config) is not None
    except SearchLimitError:
        logger.warning(
            f"Could not decide whether {first.result.format()} and {second.result.format()} "
            f"are renamings; keeping both"
        )
        return False
