"""Depolarization of a squarefree ideal along a path or chain partition.

Every block sigma_j of the partition becomes one variable y_j, and a
generator g maps to the monomial with y_j-exponent |sigma_j cap supp(g)|.
Because each block is a chain, supp(g) meets it in an initial segment, so
polarizing the result recovers the source up to renaming.
"""

from typing import Sequence

from loguru import logger

from src.algebra.monomials import minimalize, require_proper
from src.errors import InvalidPartitionError
from src.models import (
    DepolarizationRecord,
    Monomial,
    MonomialIdeal,
    PathPartition,
    SupportPoset,
    VariableMap,
    default_variable_names,
)
from src.polar.paths import check_chain_partition, check_path_partition, infer_order
from src.polar.poset import ordered_support_poset, support_poset


def upward(poset: SupportPoset, order: Sequence[int], block: Sequence[int]) -> tuple[int, ...]:
    """Sort a block along the ordered support poset given by ``order``."""
    rank = {v: i for i, v in enumerate(order)}
    return tuple(
        sorted(block, key=lambda v: (len(poset.cover_sets.get(v, ())), rank.get(v, len(rank))))
    )


def depolarize(
    ideal: MonomialIdeal,
    partition: PathPartition,
    names: Sequence[str] | None = None,
    poset: SupportPoset | None = None,
    chains: bool = False,
) -> DepolarizationRecord:
    """Collapse each block of a path (or chain) partition into one variable.

    Args:
        ideal: Squarefree proper ideal
        partition: Blocks of variable indices; the block order numbers the new
            variables. Without ``partition.order`` an order making the blocks
            paths is inferred.
        names: Names of the new variables (default y1..yk)
        poset: Precomputed support poset of ``ideal``
        chains: Accept blocks that are chains with gaps, not only paths

    Returns:
        DepolarizationRecord whose map sends slot (j, l) of y_j to the l-th
        variable of block j

    Raises:
        InvalidPartitionError: If the blocks are not a partition into paths
            (chains when ``chains`` is set)
    """
    require_proper(ideal, "depolarize")
    if not ideal.is_squarefree:
        raise ValueError("depolarize needs a squarefree ideal; polarize it first")

    poset = poset or support_poset(ideal)
    order = partition.order or infer_order(poset, partition.blocks)
    ordered = ordered_support_poset(poset, order)
    blocks = tuple(upward(poset, ordered.order, block) for block in partition.blocks)
    if chains:
        check_chain_partition(ordered, blocks)
    else:
        check_path_partition(ordered, blocks)

    k = len(blocks)
    generators = []
    for g in ideal.generators:
        support = g.support
        generators.append(Monomial(tuple(sum(1 for v in block if v in support) for block in blocks)))

    result = minimalize(generators, k, names or default_variable_names(k, "y"))
    if len(result.generators) != len(ideal.generators):
        raise InvalidPartitionError(
            f"Collapsing {blocks} merges generators ({len(ideal.generators)} -> "
            f"{len(result.generators)}); the blocks are not a depolarization order"
        )

    pairs = tuple(
        ((j, slot + 1), (variable, 1)) for j, block in enumerate(blocks) for slot, variable in enumerate(block)
    )
    logger.debug(f"Depolarized {ideal.num_vars} -> {k} variables along {blocks}")
    return DepolarizationRecord(
        source=ideal,
        partition=PathPartition(blocks, ordered.order),
        result=result,
        variable_map=VariableMap(pairs, k, ideal.num_vars),
    )
