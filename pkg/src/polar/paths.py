"""Path and chain partitions of ordered support posets.

A path is a chain whose consecutive entries are cover pairs, which is the
same as a chain with no gaps. Minimum path partitions are minimum node
disjoint path covers of the Hasse diagram, found by bipartite matching on
cover pairs. Matching on all comparable pairs instead gives chain
partitions; every chain meets each generator support in an initial segment,
so chain partitions depolarize as well.
"""

from typing import Callable, Iterable, Iterator, Sequence

import networkx as nx
from loguru import logger

from src.errors import InvalidPartitionError
from src.models import MonomialIdeal, OrderedSupportPoset, PathPartition, SupportPoset
from src.polar.poset import ordered_support_poset, support_poset, width


def _sorted_blocks(blocks: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(b) for b in blocks), key=lambda b: (b[0], len(b))))


def comparable_pairs(poset: OrderedSupportPoset) -> tuple[tuple[int, int], ...]:
    """Pairs (u, v) with u below v in the ordered poset."""
    elements = poset.elements
    return tuple((u, v) for u in elements for v in elements if poset.precedes(u, v))


def _blocks_from_successors(elements: Sequence[int], successor: dict[int, int]) -> list[list[int]]:
    has_predecessor = set(successor.values())
    blocks = []
    for start in elements:
        if start in has_predecessor:
            continue
        block = [start]
        while block[-1] in successor:
            block.append(successor[block[-1]])
        blocks.append(block)
    return blocks


def _min_cover(poset: OrderedSupportPoset, edges: Iterable[tuple[int, int]]) -> PathPartition:
    graph = nx.Graph()
    top = [("out", v) for v in poset.elements]
    graph.add_nodes_from(top, bipartite=0)
    graph.add_nodes_from((("in", v) for v in poset.elements), bipartite=1)
    graph.add_edges_from((("out", u), ("in", v)) for u, v in edges)
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)

    successor = {u[1]: v[1] for u, v in matching.items() if u[0] == "out"}
    blocks = _blocks_from_successors(poset.elements, successor)
    return PathPartition(_sorted_blocks(blocks), poset.order)


def min_path_partition(poset: OrderedSupportPoset) -> PathPartition:
    """Partition the poset into the fewest paths.

    Returns:
        PathPartition with n - |maximum matching| blocks, each listed upwards
    """
    partition = _min_cover(poset, poset.hasse)
    logger.debug(
        f"Minimum path partition: {partition.num_blocks} paths over {len(poset.elements)} elements"
    )
    return partition


def min_chain_partition(poset: OrderedSupportPoset) -> PathPartition:
    """Partition the poset into the fewest chains; the block count is the width."""
    partition = _min_cover(poset, comparable_pairs(poset))
    logger.debug(
        f"Minimum chain partition: {partition.num_blocks} chains over {len(poset.elements)} elements"
    )
    return partition


def _successor_partitions(
    poset: OrderedSupportPoset, edges: Iterable[tuple[int, int]]
) -> Iterator[PathPartition]:
    elements = list(poset.elements)
    links_from: dict[int, list[int]] = {v: [] for v in elements}
    for u, v in edges:
        links_from[u].append(v)

    successor: dict[int, int] = {}
    taken: set[int] = set()

    def assign(position: int) -> Iterator[PathPartition]:
        if position == len(elements):
            yield PathPartition(
                _sorted_blocks(_blocks_from_successors(elements, successor)), poset.order
            )
            return
        u = elements[position]
        yield from assign(position + 1)
        for v in links_from[u]:
            if v in taken:
                continue
            successor[u] = v
            taken.add(v)
            yield from assign(position + 1)
            del successor[u]
            taken.discard(v)

    yield from assign(0)


def all_path_partitions(poset: OrderedSupportPoset) -> Iterator[PathPartition]:
    """Every partition of the poset into paths.

    Each partition corresponds to a set of cover pairs using every element at
    most once as a lower and once as an upper end.
    """
    yield from _successor_partitions(poset, poset.hasse)


def all_chain_partitions(poset: OrderedSupportPoset) -> Iterator[PathPartition]:
    """Every partition of the poset into chains.

    Same search as all_path_partitions over comparable pairs; a set of links
    with at most one successor and one predecessor per element strings each
    block upwards in exactly one way.
    """
    yield from _successor_partitions(poset, comparable_pairs(poset))


def _check_blocks(
    poset: OrderedSupportPoset,
    blocks: Sequence[Sequence[int]],
    linked: Callable[[int, int], bool],
    kind: str,
) -> None:
    seen: set[int] = set()
    elements = set(poset.elements)
    for block in blocks:
        block = tuple(block)
        if not block:
            raise InvalidPartitionError("Partition contains an empty block", block)
        unknown = [v for v in block if v not in elements]
        if unknown:
            raise InvalidPartitionError(
                f"Block {block} uses variables {unknown} outside the support poset", block
            )
        overlap = seen & set(block)
        if overlap or len(set(block)) != len(block):
            raise InvalidPartitionError(f"Block {block} repeats variables {sorted(overlap) or list(block)}", block)
        seen |= set(block)
        for u, v in zip(block, block[1:]):
            if not linked(u, v):
                relation = "cover" if kind == "path" else "lie above"
                raise InvalidPartitionError(
                    f"Block {block} is not a {kind}: {v} does not {relation} {u}", block
                )
    missing = sorted(elements - seen)
    if missing:
        raise InvalidPartitionError(f"Partition does not cover variables {missing}")


def check_path_partition(poset: OrderedSupportPoset, blocks: Sequence[Sequence[int]]) -> None:
    """Validate that ``blocks`` partition the poset into upward-listed paths.

    Raises:
        InvalidPartitionError: Naming the first offending block
    """
    _check_blocks(poset, blocks, lambda u, v: (u, v) in poset.cover_pairs, "path")


def check_chain_partition(poset: OrderedSupportPoset, blocks: Sequence[Sequence[int]]) -> None:
    """Validate that ``blocks`` partition the poset into upward-listed chains.

    Raises:
        InvalidPartitionError: Naming the first offending block
    """
    _check_blocks(poset, blocks, poset.precedes, "chain")


def infer_order(poset: SupportPoset, blocks: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Find a variable order under which ``blocks`` are paths, when one exists.

    Within each equal-C class a block must occupy a contiguous run; a run
    continuing from a lower class must start at the bottom of its class and a
    run continuing upwards must end at the top. Impossible inputs yield some
    order, and validation of the partition reports the failure.
    """
    index = poset.class_index
    order: list[int] = []
    for k, members in enumerate(poset.classes):
        bottom_runs, free_runs, top_runs = [], [], []
        for block in blocks:
            lifted = sorted(block, key=lambda v: len(poset.cover_sets.get(v, ())))
            run = [v for v in lifted if index.get(v) == k]
            if not run:
                continue
            first, last = lifted.index(run[0]), lifted.index(run[-1])
            if first > 0:
                bottom_runs.append(run)
            elif last < len(lifted) - 1:
                top_runs.append(run)
            else:
                free_runs.append(run)
        for run in bottom_runs + free_runs + top_runs:
            order.extend(run)
        order.extend(v for v in members if v not in order)
    return tuple(order)


def upward_blocks(poset: SupportPoset, blocks: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """List each block from its smallest C-set upwards, keeping ties in input order."""
    return tuple(
        tuple(sorted(block, key=lambda v: len(poset.cover_sets.get(v, ())))) for block in blocks
    )


def refines(finer: PathPartition, coarser: PathPartition) -> bool:
    """True when every block of ``finer`` lies inside a block of ``coarser``."""
    targets = [set(block) for block in coarser.blocks]
    return all(any(set(block) <= target for target in targets) for block in finer.blocks)


def pd_upper_bound(ideal: MonomialIdeal) -> int:
    """Width of the support poset of the polarization, an upper bound for pd(I).

    The contract is pd(I) <= width. A minimum chain partition depolarizes I
    into width variables, and an ideal in k variables has pd at most k - 1,
    so in fact pd(I) <= width - 1. The minimum path partition is computed
    alongside; a partition into paths can need more blocks than one into
    chains, which is logged.
    """
    poset = support_poset(ideal)
    bound = width(poset)
    blocks = min_path_partition(ordered_support_poset(poset)).num_blocks
    if blocks > bound:
        logger.warning(
            f"Minimum path partition has {blocks} blocks, more than the width {bound}; "
            f"the width is the tighter bound"
        )
    return bound
