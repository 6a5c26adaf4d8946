"""Mayer-Vietoris trees.

A node with generating list (m_1, ..., m_r) and pivot m_p has the left child
generated by the list without m_p and the right child generated by the
lcm(m_i, m_p), i != p. Leaves are principal. The pivot of every relevant node
contributes its multidegree at homological index = number of right steps
from the root, so the alternating sum of relevant pivots is the Hilbert
numerator and the counts bound the multigraded Betti numbers.
"""

from collections import Counter, deque
from typing import Callable, Sequence

from loguru import logger

from src.algebra.monomials import (
    depolarize_monomial,
    minimalize,
    polarize_ideal,
    polarize_monomial,
    require_proper,
)
from src.models import (
    Exponents,
    Monomial,
    MonomialIdeal,
    MultigradedPolynomial,
    MVTNode,
    MVTree,
    VariableMap,
)

PivotStrategy = Callable[[Sequence[Monomial]], int]


def _last(generators: Sequence[Monomial]) -> int:
    return len(generators) - 1


def _first(generators: Sequence[Monomial]) -> int:
    return 0


PIVOT_REGISTRY: dict[str, PivotStrategy] = {
    "last": _last,
    "first": _first,
}


def get_pivot_strategy(strategy: str | PivotStrategy) -> PivotStrategy:
    """Resolve a registered strategy name, or pass a callable through.

    Raises:
        ValueError: If the name is not registered
    """
    if callable(strategy):
        return strategy
    if strategy not in PIVOT_REGISTRY:
        available = ", ".join(PIVOT_REGISTRY.keys())
        raise ValueError(f"Unknown pivot strategy: {strategy}. Available: {available}")
    return PIVOT_REGISTRY[strategy]


def pulled_back_strategy(strategy: str | PivotStrategy, polar_map: VariableMap) -> PivotStrategy:
    """Pivot rule on a polarized ideal that mirrors ``strategy`` on the source.

    Generators are depolarized, put in the source's canonical order, and the
    source rule picks among them.
    """
    choose = get_pivot_strategy(strategy)

    def pick(generators: Sequence[Monomial]) -> int:
        source = [depolarize_monomial(g, polar_map) for g in generators]
        order = sorted(range(len(source)), key=lambda i: source[i].exponents, reverse=True)
        return order[choose([source[i] for i in order])]

    return pick


def mayer_vietoris_tree(
    ideal: MonomialIdeal,
    pivot_strategy: str | PivotStrategy = "last",
    minimalize_nodes: bool = True,
) -> MVTree:
    """Build the Mayer-Vietoris tree of ``ideal``.

    Args:
        ideal: Proper monomial ideal
        pivot_strategy: Registered name or a callable returning a generator index
        minimalize_nodes: Replace every node's generating list by its minimal
            generators; with False the raw lcm lists are kept and nodes whose
            pivot is divisible by another generator are not relevant

    Returns:
        MVTree with the root at index 0
    """
    require_proper(ideal, "mayer_vietoris_tree")
    choose = get_pivot_strategy(pivot_strategy)
    n = ideal.num_vars

    drafts: list[dict] = []
    queue: deque[tuple[tuple[Monomial, ...], str, int | None, str]] = deque()
    queue.append((ideal.generators, "", None, ""))

    while queue:
        generators, position, parent, side = queue.popleft()
        index = len(drafts)
        pivot_index = choose(generators) if len(generators) > 1 else 0
        pivot = generators[pivot_index]
        others = generators[:pivot_index] + generators[pivot_index + 1 :]
        relevant = not any(g.divides(pivot) for g in others)
        drafts.append(
            {
                "ideal": minimalize(generators, n, ideal.names),
                "generators": generators,
                "pivot": pivot,
                "position": position,
                "relevant": relevant,
                "left": None,
                "right": None,
            }
        )
        if parent is not None:
            drafts[parent][side] = index
        if not others:
            continue

        queue.append((_node_list(others, n, ideal, minimalize_nodes), position + "L", index, "left"))
        if relevant:
            lcms = tuple(g.lcm(pivot) for g in others)
            queue.append((_node_list(lcms, n, ideal, minimalize_nodes), position + "R", index, "right"))

    tree = MVTree(tuple(MVTNode(**draft) for draft in drafts))
    logger.debug(
        f"MVT: {len(tree)} nodes, {len(tree.relevant_nodes())} relevant, "
        f"max dimension {max(node.dimension for node in tree.nodes)}"
    )
    return tree


def _node_list(
    generators: tuple[Monomial, ...], n: int, ideal: MonomialIdeal, minimalize_nodes: bool
) -> tuple[Monomial, ...]:
    if minimalize_nodes:
        return minimalize(generators, n, ideal.names).generators
    return generators


def mvt_ranks(tree: MVTree) -> dict[tuple[int, Exponents], int]:
    """Relevant-node counts keyed by (homological index, multidegree)."""
    return dict(Counter((node.dimension, node.pivot.exponents) for node in tree.relevant_nodes()))


def mvt_numerator(tree: MVTree) -> MultigradedPolynomial:
    """Alternating sum of relevant pivots; equals the Hilbert numerator."""
    return MultigradedPolynomial.from_terms(
        tree.root.ideal.num_vars,
        [(mu, (-1) ** i * count) for (i, mu), count in mvt_ranks(tree).items()],
    )


def rank_totals(tree: MVTree) -> tuple[int, ...]:
    """Relevant-node count per homological index."""
    counts = Counter(node.dimension for node in tree.relevant_nodes())
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def polarize_tree(tree: MVTree, caps: Sequence[int] | None = None) -> MVTree:
    """Polarize every node ideal, generating list and pivot.

    Args:
        tree: Tree of a proper ideal
        caps: Slot counts; default to the root ideal's caps, which dominate
            every lcm in the tree

    Raises:
        CapExceededError: If a node exponent exceeds its cap
    """
    caps = tuple(caps) if caps is not None else tree.root.ideal.caps()
    nodes = []
    for node in tree.nodes:
        polarized, _ = polarize_ideal(node.ideal, caps)
        nodes.append(
            MVTNode(
                ideal=polarized,
                generators=tuple(polarize_monomial(g, caps) for g in node.generators),
                pivot=polarize_monomial(node.pivot, caps),
                position=node.position,
                relevant=node.relevant,
                left=node.left,
                right=node.right,
            )
        )
    return MVTree(tuple(nodes))
