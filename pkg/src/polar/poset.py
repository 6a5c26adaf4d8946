"""Support posets of squarefree monomial ideals.

For a squarefree ideal I, C_i is the set of variables present in every
minimal generator containing x_i. The support poset orders the C_i by
inclusion; variables with equal C_i form a class, and a total order on the
variables refines each class into a chain.
"""

from typing import Sequence

import networkx as nx
from loguru import logger

from src.algebra.monomials import polarize_ideal, require_proper
from src.models import MonomialIdeal, OrderedSupportPoset, SupportPoset


def squarefree_form(ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal itself when squarefree, otherwise its polarization."""
    if ideal.is_squarefree:
        return ideal
    polarized, _ = polarize_ideal(ideal)
    logger.debug(f"Support poset taken on the polarization ({polarized.num_vars} variables)")
    return polarized


def cover_sets(ideal: MonomialIdeal) -> dict[int, frozenset[int]]:
    """C_i for every variable in the support of a squarefree ideal."""
    result = {}
    for variable in sorted(ideal.support):
        containing = [g.support for g in ideal.generators if variable in g.support]
        result[variable] = frozenset.intersection(*containing)
    return result


def support_poset(ideal: MonomialIdeal) -> SupportPoset:
    """Build the support poset; general ideals are polarized first.

    Raises:
        ImproperIdealError: For the zero or unit ideal
    """
    require_proper(ideal, "support_poset")
    sets = cover_sets(squarefree_form(ideal))

    grouped: dict[frozenset[int], list[int]] = {}
    for variable, c in sets.items():
        grouped.setdefault(c, []).append(variable)
    classes = tuple(sorted(tuple(members) for members in grouped.values()))

    inclusion = nx.DiGraph()
    inclusion.add_nodes_from(range(len(classes)))
    for a, lower in enumerate(classes):
        for b, upper in enumerate(classes):
            if sets[lower[0]] < sets[upper[0]]:
                inclusion.add_edge(a, b)
    hasse = tuple(sorted(nx.transitive_reduction(inclusion).edges()))

    logger.debug(f"Support poset: {len(sets)} variables, {len(classes)} classes, {len(hasse)} covers")
    return SupportPoset(cover_sets=sets, classes=classes, hasse=hasse)


def ordered_support_poset(
    source: MonomialIdeal | SupportPoset, order: Sequence[int] | None = None
) -> OrderedSupportPoset:
    """Refine the support poset by a total order on the variables.

    Args:
        source: An ideal or its support poset
        order: Variables listed from smallest to largest; entries outside the
            poset are ignored and missing ones are appended in index order

    Returns:
        OrderedSupportPoset whose equal-C classes are chains
    """
    poset = source if isinstance(source, SupportPoset) else support_poset(source)
    elements = set(poset.variables)
    given = [v for v in (order or ()) if v in elements]
    if len(set(given)) != len(given):
        raise ValueError(f"Order lists a variable twice: {list(order or ())}")
    full = tuple(given + sorted(elements - set(given)))
    rank = {v: i for i, v in enumerate(full)}

    chains = [sorted(members, key=rank.__getitem__) for members in poset.classes]
    hasse = [(chain[k], chain[k + 1]) for chain in chains for k in range(len(chain) - 1)]
    hasse.extend((chains[a][-1], chains[b][0]) for a, b in poset.hasse)
    return OrderedSupportPoset(base=poset, order=full, hasse=tuple(sorted(hasse)))


def hasse_labels(poset: SupportPoset) -> dict[int, frozenset[int]]:
    """Label each class by the elements of its C not in any C below it."""
    graph = nx.DiGraph(poset.hasse)
    graph.add_nodes_from(range(len(poset.classes)))
    labels = {}
    for k in range(len(poset.classes)):
        below = set().union(*(poset.class_set(j) for j in nx.ancestors(graph, k)))
        labels[k] = poset.class_set(k) - below
    return labels


def is_path(poset: OrderedSupportPoset, chain: Sequence[int]) -> bool:
    """Literal test: a chain with no gaps.

    True when the elements are pairwise comparable and no outside element
    strictly between the least and greatest is comparable to all of them.
    """
    members = list(chain)
    if len(set(members)) != len(members):
        raise ValueError(f"Path candidate repeats an element: {members}")
    if len(members) <= 1:
        return True
    if any(not poset.comparable(u, v) for i, u in enumerate(members) for v in members[i + 1 :]):
        return False

    ordered = sorted(members, key=lambda v: sum(poset.precedes(u, v) for u in members))
    low, high = ordered[0], ordered[-1]
    for p in poset.elements:
        if p in members:
            continue
        if poset.precedes(low, p) and poset.precedes(p, high):
            if all(poset.comparable(p, v) for v in members):
                return False
    return True


def _dilworth_width(elements: Sequence[int], less: set[tuple[int, int]]) -> int:
    graph = nx.Graph()
    top = [("out", e) for e in elements]
    graph.add_nodes_from(top, bipartite=0)
    graph.add_nodes_from((("in", e) for e in elements), bipartite=1)
    graph.add_edges_from((("out", u), ("in", v)) for u, v in less)
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    return len(elements) - len(matching) // 2


def width(poset: SupportPoset | OrderedSupportPoset) -> int:
    """Maximum antichain size, as n minus a maximum matching on comparable pairs."""
    if isinstance(poset, OrderedSupportPoset):
        elements = list(poset.elements)
        less = {(u, v) for u in elements for v in elements if poset.precedes(u, v)}
    else:
        elements = list(range(len(poset.classes)))
        less = {
            (a, b) for a in elements for b in elements if poset.class_set(a) < poset.class_set(b)
        }
    return _dilworth_width(elements, less)
