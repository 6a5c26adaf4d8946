"""Graphviz DOT rendering of support posets."""

from typing import Sequence

from src.models import SupportPoset, default_variable_names
from src.polar.poset import hasse_labels


def poset_to_dot(
    poset: SupportPoset, names: Sequence[str] | None = None, graph_name: str = "support_poset"
) -> str:
    """Render the Hasse diagram of a support poset, smaller sets at the bottom.

    Each node shows its variable class and, after a bar, the variables
    that first appear at that node.

    Args:
        poset: Support poset to draw
        names: Variable names of the squarefree ideal the poset came from
        graph_name: DOT graph identifier

    Returns:
        DOT source text
    """
    labels = names or default_variable_names(max(poset.variables, default=-1) + 1)
    fresh = hasse_labels(poset)
    lines = [f"digraph {graph_name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for k, members in enumerate(poset.classes):
        variables = ",".join(labels[v] for v in members)
        new = ",".join(labels[v] for v in sorted(fresh[k]))
        lines.append(f'  c{k} [label="{variables} | {new}"];')
    lines.extend(f"  c{lower} -> c{upper};" for lower, upper in poset.hasse)
    lines.append("}")
    return "\n".join(lines) + "\n"
