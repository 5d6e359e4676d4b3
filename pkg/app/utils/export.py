"""
Utilities for exporting weighted graphs and matrix patterns.
"""
from typing import Sequence

import networkx as nx

from app.models.matrix import ExactMatrix
from app.models.tree import WeightedGraph
from app.utils.edge_list import format_edge_list
from app.utils.rationals import format_rational


def pattern_graph(m: ExactMatrix, labels: Sequence[str] | None = None) -> nx.Graph:
    """
    Undirected graph of the nonzero off-diagonal pattern of m.

    Args:
        m: square matrix
        labels: node names, defaults to 0..n-1

    Returns:
        networkx Graph with every index as a node and a ``weight`` attribute
        holding the exact entry on each edge
    """
    names = list(labels) if labels is not None else list(range(m.order))
    g = nx.Graph()
    g.add_nodes_from(names)
    for i, j in sorted(m.nonzero_pattern()):
        g.add_edge(names[i], names[j], weight=m[i, j])
    return g


def graph_edges(g: WeightedGraph) -> list[tuple[str, str, object]]:
    """Edges as (u, v, w) with u, v in vertex order, sorted by index."""
    out = []
    for i, j in g.index_edges():
        out.append((g.label(i), g.label(j), g.adjacency[i][j]))
    return out


def to_edge_list(g: WeightedGraph) -> str:
    """Render in the edge-list format; a vertices header is added only when a vertex is isolated."""
    isolated = any(d == 0 for d in g.degrees())
    return format_edge_list(graph_edges(g), vertices=g.vertices if isolated else None)


def _dot_id(label: str) -> str:
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(g: WeightedGraph, name: str = "sharp") -> str:
    """Render as an undirected DOT graph with exact rational edge labels."""
    lines = [f"graph {_dot_id(name)} {{"]
    for label in g.vertices:
        lines.append(f"  {_dot_id(label)};")
    for u, v, w in graph_edges(g):
        lines.append(f'  {_dot_id(u)} -- {_dot_id(v)} [label="{format_rational(w)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
