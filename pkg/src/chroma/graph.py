"""Immutable undirected simple graph and coloring-quality measurements.

A coloring is a plain list of color indices, one per vertex. Palette indices
are 0-based: a palette of size k is exactly {0, ..., k-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Coloring = list[int]


class GraphError(ValueError):
    """Raised when a graph cannot be constructed from the given edges."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph in adjacency-list form.

    Adjacency lists are sorted ascending and contain no duplicates or
    self-loops; the structure is immutable and safe to share across
    concurrent solver runs.
    """

    vertex_count: int
    edge_count: int
    adjacency: tuple[tuple[int, ...], ...]


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, collapsing duplicate edges.

    Raises GraphError for out-of-range endpoints or self-loops, naming the
    offending pair.
    """
    if vertex_count < 0:
        raise GraphError(f"vertex_count must be nonnegative, got {vertex_count}")
    edge_set: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(
                f"edge ({u}, {v}) out of range for {vertex_count} vertices"
            )
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        edge_set.add((u, v) if u < v else (v, u))
    lists: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edge_set:
        lists[u].append(v)
        lists[v].append(u)
    adjacency = tuple(tuple(sorted(neighbors)) for neighbors in lists)
    return Graph(vertex_count, len(edge_set), adjacency)


def _check_length(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.vertex_count:
        raise ValueError(
            f"coloring has length {len(colors)}, graph has {g.vertex_count} vertices"
        )


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    """True iff no edge joins two vertices of the same color."""
    _check_length(g, colors)
    for u in range(g.vertex_count):
        cu = colors[u]
        for v in g.adjacency[u]:
            if v > u and colors[v] == cu:
                return False
    return True


def conflict_count(g: Graph, colors: Sequence[int]) -> int:
    """Number of monochromatic edges; 0 iff the coloring is proper."""
    _check_length(g, colors)
    total = 0
    for u in range(g.vertex_count):
        cu = colors[u]
        for v in g.adjacency[u]:
            if v > u and colors[v] == cu:
                total += 1
    return total


def conflicted_vertices(g: Graph, colors: Sequence[int]) -> set[int]:
    """Vertices incident to at least one monochromatic edge."""
    _check_length(g, colors)
    out: set[int] = set()
    for u in range(g.vertex_count):
        cu = colors[u]
        for v in g.adjacency[u]:
            if v > u and colors[v] == cu:
                out.add(u)
                out.add(v)
    return out


def color_count(colors: Sequence[int]) -> int:
    """Number of distinct color values present in a nonempty coloring."""
    if not colors:
        raise ValueError("color_count of an empty coloring is undefined")
    return len(set(colors))


def max_degree(g: Graph) -> int:
    return max((len(neighbors) for neighbors in g.adjacency), default=0)
