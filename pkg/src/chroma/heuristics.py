"""Constructive colorings and an exact small-instance chromatic-number oracle.

DSatur repeatedly colors the uncolored vertex with the highest saturation
degree (count of distinct colors among already-colored neighbors), breaking
ties by degree within the uncolored subgraph and then by lowest vertex index,
and assigns the smallest color absent from its neighborhood. The result is
always proper and never uses more than max_degree + 1 colors.
"""

from __future__ import annotations

import random
from typing import Optional

from .graph import Coloring, Graph

EXACT_VERTEX_LIMIT = 16


def random_coloring(g: Graph, k: int, seed: int) -> Coloring:
    """Assign each vertex an independent uniform color from {0..k-1}.

    Deterministic for a fixed seed: one draw per vertex, in index order.
    """
    if k < 1:
        raise ValueError(f"palette size must be at least 1, got {k}")
    rng = random.Random(seed)
    return [rng.randrange(k) for _ in range(g.vertex_count)]


def dsatur(g: Graph) -> Coloring:
    """Saturation-degree greedy coloring (Brelaz tie-breaking rule)."""
    n = g.vertex_count
    colors: Coloring = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    uncolored_degree = [len(g.adjacency[v]) for v in range(n)]
    for _ in range(n):
        best = -1
        best_sat = -1
        best_deg = -1
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len(neighbor_colors[v])
            deg = uncolored_degree[v]
            # strict improvement on an ascending scan keeps the lowest index
            if sat > best_sat or (sat == best_sat and deg > best_deg):
                best, best_sat, best_deg = v, sat, deg
        c = 0
        while c in neighbor_colors[best]:
            c += 1
        colors[best] = c
        for u in g.adjacency[best]:
            if colors[u] < 0:
                neighbor_colors[u].add(c)
                uncolored_degree[u] -= 1
    return colors


def _k_colorable(g: Graph, k: int, order: list[int]) -> Optional[Coloring]:
    """Backtracking witness search for a proper k-coloring, or None.

    Color symmetry is broken by never introducing more than one new color
    per branch point.
    """
    n = g.vertex_count
    colors: Coloring = [-1] * n

    def assignable(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        forbidden = {colors[u] for u in g.adjacency[v] if colors[u] >= 0}
        top = min(k - 1, used)  # `used` doubles as the first fresh color index
        for c in range(top + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if assignable(idx + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return list(colors) if assignable(0, 0) else None


def chromatic_number_exact(g: Graph, limit: int = EXACT_VERTEX_LIMIT) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness coloring, by backtracking over
    k = 1, 2, ...

    Refuses graphs larger than `limit` vertices to prevent accidental
    exponential blowup.
    """
    n = g.vertex_count
    if n > limit:
        raise ValueError(
            f"exact solver refuses {n} vertices (limit {limit}); "
            "it is exponential by nature"
        )
    if n == 0:
        return 0, []
    # high-degree-first ordering fails sooner on infeasible k
    order = sorted(range(n), key=lambda v: len(g.adjacency[v]), reverse=True)
    k = 1
    while True:
        witness = _k_colorable(g, k, order)
        if witness is not None:
            return k, witness
        k += 1
