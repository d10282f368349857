import os
from pathlib import Path

import pytest
from hypothesis import strategies as st

from chroma import build_graph

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
DIMACS_DIR = Path(os.environ.get("CHROMA_DIMACS_DIR", DATA_DIR / "dimacs"))

DSJC_TABLE = {
    "DSJC125.1": (125, 736, 5),
    "DSJC125.5": (125, 3891, 17),
    "DSJC125.9": (125, 6961, 44),
    "DSJC250.1": (250, 3218, 8),
    "DSJC250.5": (250, 15668, 28),
    "DSJC250.9": (250, 27897, 72),
}


def dsjc_path(name: str) -> Path:
    """Path to a user-provided DSJC instance, or skip the test if absent."""
    path = DIMACS_DIR / f"{name}.col"
    if not path.exists():
        pytest.skip(
            f"{name}.col not present in {DIMACS_DIR} "
            f"(benchmark data is user-provided; see {DIMACS_DIR / 'README.md'})"
        )
    return path


def brute_conflicts(edges, colors) -> int:
    """Independent conflict recount straight off a canonical edge list."""
    canonical = {(u, v) if u < v else (v, u) for u, v in edges}
    return sum(1 for u, v in canonical if colors[u] == colors[v])


def brute_conflicted(edges, colors) -> set:
    out = set()
    for u, v in edges:
        if u != v and colors[u] == colors[v]:
            out.add(u)
            out.add(v)
    return out


@st.composite
def edge_lists(draw, min_n=1, max_n=12):
    """(n, edges) with possibly duplicated edges, both orientations."""
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return n, []
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
        lambda e: e[0] != e[1]
    )
    edges = draw(st.lists(pairs, max_size=3 * n))
    return n, edges


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n, edges = draw(edge_lists(min_n, max_n))
    return build_graph(n, edges)


@st.composite
def colored_graphs(draw, min_n=1, max_n=12, max_color=5):
    """(n, edges, graph, coloring) so tests can recount off the raw edges."""
    n, edges = draw(edge_lists(min_n, max_n))
    colors = draw(st.lists(st.integers(0, max_color), min_size=n, max_size=n))
    return n, edges, build_graph(n, edges), colors


@pytest.fixture
def k3():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4():
    return build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def petersen():
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return build_graph(10, outer + spokes + inner)
