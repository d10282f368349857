"""Single-state metaheuristics for fixed-palette conflict minimization.

All four methods (hill climbing, simulated annealing, tabu search, iterated
local search) share the same elementary move: recolor one vertex, drawn
uniformly from the conflicted vertices when any exist, to a uniformly drawn
different color. Each method minimizes the number of monochromatic edges for
a fixed palette size k; a proper coloring is exactly a zero-conflict state.

The outer driver (`solve_k_reduction`) starts from a DSatur coloring and
repeatedly attempts one fewer color, projecting the incumbent witness down a
level, until an attempt fails or the wall budget runs out.

Every method is deterministic given (graph, params, seed), except that a real
wall clock may cut time-driven loops at machine-dependent points; under the
virtual clock (see chroma.clock) runs are fully reproducible.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .clock import Clock, make_clock
from .graph import Coloring, Graph, color_count, conflicted_vertices
from .heuristics import dsatur, random_coloring

METHODS = ("HC", "SA", "TS", "ILS")

AcceptHook = Callable[[int, int, float], None]  # (iteration, conflicts, elapsed)


@dataclass
class SolverParams:
    """Per-method search parameters; defaults follow the benchmark setup.

    hc_strict, sa_geometric, ils_perturbation and initializer are knobs over
    details the benchmark setup leaves open (plateau acceptance, cooling
    shape, kick strength, initial coloring).
    """

    method: str = "HC"
    hc_iterations: int = 5000
    sa_iterations: int = 10000
    sa_decrement: float = 0.005
    ts_iterations: int = 10
    ts_tabu_length: int = 20
    ts_num_tweaks: int = 10
    ils_inner_seconds: float = 10.0
    ils_total_seconds: float = 100.0
    ils_queue_length: int = 70
    wall_budget_seconds: float = 600.0
    hc_strict: bool = False
    sa_geometric: bool = False
    ils_perturbation: float = 0.05
    initializer: str = "dsatur"

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        for name in ("hc_iterations", "sa_iterations", "ts_iterations",
                     "ts_tabu_length", "ts_num_tweaks", "ils_queue_length"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        for name in ("sa_decrement", "ils_inner_seconds", "ils_total_seconds",
                     "wall_budget_seconds"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.ils_inner_seconds > self.ils_total_seconds:
            raise ValueError("ils_inner_seconds cannot exceed ils_total_seconds")
        if not 0.0 < self.ils_perturbation <= 1.0:
            raise ValueError("ils_perturbation must be in (0, 1]")
        if self.initializer not in ("dsatur", "random"):
            raise ValueError(f"initializer must be 'dsatur' or 'random', got {self.initializer!r}")


@dataclass
class SearchOutcome:
    coloring: Coloring
    conflicts: int
    evaluations: int
    elapsed_seconds: float


_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = 0xFFFFFFFFFFFFFFFF


def coloring_fingerprint(colors: Sequence[int]) -> int:
    """64-bit FNV-1a over the color vector (4 little-endian bytes per entry).

    Platform-independent, so tabu and home-base memories behave identically
    everywhere.
    """
    h = _FNV_OFFSET
    for value in colors:
        for shift in (0, 8, 16, 24):
            h ^= (value >> shift) & 0xFF
            h = (h * _FNV_PRIME) & _U64
    return h


class FingerprintFifo:
    """Bounded FIFO memory of coloring fingerprints; evicts strictly oldest-first.

    Serves both as the tabu list and as the ILS home-base queue.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"capacity must be at least 1, got {capacity}")
        self.capacity = capacity
        self._entries: deque[int] = deque()

    def push(self, fingerprint: int) -> None:
        self._entries.append(fingerprint)
        if len(self._entries) > self.capacity:
            self._entries.popleft()

    def __contains__(self, fingerprint: int) -> bool:
        return fingerprint in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self._entries)


class _ConflictState:
    """Working coloring with incrementally maintained conflict bookkeeping.

    conflicts_at[v] counts v's neighbors sharing its color; `total` is the
    number of monochromatic edges (half the sum); `conflicted` the vertices
    with conflicts_at > 0.
    """

    __slots__ = ("g", "colors", "conflicts_at", "conflicted", "total")

    def __init__(self, g: Graph, colors: Sequence[int]):
        self.g = g
        self.colors = list(colors)
        conflicts_at = [0] * g.vertex_count
        total = 0
        for u in range(g.vertex_count):
            cu = self.colors[u]
            hits = 0
            for v in g.adjacency[u]:
                if self.colors[v] == cu:
                    hits += 1
            conflicts_at[u] = hits
            total += hits
        self.conflicts_at = conflicts_at
        self.total = total // 2
        self.conflicted = {v for v in range(g.vertex_count) if conflicts_at[v]}

    def sorted_conflicted(self) -> list[int]:
        return sorted(self.conflicted)

    def delta(self, v: int, new_color: int) -> int:
        """Change in total conflicts if v were recolored to new_color."""
        colors = self.colors
        old = colors[v]
        d = 0
        for u in self.g.adjacency[v]:
            cu = colors[u]
            if cu == old:
                d -= 1
            elif cu == new_color:
                d += 1
        return d

    def apply(self, v: int, new_color: int) -> None:
        colors = self.colors
        conflicts_at = self.conflicts_at
        conflicted = self.conflicted
        old = colors[v]
        new_at = 0
        for u in self.g.adjacency[v]:
            cu = colors[u]
            if cu == old:
                conflicts_at[u] -= 1
                if conflicts_at[u] == 0:
                    conflicted.discard(u)
            elif cu == new_color:
                new_at += 1
                conflicts_at[u] += 1
                conflicted.add(u)
        self.total += new_at - conflicts_at[v]
        conflicts_at[v] = new_at
        if new_at:
            conflicted.add(v)
        else:
            conflicted.discard(v)
        colors[v] = new_color


def _draw_move(rng: random.Random, colors: Sequence[int], k: int,
               conflicted_sorted: Sequence[int]) -> tuple[int, int]:
    """Draw (vertex, new color): vertex uniform over the conflicted set when
    nonempty, otherwise over all vertices; color uniform over the k-1 others."""
    if conflicted_sorted:
        v = conflicted_sorted[rng.randrange(len(conflicted_sorted))]
    else:
        v = rng.randrange(len(colors))
    r = rng.randrange(k - 1)
    old = colors[v]
    return v, (r if r < old else r + 1)


def tweak(g: Graph, colors: Sequence[int], k: int, rng: random.Random) -> Coloring:
    """Copy of `colors` recolored at exactly one vertex (see _draw_move)."""
    if k < 2:
        raise ValueError("tweak needs a palette of at least 2 colors")
    conflicted = sorted(conflicted_vertices(g, colors))
    v, new = _draw_move(rng, colors, k, conflicted)
    out = list(colors)
    out[v] = new
    return out


def _prepare(g: Graph, k: int, init: Sequence[int], clock: Clock) -> _ConflictState:
    if k < 2:
        raise ValueError(f"fixed-palette search needs k >= 2, got {k}")
    if len(init) != g.vertex_count:
        raise ValueError(
            f"initial coloring has length {len(init)}, graph has {g.vertex_count} vertices"
        )
    state = _ConflictState(g, init)
    clock.tick()  # counts as the initial objective evaluation
    return state


def _climb(g: Graph, k: int, state: _ConflictState, *, rng: random.Random,
           clock: Clock, t_origin: float, iterations: Optional[int] = None,
           stop_at: Optional[float] = None, strict: bool = False,
           on_accept: Optional[AcceptHook] = None) -> tuple[Coloring, int, int]:
    """Tweak/accept descent shared by hill climbing and the ILS inner search.

    Accepts non-worsening moves (strictly improving ones when `strict`);
    returns (best coloring, its conflicts, evaluations performed).
    """
    best = list(state.colors)
    best_conf = state.total
    evals = 0
    i = 0
    while best_conf > 0:
        if iterations is not None and i >= iterations:
            break
        if stop_at is not None and clock.now() >= stop_at:
            break
        i += 1
        v, new = _draw_move(rng, state.colors, k, state.sorted_conflicted())
        d = state.delta(v, new)
        clock.tick()
        evals += 1
        accept = (d < 0) if strict else (d <= 0)
        if accept:
            state.apply(v, new)
            if state.total < best_conf:
                best_conf = state.total
                best = list(state.colors)
            if on_accept is not None:
                on_accept(i, state.total, clock.now() - t_origin)
    return best, best_conf, evals


def hill_climbing(g: Graph, k: int, init: Sequence[int], params: SolverParams,
                  seed: int, *, clock: Optional[Clock] = None,
                  deadline: Optional[float] = None,
                  on_accept: Optional[AcceptHook] = None) -> SearchOutcome:
    """Fixed-iteration descent accepting any non-worsening tweak."""
    clock = clock if clock is not None else make_clock()
    rng = random.Random(seed)
    t0 = clock.now()
    state = _prepare(g, k, init, clock)
    best, best_conf, evals = _climb(
        g, k, state, rng=rng, clock=clock, t_origin=t0,
        iterations=params.hc_iterations, stop_at=deadline,
        strict=params.hc_strict, on_accept=on_accept,
    )
    return SearchOutcome(best, best_conf, evals + 1, clock.now() - t0)


def simulated_annealing(g: Graph, k: int, init: Sequence[int], params: SolverParams,
                        seed: int, *, clock: Optional[Clock] = None,
                        deadline: Optional[float] = None,
                        on_accept: Optional[AcceptHook] = None,
                        schedule: Optional[Callable[[int], float]] = None) -> SearchOutcome:
    """Metropolis acceptance under a linearly decreasing temperature.

    The initial temperature is sa_iterations * sa_decrement, so the linear
    schedule hits exactly zero on the final iteration; a worsening move of
    cost d is accepted with probability exp(-d / t), never at t <= 0. The
    geometric alternative cools by a factor (1 - sa_decrement) per step.
    `schedule` overrides the temperature curve (used by tests).
    """
    clock = clock if clock is not None else make_clock()
    rng = random.Random(seed)
    t0 = clock.now()
    state = _prepare(g, k, init, clock)
    evals = 1
    best = list(state.colors)
    best_conf = state.total
    t_initial = params.sa_iterations * params.sa_decrement
    if schedule is None:
        if params.sa_geometric:
            schedule = lambda i: t_initial * (1.0 - params.sa_decrement) ** i
        else:
            schedule = lambda i: t_initial - i * params.sa_decrement
    for i in range(1, params.sa_iterations + 1):
        if best_conf == 0:
            break
        if deadline is not None and clock.now() >= deadline:
            break
        t = schedule(i)
        v, new = _draw_move(rng, state.colors, k, state.sorted_conflicted())
        d = state.delta(v, new)
        clock.tick()
        evals += 1
        if d <= 0:
            accept = True
        elif t > 0.0:
            # rng.random() is only consumed when the outcome is actually
            # probabilistic, keeping the stream aligned with hill climbing
            accept = rng.random() < math.exp(-d / t)
        else:
            accept = False
        if accept:
            state.apply(v, new)
            if state.total < best_conf:
                best_conf = state.total
                best = list(state.colors)
            if on_accept is not None:
                on_accept(i, state.total, clock.now() - t0)
    return SearchOutcome(best, best_conf, evals, clock.now() - t0)


def tabu_search(g: Graph, k: int, init: Sequence[int], params: SolverParams,
                seed: int, *, clock: Optional[Clock] = None,
                deadline: Optional[float] = None,
                on_accept: Optional[AcceptHook] = None) -> SearchOutcome:
    """Best-of-sample moves barred from revisiting recently seen colorings.

    Each iteration draws ts_num_tweaks candidates from the current coloring,
    drops those whose fingerprint sits in the tabu list, and moves to the
    lowest-conflict survivor (first drawn wins ties), even when worsening.
    An all-tabu sample makes no move that iteration.
    """
    clock = clock if clock is not None else make_clock()
    rng = random.Random(seed)
    t0 = clock.now()
    state = _prepare(g, k, init, clock)
    evals = 1
    best = list(state.colors)
    best_conf = state.total
    tabu = FingerprintFifo(params.ts_tabu_length)
    for i in range(1, params.ts_iterations + 1):
        if best_conf == 0:
            break
        if deadline is not None and clock.now() >= deadline:
            break
        conflicted = state.sorted_conflicted()
        colors = state.colors
        chosen: Optional[tuple[int, int, int, int]] = None  # (conflicts, v, color, fp)
        for _ in range(params.ts_num_tweaks):
            v, new = _draw_move(rng, colors, k, conflicted)
            d = state.delta(v, new)
            clock.tick()
            evals += 1
            old = colors[v]
            colors[v] = new
            fp = coloring_fingerprint(colors)
            colors[v] = old
            if fp in tabu:
                continue
            cand_conf = state.total + d
            if chosen is None or cand_conf < chosen[0]:
                chosen = (cand_conf, v, new, fp)
        if chosen is None:
            continue
        _, v, new, fp = chosen
        state.apply(v, new)
        tabu.push(fp)
        if state.total < best_conf:
            best_conf = state.total
            best = list(state.colors)
        if on_accept is not None:
            on_accept(i, state.total, clock.now() - t0)
    return SearchOutcome(best, best_conf, evals, clock.now() - t0)


def _perturb(colors: Sequence[int], k: int, rng: random.Random, fraction: float) -> Coloring:
    """Recolor ceil(fraction * n) distinct vertices, each to a uniform other color."""
    out = list(colors)
    n = len(out)
    count = min(n, math.ceil(fraction * n))
    for v in rng.sample(range(n), count):
        r = rng.randrange(k - 1)
        old = out[v]
        out[v] = r if r < old else r + 1
    return out


def iterated_local_search(g: Graph, k: int, init: Sequence[int], params: SolverParams,
                          seed: int, *, clock: Optional[Clock] = None,
                          deadline: Optional[float] = None,
                          on_accept: Optional[AcceptHook] = None) -> SearchOutcome:
    """Time-budgeted climbs restarted from perturbed home bases.

    Runs ils_inner_seconds climbs until ils_total_seconds elapse; a climb
    already in flight at the total deadline is allowed to finish. A result
    strictly better than the home base whose fingerprint is not in the
    home-base queue becomes the new home base; the next climb starts from the
    home base with a perturbation kick applied.
    """
    clock = clock if clock is not None else make_clock()
    rng = random.Random(seed)
    t0 = clock.now()
    state = _prepare(g, k, init, clock)
    evals = 1
    best = list(state.colors)
    best_conf = state.total
    home = list(state.colors)
    home_conf = state.total
    queue = FingerprintFifo(params.ils_queue_length)
    stop_at = t0 + params.ils_total_seconds
    current = home  # the first climb starts from the unperturbed init
    while best_conf > 0:
        now = clock.now()
        if now >= stop_at:
            break
        if deadline is not None and now >= deadline:
            break
        inner_stop = now + params.ils_inner_seconds
        if deadline is not None:
            inner_stop = min(inner_stop, deadline)
        inner_state = _ConflictState(g, current)
        clock.tick()
        evals += 1
        inner_best, inner_conf, inner_evals = _climb(
            g, k, inner_state, rng=rng, clock=clock, t_origin=t0,
            stop_at=inner_stop, strict=False, on_accept=on_accept,
        )
        evals += inner_evals
        if inner_conf < best_conf:
            best_conf = inner_conf
            best = inner_best
        if best_conf == 0:
            break
        if inner_conf < home_conf:
            fp = coloring_fingerprint(inner_best)
            if fp not in queue:
                home = inner_best
                home_conf = inner_conf
                queue.push(fp)
        current = _perturb(home, k, rng, params.ils_perturbation)
    return SearchOutcome(best, best_conf, evals, clock.now() - t0)


_METHOD_FUNCS = {
    "HC": hill_climbing,
    "SA": simulated_annealing,
    "TS": tabu_search,
    "ILS": iterated_local_search,
}


def project_coloring(g: Graph, colors: Sequence[int], k: int) -> Coloring:
    """Force a coloring into palette {0..k-1}: every vertex colored >= k is
    reassigned, in index order, to its least-conflicting color (lowest color
    wins ties)."""
    if k < 1:
        raise ValueError("cannot project onto an empty palette")
    out = list(colors)
    for v in range(g.vertex_count):
        if out[v] >= k:
            counts = [0] * k
            for u in g.adjacency[v]:
                cu = out[u]
                if cu < k:
                    counts[cu] += 1
            out[v] = min(range(k), key=counts.__getitem__)
    return out


def solve_k_reduction(g: Graph, params: SolverParams, seed: int,
                      *, clock: Optional[Clock] = None) -> tuple[Coloring, int, list[SearchOutcome]]:
    """Drive the configured method through decreasing palette sizes.

    Starts from DSatur's proper coloring and its color count k, then attempts
    k-1, k-2, ... with the incumbent witness projected down one level each
    time (or a fresh random coloring under initializer='random'). The first
    failed attempt, or an exhausted wall budget, ends the run; the smallest
    achieved k is returned with its proper witness and the per-level outcomes.
    """
    if g.vertex_count == 0:
        raise ValueError("cannot color an empty graph")
    clock = clock if clock is not None else make_clock()
    run = _METHOD_FUNCS[params.method]
    master = random.Random(seed)
    t0 = clock.now()
    deadline = t0 + params.wall_budget_seconds
    best = dsatur(g)
    k = color_count(best)
    trace: list[SearchOutcome] = []
    while k - 1 >= 2:
        if clock.now() >= deadline:
            break
        target = k - 1
        if params.initializer == "random":
            init = random_coloring(g, target, master.getrandbits(64))
        else:
            init = project_coloring(g, best, target)
        level_seed = master.getrandbits(64)
        outcome = run(g, target, init, params, level_seed, clock=clock, deadline=deadline)
        trace.append(outcome)
        if outcome.conflicts != 0:
            break
        best = outcome.coloring
        k = target
    return best, k, trace
