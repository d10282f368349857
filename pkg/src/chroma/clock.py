"""Wall clock vs. deterministic virtual clock.

Setting CHROMA_VIRTUAL_CLOCK=1 makes every time-driven decision (ILS budgets,
wall budgets, reported elapsed seconds) a pure function of the number of
objective evaluations, at a fixed rate of one millisecond per evaluation.
Runs then produce byte-identical output for identical inputs and seeds.
"""

from __future__ import annotations

import os
import time
from typing import Union

VIRTUAL_CLOCK_ENV = "CHROMA_VIRTUAL_CLOCK"
VIRTUAL_SECONDS_PER_EVAL = 0.001


class WallClock:
    def now(self) -> float:
        return time.perf_counter()

    def tick(self) -> None:
        pass


class VirtualClock:
    """Counts objective evaluations; `now` is evaluations * seconds_per_eval."""

    def __init__(self, seconds_per_eval: float = VIRTUAL_SECONDS_PER_EVAL):
        self.evaluations = 0
        self.seconds_per_eval = seconds_per_eval

    def now(self) -> float:
        return self.evaluations * self.seconds_per_eval

    def tick(self) -> None:
        self.evaluations += 1


Clock = Union[WallClock, VirtualClock]


def make_clock() -> Clock:
    if os.environ.get(VIRTUAL_CLOCK_ENV) == "1":
        return VirtualClock()
    return WallClock()
