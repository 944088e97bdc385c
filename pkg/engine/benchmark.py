"""
benchmark.py — Scaling Suite
=============================
Alphabet-renamed copies of aa → aba, run jointly:

    x0 x0 → x0 x1 x0,   x1 x1 → x1 x2 x1,   …,   x(n-1) x(n-1) → x(n-1) x0 x(n-1)

Every copy is matchbounded with bound 2, so the joint system completes
and the automaton grows with n.  The run is timed with the full
recompute check switched on, which measures, on the same trace, what
recomputing every chain product after each batch would have cost.
"""

import logging
import string
from dataclasses import dataclass
from typing import List, Optional

from algorithms.completion import Limits
from algorithms.srs import Rule, SrsInput, alphabet_of
from engine.recorder import Recorder, RunMetrics

logger = logging.getLogger(__name__)


def _symbol(i: int, n: int) -> str:
    return string.ascii_lowercase[i] if n <= len(string.ascii_lowercase) else f"x{i}"


def synthetic_suite(n: int) -> SrsInput:
    if n < 1:
        raise ValueError("suite needs at least one letter")
    rules: List[Rule] = []
    for i in range(n):
        c, d = _symbol(i, n), _symbol((i + 1) % n, n)
        rules.append(Rule((c, c), (c, d, c)))
    return SrsInput(alphabet_of(rules), tuple(rules))


@dataclass
class BenchResult:
    letters: int
    metrics: RunMetrics

    @property
    def speedup(self) -> Optional[float]:
        return self.metrics.speedup


def run_benchmark(n: int, limits: Optional[Limits] = None, compare_full: bool = True) -> BenchResult:
    rec = Recorder()
    rec.start(synthetic_suite(n), limits=limits, check_full=compare_full)
    metrics = rec.run_to_completion()
    logger.info("bench n=%d: %s, %d states, %.1f ms", n, metrics.outcome, metrics.states, metrics.wall_time_ms)
    return BenchResult(n, metrics)
