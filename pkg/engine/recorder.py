"""
recorder.py — Completion Run Recorder
======================================
Records a complete completion run (all Steps), then computes the
metrics the report, the `--stats` block and the HTTP API render.

Usage:
    rec = Recorder()
    rec.start(srs, limits=LIMIT_PRESETS["default"])
    rec.run_to_completion(on_step=progress)   # exhausts the generator
    metrics = rec.get_metrics()
    cert    = rec.certificate()               # None unless the run succeeded
    rec.export()                              # serialisable snapshot
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional

from algorithms.completion import CompletionState, Limit, Limits, Outcome, Success, complete, flower_init
from algorithms.srs import SrsInput, render_srs
from algorithms.step import Step
from certificate.model import Certificate
from errors import EngineError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Metrics dataclass
# ---------------------------------------------------------------------------
@dataclass
class RunMetrics:
    outcome:         str            = ""      # "success" | "limit"
    limit_kind:      str            = ""      # set when outcome == "limit"
    bound:           Optional[int]  = None
    states:          int            = 0
    edges:           int            = 0
    rewrite_steps:   int            = 0       # REWRITE firings
    total_steps:     int            = 0       # number of Steps yielded
    rounds:          int            = 0
    firings:         Dict[str, int] = field(default_factory=dict)
    chain_nodes:     int            = 0
    chain_cost:      int            = 0
    multiplications: int            = 0
    delta_sizes:     Dict[int, int] = field(default_factory=dict)   # chain index → Σ|Δ|
    max_delta:       int            = 0
    wall_time_ms:    float          = 0.0
    incremental_ms:  float          = 0.0
    full_ms:         float          = 0.0     # only with the full-recompute check

    @property
    def succeeded(self) -> bool:
        return self.outcome == "success"

    @property
    def delta_entries(self) -> int:
        return sum(self.delta_sizes.values())

    @property
    def speedup(self) -> Optional[float]:
        if self.full_ms <= 0 or self.incremental_ms <= 0:
            return None
        return self.full_ms / self.incremental_ms


# ---------------------------------------------------------------------------
# Recorder
# ---------------------------------------------------------------------------
class Recorder:
    """
    Attributes:
        steps   : Full list of Steps from the run.
        metrics : Computed RunMetrics (available after run_to_completion).
        state   : The CompletionState being driven.
        outcome : Success or Limit once the run has finished.
    """

    def __init__(self):
        self.steps:   List[Step]                = []
        self.metrics: Optional[RunMetrics]      = None
        self.state:   Optional[CompletionState] = None
        self.outcome: Optional[Outcome]         = None

        self._srs:        Optional[SrsInput] = None
        self._start_time: float              = 0.0

    # ------------------------------------------------------------------
    # Setup & run
    # ------------------------------------------------------------------
    def start(self, srs: SrsInput, limits: Optional[Limits] = None, check_full: bool = False) -> None:
        self._srs    = srs
        self.steps   = []
        self.metrics = None
        self.outcome = None
        self._start_time = time.perf_counter()
        self.state = flower_init(srs.alphabet, srs.rules, limits, check_full=check_full)

    def run_to_completion(self, on_step: Optional[Callable[[Step], None]] = None) -> RunMetrics:
        """Exhaust the generator, record every step, compute metrics."""
        if self.state is None:
            raise RuntimeError("Call start() first.")

        for step in complete(self.state):
            self.steps.append(step)
            if on_step is not None:
                on_step(step)

        last = self.steps[-1] if self.steps else None
        if last is None or last.outcome is None:
            raise EngineError("completion ended without an outcome")
        self.outcome = last.outcome

        wall_ms = (time.perf_counter() - self._start_time) * 1000
        self.metrics = self._compute_metrics(wall_ms)
        logger.info("run finished: %s after %d steps in %.1f ms",
                    self.metrics.outcome, self.metrics.total_steps, wall_ms)
        return self.metrics

    def get_metrics(self) -> Optional[RunMetrics]:
        return self.metrics

    def certificate(self) -> Optional[Certificate]:
        if not isinstance(self.outcome, Success) or self.state is None:
            return None
        return Certificate.from_state(self.state)

    # ------------------------------------------------------------------
    # Export (serialisable snapshot)
    # ------------------------------------------------------------------
    def export(self) -> Dict[str, Any]:
        return {
            "srs":     render_srs(self._srs) if self._srs else "",
            "metrics": asdict(self.metrics) if self.metrics else {},
            "steps": [
                {
                    "step_number": s.step_number,
                    "rule":        s.rule.value,
                    "edges":       [str(e) for e in s.edges],
                    "explanation": s.explanation,
                    "metrics":     dict(s.metrics),
                    "is_final":    s.is_final,
                }
                for s in self.steps
            ],
        }

    # ------------------------------------------------------------------
    # Internal
    # ------------------------------------------------------------------
    def _compute_metrics(self, wall_ms: float) -> RunMetrics:
        st, outcome = self.state, self.outcome
        stats = st.stats
        return RunMetrics(
            outcome="success" if isinstance(outcome, Success) else "limit",
            limit_kind=outcome.kind if isinstance(outcome, Limit) else "",
            bound=outcome.bound if isinstance(outcome, Success) else None,
            states=stats.states,
            edges=stats.edges,
            rewrite_steps=stats.steps,
            total_steps=len(self.steps),
            rounds=stats.rounds,
            firings=dict(stats.firings),
            chain_nodes=len(st.automaton.chain.nodes),
            chain_cost=st.automaton.chain.cost,
            multiplications=stats.multiplications,
            delta_sizes=dict(sorted(stats.delta_sizes.items())),
            max_delta=stats.max_delta,
            wall_time_ms=round(wall_ms, 2),
            incremental_ms=round(stats.incremental_seconds * 1000, 3),
            full_ms=round(stats.full_seconds * 1000, 3),
        )
