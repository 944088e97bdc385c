"""
engine/
-------
Run recording & benchmarking layer.

    from engine import Recorder, RunMetrics, run_benchmark
"""

from engine.recorder  import Recorder, RunMetrics
from engine.benchmark import BenchResult, run_benchmark, synthetic_suite

__all__ = [
    "Recorder",
    "RunMetrics",
    "BenchResult",
    "run_benchmark",
    "synthetic_suite",
]
