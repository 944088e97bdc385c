import time

import pytest

from algorithms.srs import Rule
from engine import Recorder, RunMetrics, run_benchmark, synthetic_suite
from ui import render_bench, render_prove_report, render_stats


def test_suite_shape():
    srs = synthetic_suite(3)
    assert srs.rules == (
        Rule(("a", "a"), ("a", "b", "a")),
        Rule(("b", "b"), ("b", "c", "b")),
        Rule(("c", "c"), ("c", "a", "c")),
    )
    assert srs.alphabet == ("a", "b", "c")


def test_large_suites_switch_to_indexed_names():
    srs = synthetic_suite(30)
    assert srs.rules[0] == Rule(("x0", "x0"), ("x0", "x1", "x0"))
    assert srs.rules[-1].rhs == ("x29", "x0", "x29")


def test_suite_needs_a_letter():
    with pytest.raises(ValueError):
        synthetic_suite(0)


def test_nine_letter_suite_completes():
    started = time.perf_counter()
    result = run_benchmark(9, compare_full=False)
    assert time.perf_counter() - started < 10
    assert result.metrics.succeeded
    assert result.metrics.states >= 50
    assert result.speedup is None
    assert "speed-up" not in render_bench(result)


def test_eight_letters_fall_one_state_short():
    result = run_benchmark(8, compare_full=False)
    assert result.metrics.succeeded
    assert result.metrics.states == 49


def test_recorder_metrics_for_example(example_recorder):
    m = example_recorder.get_metrics()
    assert m.succeeded
    assert (m.bound, m.states, m.rewrite_steps) == (2, 7, 2)
    assert m.total_steps == len(example_recorder.steps)
    assert m.firings["rewrite"] == 2
    assert m.chain_nodes > 0

    report = render_prove_report(m)
    assert report.startswith("YES  matchbound certificate found\n")
    assert f"bound 2, 7 states, {m.edges} edges" in report
    assert "statistics:" in render_stats(m)


def test_recorder_export(example_recorder):
    data = example_recorder.export()
    assert data["srs"] == "a a -> a b a\n"
    assert [s["rule"] for s in data["steps"]] == ["rewrite", "inverse", "rewrite", "inverse", "success"]
    assert data["steps"][-1]["is_final"] is True


def test_recorder_requires_start():
    with pytest.raises(RuntimeError):
        Recorder().run_to_completion()


@pytest.mark.benchmark
def test_incremental_beats_full_recomputation():
    result = run_benchmark(9)
    assert result.metrics.succeeded
    assert result.speedup is not None
    assert result.speedup >= 3


def test_stats_block_lists_busiest_nodes():
    m = RunMetrics(outcome="success", bound=1, delta_sizes={3: 4, 7: 9, 1: 9}, max_delta=5)
    text = render_stats(m)
    assert "deltas       22 entries over 3 nodes, largest 5" in text
    assert "busiest      #1 9, #7 9, #3 4" in text


def test_recorder_carries_delta_sizes(example_recorder):
    m = example_recorder.get_metrics()
    assert m.delta_sizes == dict(sorted(example_recorder.state.stats.delta_sizes.items()))
    assert m.delta_entries == sum(m.delta_sizes.values())
