"""
report.py — Text Reports
=========================
Every report is a pure function that takes state and returns text.

Reports:
  • render_prove_report   – outcome line, bound/states/edges, steps, wall time
  • render_stats          – per-rule firings, chain size, multiplication counts, Δ sizes per chain node
  • render_trace          – one line per completion Step
  • render_chain          – multiplication chain dump with its cost
  • render_certificate    – states and labelled edges of a certificate
  • render_verdict        – checker result
  • render_bench          – scaling-suite summary
"""

from typing import Iterable, List, Optional

from algorithms.chain import Chain
from algorithms.step import Step
from certificate.model import Certificate
from certificate.verify import Verdict
from engine.benchmark import BenchResult
from engine.recorder import RunMetrics
from graph.letter import render_word

BUSIEST_NODES = 5


# ---------------------------------------------------------------------------
# Prove
# ---------------------------------------------------------------------------
def render_prove_report(metrics: RunMetrics) -> str:
    if metrics.succeeded:
        head = "YES  matchbound certificate found"
        size = f"bound {metrics.bound}, {metrics.states} states, {metrics.edges} edges"
    else:
        head = f"MAYBE  limit {metrics.limit_kind} reached"
        size = f"{metrics.states} states, {metrics.edges} edges"
    lines = [
        head,
        size,
        f"steps: {metrics.rewrite_steps} rewrite, {metrics.total_steps} total",
        f"wall time: {metrics.wall_time_ms:.1f} ms",
    ]
    return "\n".join(lines) + "\n"


def render_stats(metrics: RunMetrics) -> str:
    lines = ["statistics:"]
    for rule, count in metrics.firings.items():
        lines.append(f"  {rule:<12} {count}")
    lines += [
        f"  {'rounds':<12} {metrics.rounds}",
        f"  {'chain':<12} {metrics.chain_nodes} nodes, cost {metrics.chain_cost}",
        f"  {'products':<12} {metrics.multiplications}",
        f"  {'deltas':<12} {metrics.delta_entries} entries over {len(metrics.delta_sizes)} nodes, "
        f"largest {metrics.max_delta}",
    ]
    if metrics.delta_sizes:
        busiest = sorted(metrics.delta_sizes.items(), key=lambda kv: (-kv[1], kv[0]))[:BUSIEST_NODES]
        lines.append(f"  {'busiest':<12} " + ", ".join(f"#{i} {size}" for i, size in busiest))
    lines.append(f"  {'incremental':<12} {metrics.incremental_ms:.3f} ms")
    if metrics.full_ms:
        lines.append(f"  {'full':<12} {metrics.full_ms:.3f} ms")
        if metrics.speedup is not None:
            lines.append(f"  {'speed-up':<12} {metrics.speedup:.1f}x")
    return "\n".join(lines) + "\n"


def render_trace(steps: Iterable[Step]) -> str:
    lines: List[str] = []
    for s in steps:
        lines.append(f"#{s.step_number:<4} {s.rule.value:<10} {s.explanation}")
        for e in s.edges:
            lines.append(f"        + {e.source} {e.letter}:{_height(e.weight)} {e.target}")
    return "\n".join(lines) + ("\n" if lines else "")


def _height(weight) -> str:
    height = getattr(weight, "height", None)
    return "ε" if height is None else str(height)


# ---------------------------------------------------------------------------
# Chain
# ---------------------------------------------------------------------------
def render_chain(chain: Chain) -> str:
    lines = [f"chain: {len(chain.nodes)} nodes, cost {chain.cost}"]
    queries = {idx: word for word, idx in chain.query_index.items()}
    for node in chain.nodes:
        mark = "  *" if node.id in queries else ""
        lines.append(f"  {node.id:>3}  {node.describe():<16} {render_word(node.word)}{mark}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Certificate & verdict
# ---------------------------------------------------------------------------
def render_certificate(cert: Certificate, show_reflexive: bool = False) -> str:
    lines = [
        f"alphabet: {' '.join(cert.alphabet)}",
        "rules:",
        *(f"  {rule}" for rule in cert.rules),
        f"states: {len(cert.states)}",
        f"bound: {cert.bound}",
        "edges:",
    ]
    for e in cert.edges:
        if e.is_epsilon and e.source == e.target and not show_reflexive:
            continue
        lines.append(f"  {e.source} {e.label()} {e.target}")
    return "\n".join(lines) + "\n"


def render_verdict(verdict: Verdict, limit: Optional[int] = 20) -> str:
    if verdict.ok:
        return "OK  certificate verified\n"
    lines = [f"FAILED  {len(verdict.failures)} problem(s)"]
    shown = verdict.failures if limit is None else verdict.failures[:limit]
    lines += [f"  {f}" for f in shown]
    if len(shown) < len(verdict.failures):
        lines.append(f"  … {len(verdict.failures) - len(shown)} more")
    return "\n".join(lines) + "\n"


def render_bench(result: BenchResult) -> str:
    m = result.metrics
    lines = [
        f"suite: {result.letters} letters",
        f"outcome: {m.outcome}" + (f" (bound {m.bound})" if m.succeeded else f" ({m.limit_kind})"),
        f"states: {m.states}, edges: {m.edges}, rewrite steps: {m.rewrite_steps}",
        f"wall time: {m.wall_time_ms:.1f} ms",
        f"incremental: {m.incremental_ms:.1f} ms",
    ]
    if m.full_ms:
        lines.append(f"full recompute: {m.full_ms:.1f} ms")
    if result.speedup is not None:
        lines.append(f"speed-up: {result.speedup:.1f}x")
    return "\n".join(lines) + "\n"
