"""
ui/
---
Presentation layer: stateless text renderers.

    from ui import render_dot, render_prove_report, render_certificate, …
"""

from ui.dot import DotConfig, render_dot

from ui.report import (
    render_bench,
    render_certificate,
    render_chain,
    render_prove_report,
    render_stats,
    render_trace,
    render_verdict,
)

__all__ = [
    "DotConfig",
    "render_dot",
    "render_bench",
    "render_certificate",
    "render_chain",
    "render_prove_report",
    "render_stats",
    "render_trace",
    "render_verdict",
]
