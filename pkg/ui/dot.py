"""
dot.py — Graphviz Renderer
===========================
Pure rendering function: Certificate → DOT text.

Design decisions:
  - NO mutation, no I/O.  The caller writes the string wherever it wants.
  - Plain edges are drawn as `p -> q [label="c:h"]`; inverse letters as
    "→c:h" / "←c:h" in a muted color; ε edges dashed with no label.
  - Reflexive ε loops exist on every state and are hidden by default.
"""

from typing import Dict, List, Optional

from certificate.model import CertEdge, Certificate
from graph.letter import LetterKind


# ---------------------------------------------------------------------------
# Visual Config
# ---------------------------------------------------------------------------
class DotConfig:
    rankdir:        str = "LR"
    node_shape:     str = "circle"
    flower_shape:   str = "doublecircle"
    show_reflexive: bool = False

    edge_colors: Dict[LetterKind, str] = {
        LetterKind.PLAIN:    "",            # graphviz default
        LetterKind.LAMBDA:   "#7d8590",
        LetterKind.PRE_INV:  "#0ea5e9",
        LetterKind.POST_INV: "#f97316",
    }


def _attrs(edge: CertEdge, config: DotConfig) -> str:
    if edge.is_epsilon:
        return f'[style=dashed, color="{config.edge_colors[LetterKind.LAMBDA]}"]'
    label = f'label="{edge.letter}:{edge.height}"'
    color = config.edge_colors[edge.kind]
    return f'[{label}]' if not color else f'[{label}, color="{color}", fontcolor="{color}"]'


def render_dot(cert: Certificate, config: Optional[DotConfig] = None, name: str = "certificate") -> str:
    config = config or DotConfig()
    flower = cert.states[0] if cert.states else None

    lines: List[str] = [f"digraph {name} {{", f"  rankdir={config.rankdir};"]
    for s in cert.states:
        shape = config.flower_shape if s == flower else config.node_shape
        lines.append(f"  {s} [shape={shape}];")
    for e in cert.edges:
        if e.is_epsilon and e.source == e.target and not config.show_reflexive:
            continue
        lines.append(f"  {e.source} -> {e.target} {_attrs(e, config)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
