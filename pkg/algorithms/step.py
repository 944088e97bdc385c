"""
step.py — Completion Step Snapshot
===================================
The completion algorithm is a generator that yields one Step per rule
firing.  A Step is a frozen picture of what happened:

    • which rule fired (transitive / inverse / rewrite) or how the run ended
    • the edges that firing added
    • for a rewrite, the violation that triggered it
    • running counters (steps, states, edges, max height) for progress output

The generator is the only writer; the recorder, the CLI trace and the
HTTP API are pure readers.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from graph.edge import Edge


class RuleKind(Enum):
    TRANSITIVE = "transitive"
    INVERSE    = "inverse"
    REWRITE    = "rewrite"
    SUCCESS    = "success"
    LIMIT      = "limit"


@dataclass(frozen=True)
class Step:
    """
    Attributes:
        step_number : 0-based index of this step in the run.
        rule        : RuleKind of the firing (or the final SUCCESS / LIMIT).
        edges       : edges added by this firing.
        violation   : the REWRITE violation that was repaired, if any.
        explanation : one human-readable line.
        metrics     : running tally: steps, states, edges, max_height.
        is_final    : True on the very last step.
        outcome     : the run's Outcome, set on the final step only.
    """

    step_number: int                   = 0
    rule:        RuleKind              = RuleKind.REWRITE
    edges:       Tuple[Edge, ...]      = ()
    violation:   Optional[Any]         = None
    explanation: str                   = ""
    metrics:     Dict[str, Any]        = field(default_factory=dict)
    is_final:    bool                  = False
    outcome:     Optional[Any]         = None
