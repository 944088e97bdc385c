"""
algebra/__init__.py — Semiring Registry
=========================================
Single source of truth for every semiring the engine knows about.

    from algebra import REGISTRY, get_semiring

REGISTRY maps a key to a SemiringInfo card.  The CLI, the HTTP API and
the randomized test suites all consume it, so adding an instance means
writing the SemiringOps value and adding one entry here.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra.semiring import (
    BOOLEAN, NATURAL, FUZZY, NEG_INF, POS_INF,
    FuzzyValue, SemiringOps, fuzzy_int, fuzzy_plus, fuzzy_times, render_fuzzy,
)
from algebra.laws import LawViolation, check_semiring_laws
from algebra.matchbox import (
    MATCHBOX, MATCHBOX_BY_WEIGHT, ONE, ZERO,
    EWeight, Inv, One, Side, Track, Val, Zero,
    eplus, etimes, lt_zero, mk_edge_val, mk_inv, mk_one, rank, render_weight, weight_equivalent,
)


# ---------------------------------------------------------------------------
# SemiringInfo: metadata card for each instance
# ---------------------------------------------------------------------------
@dataclass
class SemiringInfo:
    key:         str                 # registry key, e.g. "fuzzy"
    label:       str                 # human label
    ops:         SemiringOps
    samples:     List[Any] = field(default_factory=list)   # law-check sample set
    description: str = ""


REGISTRY: Dict[str, SemiringInfo] = {

    "boolean": SemiringInfo(
        key="boolean", label="Boolean", ops=BOOLEAN,
        samples=[False, True],
        description="(or, and): plain reachability.",
    ),

    "natural": SemiringInfo(
        key="natural", label="Natural numbers", ops=NATURAL,
        samples=[0, 1, 2, 3, 7],
        description="(+, ·): counts paths. Not idempotent.",
    ),

    "fuzzy": SemiringInfo(
        key="fuzzy", label="Fuzzy (max, min)", ops=FUZZY,
        samples=[NEG_INF, -1, 0, 2, POS_INF],
        description="Best path is the one whose weakest edge is strongest.",
    ),

    "matchbox": SemiringInfo(
        key="matchbox", label="Matchbox weights", ops=MATCHBOX_BY_WEIGHT,
        samples=[
            ZERO, ONE,
            mk_edge_val(0, 1, 1), mk_edge_val(1, 1, 2), mk_edge_val(1, 3, 4), mk_edge_val(2, 2, 3),
        ],
        description="Fuzzy heights with minimal-edge tracking; laws hold up to equal rank.",
    ),
}


def get_semiring(key: str) -> Optional[SemiringInfo]:
    return REGISTRY.get(key)


def list_semirings() -> List[SemiringInfo]:
    return list(REGISTRY.values())


__all__ = [
    "SemiringInfo", "REGISTRY", "get_semiring", "list_semirings",
    "SemiringOps", "BOOLEAN", "NATURAL", "FUZZY", "NEG_INF", "POS_INF",
    "FuzzyValue", "fuzzy_int", "fuzzy_plus", "fuzzy_times", "render_fuzzy",
    "LawViolation", "check_semiring_laws",
    "MATCHBOX", "MATCHBOX_BY_WEIGHT", "ZERO", "ONE",
    "EWeight", "Zero", "One", "Val", "Inv", "Side", "Track",
    "eplus", "etimes", "lt_zero", "mk_edge_val", "mk_inv", "mk_one",
    "rank", "render_weight", "weight_equivalent",
]
