"""
matchbox.py — Enriched Fuzzy Weights for Matchbound Completion
================================================================
Edge weights E used by the completion engine.  An element is one of

    ZERO              no path              (rank −∞)
    ONE               ε edge / empty path  (rank +∞)
    Val(h, track)     fuzzy height h plus the position of a minimal edge
    Inv(side, h)      formal inverse height: Side.PRE is →h, Side.POST is ←h

plus keeps the path of maximal height, times keeps the edge of minimal
height along a path and updates the position bookkeeping:

    Val(h1,t1)·Val(h2,t2), h1 <= h2  →  Val(h1, t1 with total = t1.total + t2.total)
    Val(h1,t1)·Val(h2,t2), h1 >  h2  →  Val(h2, t2 with offset = t1.total + t2.offset,
                                                       total  = t1.total + t2.total)
    Inv(PRE, f)·Val(g)   →  ONE if f <= g else ZERO
    Val(g)·Inv(POST, f)  →  ONE if f <= g else ZERO

Ties keep the left argument.  ONE behaves as a track with total 0, so ε
edges never shift offsets.  The structure is a semiring only up to
weight_equivalent (same kind, same rank); MATCHBOX_BY_WEIGHT carries that
equivalence for law checking.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Union

from algebra.semiring import NEG_INF, POS_INF, FuzzyValue, SemiringOps, fuzzy_int
from errors import EngineError


class Side(Enum):
    PRE  = "pre"     # →c : collapses with a following c
    POST = "post"    # ←c : collapses with a preceding c


@dataclass(frozen=True)
class Track:
    """
    Position of the minimal edge of a multiplied path.

    Attributes:
        source, target : endpoints of the tracked edge.
        offset         : plain letters strictly before the tracked edge.
        total          : plain letters in the whole evaluated word.
    """

    source: int
    target: int
    offset: int
    total:  int


@dataclass(frozen=True)
class Zero:
    def __repr__(self) -> str:
        return "ZERO"


@dataclass(frozen=True)
class One:
    def __repr__(self) -> str:
        return "ONE"


@dataclass(frozen=True)
class Val:
    height: int
    track:  Track


@dataclass(frozen=True)
class Inv:
    side:   Side
    height: int


EWeight = Union[Zero, One, Val, Inv]

ZERO = Zero()
ONE  = One()


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------
def mk_edge_val(height: int, source: int, target: int) -> Val:
    """Weight of a single plain-letter edge: it tracks itself."""
    return Val(fuzzy_int(height), Track(source, target, 0, 1))


def mk_inv(side: Side, height: int) -> Inv:
    return Inv(side, fuzzy_int(height))


def mk_one() -> One:
    return ONE


# ---------------------------------------------------------------------------
# Rank / comparisons
# ---------------------------------------------------------------------------
def rank(w: EWeight) -> FuzzyValue:
    if isinstance(w, Val):
        return w.height
    if isinstance(w, Zero):
        return NEG_INF
    if isinstance(w, One):
        return POS_INF
    raise EngineError(f"inverse weight {w!r} has no rank")


def lt_zero(a: EWeight, b: EWeight) -> bool:
    """x <_0 y  iff  x < y, or both are zero."""
    if isinstance(a, Zero) and isinstance(b, Zero):
        return True
    return rank(a) < rank(b)


def weight_equivalent(a: EWeight, b: EWeight) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, Inv):
        return a == b
    return rank(a) == rank(b)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------
def eplus(a: EWeight, b: EWeight) -> EWeight:
    if isinstance(a, Zero):
        return b
    if isinstance(b, Zero):
        return a
    if isinstance(a, Val) and isinstance(b, Val):
        return a if a.height >= b.height else b
    if isinstance(a, One) and isinstance(b, (One, Val)):
        return a
    if isinstance(b, One) and isinstance(a, Val):
        return b
    if isinstance(a, Inv) and isinstance(b, Inv) and a.side is b.side:
        return a if a.height <= b.height else b
    raise EngineError(f"cannot add {a!r} and {b!r}")


def etimes(a: EWeight, b: EWeight) -> EWeight:
    if isinstance(a, Zero) or isinstance(b, Zero):
        return ZERO
    if isinstance(a, One):
        return b
    if isinstance(b, One):
        return a
    if isinstance(a, Val) and isinstance(b, Val):
        t1, t2 = a.track, b.track
        total  = t1.total + t2.total
        if a.height <= b.height:
            return Val(a.height, Track(t1.source, t1.target, t1.offset, total))
        return Val(b.height, Track(t2.source, t2.target, t1.total + t2.offset, total))
    if isinstance(a, Inv) and a.side is Side.PRE and isinstance(b, Val):
        return ONE if a.height <= b.height else ZERO
    if isinstance(a, Val) and isinstance(b, Inv) and b.side is Side.POST:
        return ONE if b.height <= a.height else ZERO
    raise EngineError(f"cannot multiply {a!r} by {b!r}")


# ---------------------------------------------------------------------------
# Rendering (textual form used in certificate dumps)
# ---------------------------------------------------------------------------
def render_weight(w: EWeight) -> str:
    if isinstance(w, Zero):
        return "0"
    if isinstance(w, One):
        return "inf"
    if isinstance(w, Val):
        return str(w.height)
    arrow = "->" if w.side is Side.PRE else "<-"
    return f"{arrow}{w.height}"


MATCHBOX = SemiringOps(
    name="matchbox",
    zero=ZERO,
    one=ONE,
    plus=eplus,
    times=etimes,
    idempotent=True,
)

MATCHBOX_BY_WEIGHT = replace(MATCHBOX, name="matchbox-by-weight", eq=weight_equivalent)
