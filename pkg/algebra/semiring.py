"""
semiring.py — Semiring Signature & Concrete Instances
======================================================
A semiring is handed around as a plain value, SemiringOps, bundling its
two constants and two operations.  Relations, the incremental automaton
and the law checker are all generic over this record.

Instances:
  • BOOLEAN  – ({False, True}, or, and, False, True)
  • NATURAL  – (ℕ, +, ·, 0, 1)
  • FUZZY    – ({−∞} ∪ ℤ ∪ {+∞}, max, min, −∞, +∞)

Fuzzy values are plain Python numbers: finite heights are ints and the
two infinities are float("-inf") / float("inf"), so the built-in total
order, max and min already implement the lattice.  Finite values are
range-checked against signed 64-bit on construction.
"""

import operator
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Iterable, Union

from errors import EngineError


# ---------------------------------------------------------------------------
# SemiringOps
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SemiringOps:
    """
    Attributes:
        name       : registry key, e.g. "fuzzy".
        zero, one  : additive / multiplicative identities.
        plus, times: binary operations.
        eq         : element equality used by law checks (structural by default).
        idempotent : plus(x, x) == x for every x.  The incremental automaton prunes deltas
                     only when this holds.
    """

    name:       str
    zero:       Any
    one:        Any
    plus:       Callable[[Any, Any], Any]
    times:      Callable[[Any, Any], Any]
    eq:         Callable[[Any, Any], bool] = operator.eq
    idempotent: bool = False

    def is_zero(self, x: Any) -> bool:
        return self.eq(x, self.zero)

    def sum(self, xs: Iterable[Any]) -> Any:
        return reduce(self.plus, xs, self.zero)

    def product(self, xs: Iterable[Any]) -> Any:
        return reduce(self.times, xs, self.one)


# ---------------------------------------------------------------------------
# Fuzzy values
# ---------------------------------------------------------------------------
FuzzyValue = Union[int, float]

NEG_INF: float = float("-inf")
POS_INF: float = float("inf")

_INT64_MIN = -(2 ** 63)
_INT64_MAX = 2 ** 63 - 1


def fuzzy_int(n: int) -> int:
    """Finite fuzzy value; refuses anything outside signed 64-bit."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise EngineError(f"fuzzy height must be an integer, got {n!r}")
    if not _INT64_MIN <= n <= _INT64_MAX:
        raise EngineError(f"fuzzy height {n} overflows 64-bit range")
    return n


def fuzzy_plus(a: FuzzyValue, b: FuzzyValue) -> FuzzyValue:
    return a if a >= b else b


def fuzzy_times(a: FuzzyValue, b: FuzzyValue) -> FuzzyValue:
    return a if a <= b else b


def render_fuzzy(x: FuzzyValue) -> str:
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "inf"
    return str(x)


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------
BOOLEAN = SemiringOps(
    name="boolean",
    zero=False,
    one=True,
    plus=operator.or_,
    times=operator.and_,
    idempotent=True,
)

NATURAL = SemiringOps(
    name="natural",
    zero=0,
    one=1,
    plus=operator.add,
    times=operator.mul,
)

FUZZY = SemiringOps(
    name="fuzzy",
    zero=NEG_INF,
    one=POS_INF,
    plus=fuzzy_plus,
    times=fuzzy_times,
    idempotent=True,
)
