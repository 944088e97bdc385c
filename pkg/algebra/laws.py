"""
laws.py — Semiring Law Checker
===============================
Brute-force evaluation of the semiring axioms over every pair / triple
drawn from a finite sample.  Returns the list of violated instances;
an empty list means the sample satisfies all laws.

Laws checked (a, b, c range over the samples):
  plus_assoc        a+(b+c) = (a+b)+c
  plus_comm         a+b = b+a
  plus_identity     0+a = a
  times_assoc       a·(b·c) = (a·b)·c
  times_identity    1·a = a = a·1
  annihilation      0·a = 0 = a·0
  left_distrib      a·(b+c) = a·b + a·c
  right_distrib     (a+b)·c = a·c + b·c
  idempotence       a+a = a          (only with check_idempotence=True)
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, List, Sequence, Tuple

from algebra.semiring import SemiringOps


@dataclass(frozen=True)
class LawViolation:
    law:  str
    args: Tuple[Any, ...]
    lhs:  Any
    rhs:  Any

    def __str__(self) -> str:
        return f"{self.law}{self.args}: {self.lhs!r} != {self.rhs!r}"


def check_semiring_laws(
    ops: SemiringOps,
    samples: Sequence[Any],
    check_idempotence: bool = False,
) -> List[LawViolation]:
    if not samples:
        raise ValueError("check_semiring_laws needs at least one sample")

    plus, times, eq = ops.plus, ops.times, ops.eq
    zero, one       = ops.zero, ops.one
    report: List[LawViolation] = []

    def expect(law: str, args: Tuple[Any, ...], lhs: Any, rhs: Any) -> None:
        if not eq(lhs, rhs):
            report.append(LawViolation(law, args, lhs, rhs))

    for a in samples:
        expect("plus_identity",  (a,), plus(zero, a), a)
        expect("times_identity", (a,), times(one, a), a)
        expect("times_identity", (a,), times(a, one), a)
        expect("annihilation",   (a,), times(zero, a), zero)
        expect("annihilation",   (a,), times(a, zero), zero)
        if check_idempotence:
            expect("idempotence", (a,), plus(a, a), a)

    for a, b in product(samples, repeat=2):
        expect("plus_comm", (a, b), plus(a, b), plus(b, a))

    for a, b, c in product(samples, repeat=3):
        expect("plus_assoc",    (a, b, c), plus(a, plus(b, c)), plus(plus(a, b), c))
        expect("times_assoc",   (a, b, c), times(a, times(b, c)), times(times(a, b), c))
        expect("left_distrib",  (a, b, c), times(a, plus(b, c)), plus(times(a, b), times(a, c)))
        expect("right_distrib", (a, b, c), times(plus(a, b), c), plus(times(a, c), times(b, c)))

    return report
