"""
verify.py — Independent Certificate Checker
============================================
Re-checks a certificate from scratch with plain fuzzy heights (max/min,
no position tracking) and dense left-to-right matrix products.  Nothing
here touches the incremental automaton or the enriched weights, so a bug
there cannot hide itself.

Checks, each reported separately:
  • malformed   dangling state ids, duplicate states, negative or missing
                heights, symbols outside the alphabet
  • flower      some state carries a c-loop of height >= 0 for every letter c
                (parallel loops merge to their maximum, so a raised loop still counts)
  • epsilon     the ε relation is reflexive and transitive
  • compatible  for every rule l → r and every pair (p, q):
                    A_ε(l)(p,q) <_0 A_ε(r)(p,q)
                where A_ε(w) = E·A(w1)·E·A(w2)·…·E and E is the ε relation
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from algebra.semiring import FUZZY, NEG_INF, POS_INF, FuzzyValue, render_fuzzy
from certificate.model import Certificate
from graph.letter import LetterKind

Matrix = Dict[int, Dict[int, FuzzyValue]]


@dataclass(frozen=True)
class Failure:
    check:   str            # "malformed" | "flower" | "epsilon" | "compatible"
    message: str

    def __str__(self) -> str:
        return f"[{self.check}] {self.message}"


@dataclass
class Verdict:
    failures: List[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def by_check(self, check: str) -> List[Failure]:
        return [f for f in self.failures if f.check == check]


# ---------------------------------------------------------------------------
# Dense fuzzy matrices
# ---------------------------------------------------------------------------
def _zero_matrix(states: Sequence[int]) -> Matrix:
    return {p: {q: FUZZY.zero for q in states} for p in states}


def _multiply(states: Sequence[int], a: Matrix, b: Matrix) -> Matrix:
    out = _zero_matrix(states)
    for p in states:
        for q in states:
            total = FUZZY.zero
            for m in states:
                total = FUZZY.plus(total, FUZZY.times(a[p][m], b[m][q]))
            out[p][q] = total
    return out


def _interleaved(states: Sequence[int], eps: Matrix, letters: Dict[str, Matrix], word: Sequence[str]) -> Matrix:
    acc = eps
    for c in word:
        acc = _multiply(states, acc, letters[c])
        acc = _multiply(states, acc, eps)
    return acc


def _lt_zero(x: FuzzyValue, y: FuzzyValue) -> bool:
    return x < y or (x == NEG_INF and y == NEG_INF)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------
def _malformed(cert: Certificate) -> List[Failure]:
    failures: List[Failure] = []
    known    = set(cert.states)
    alphabet = set(cert.alphabet)

    if len(known) != len(cert.states):
        failures.append(Failure("malformed", "duplicate state ids"))
    for rule in cert.rules:
        stray = set(rule.lhs + rule.rhs) - alphabet
        if stray:
            failures.append(Failure("malformed", f"rule {rule} uses unknown symbols {sorted(stray)}"))

    for e in cert.edges:
        for end in (e.source, e.target):
            if end not in known:
                failures.append(Failure("malformed", f"edge {e} references unknown state {end}"))
        if e.is_epsilon:
            if e.height is not None:
                failures.append(Failure("malformed", f"ε edge {e.source}->{e.target} carries a height"))
            continue
        if e.symbol not in alphabet:
            failures.append(Failure("malformed", f"edge {e} uses symbol outside the alphabet"))
        if e.height is None:
            failures.append(Failure("malformed", f"edge {e} has no height"))
        elif e.height < 0:
            failures.append(Failure("malformed", f"edge {e} has negative height"))
    if cert.plain_edges():
        top = max(e.height for e in cert.plain_edges() if e.height is not None)
        if top != cert.bound:
            failures.append(Failure("malformed", f"claimed bound {cert.bound} but highest edge is {top}"))
    return failures


def _flower(cert: Certificate, letters: Dict[str, Matrix]) -> List[Failure]:
    for p in cert.states:
        if all(letters[c][p][p] >= 0 for c in cert.alphabet):
            return []
    return [Failure("flower", "no state carries a loop of height at least 0 for every letter")]


def _epsilon(states: Sequence[int], eps: Matrix) -> List[Failure]:
    failures: List[Failure] = []
    for p in states:
        if eps[p][p] != POS_INF:
            failures.append(Failure("epsilon", f"missing reflexive ε edge at {p}"))
    square = _multiply(states, eps, eps)
    for p in states:
        for q in states:
            if square[p][q] != FUZZY.zero and eps[p][q] == FUZZY.zero:
                failures.append(Failure("epsilon", f"ε relation not transitive: {p}->{q} missing"))
    return failures


def _compatible(cert: Certificate, states: Sequence[int], eps: Matrix, letters: Dict[str, Matrix]) -> List[Failure]:
    failures: List[Failure] = []
    for rule in cert.rules:
        left  = _interleaved(states, eps, letters, rule.lhs)
        right = _interleaved(states, eps, letters, rule.rhs)
        for p in states:
            for q in states:
                x, y = left[p][q], right[p][q]
                if not _lt_zero(x, y):
                    failures.append(Failure(
                        "compatible",
                        f"rule {rule} at ({p},{q}): {render_fuzzy(x)} is not below {render_fuzzy(y)}",
                    ))
    return failures


def verify(cert: Certificate) -> Verdict:
    failures = _malformed(cert)
    if failures:
        return Verdict(failures)

    states = list(cert.states)
    eps    = _zero_matrix(states)
    letters: Dict[str, Matrix] = {c: _zero_matrix(states) for c in cert.alphabet}
    for e in cert.edges:
        if e.kind is LetterKind.LAMBDA:
            eps[e.source][e.target] = FUZZY.one
        elif e.kind is LetterKind.PLAIN:
            row = letters[e.symbol][e.source]
            row[e.target] = FUZZY.plus(row[e.target], e.height)

    failures += _flower(cert, letters)
    failures += _epsilon(states, eps)
    failures += _compatible(cert, states, eps, letters)
    return Verdict(failures)
