"""
model.py — Certificate Model
=============================
A certificate is the final automaton of a successful completion, reduced
to plain data: states, labelled edges with integer heights, the rules and
alphabet it was built for, and the bound it claims.

Design decisions:
  - Edges carry the letter as (kind, symbol) and the weight as its height
    only.  ε edges have height None; position tracking is dropped.
  - Everything is a tuple so certificates are hashable and compare by
    value, which is what the JSON round trip relies on.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from algebra.matchbox import One
from algorithms.completion import CompletionState, bound_of
from algorithms.srs import Rule
from graph.letter import Letter, LetterKind


@dataclass(frozen=True)
class CertEdge:
    source: int
    kind:   LetterKind
    symbol: Optional[str]
    target: int
    height: Optional[int]

    @property
    def letter(self) -> Letter:
        return Letter(self.kind, self.symbol)

    @property
    def is_epsilon(self) -> bool:
        return self.kind is LetterKind.LAMBDA

    def label(self) -> str:
        if self.is_epsilon:
            return "ε"
        return f"{self.letter}:{self.height}"

    def __str__(self) -> str:
        return f"{self.source} -{self.label()}-> {self.target}"


@dataclass(frozen=True)
class Certificate:
    """
    Attributes:
        alphabet : plain symbols, sorted.
        rules    : rewriting rules in input order.
        states   : state ids, ascending.
        edges    : every stored edge, sorted by (source, target, letter).
        bound    : maximum height over plain edges.
    """

    alphabet: Tuple[str, ...]
    rules:    Tuple[Rule, ...]
    states:   Tuple[int, ...]
    edges:    Tuple[CertEdge, ...]
    bound:    int

    @classmethod
    def from_state(cls, st: CompletionState) -> "Certificate":
        automaton = st.automaton
        edges = []
        for letter, rel in automaton.base.items():
            for p, q, w in rel:
                height = None if isinstance(w, One) else int(w.height)
                edges.append(CertEdge(p, letter.kind, letter.symbol, q, height))
        edges.sort(key=lambda e: (e.source, e.target, e.letter.sort_key()))
        return cls(
            alphabet=tuple(st.alphabet),
            rules=tuple(st.rules),
            states=tuple(st.state_ids),
            edges=tuple(edges),
            bound=bound_of(automaton),
        )

    def plain_edges(self) -> Tuple[CertEdge, ...]:
        return tuple(e for e in self.edges if e.kind is LetterKind.PLAIN)

    def epsilon_edges(self, reflexive: bool = True) -> Tuple[CertEdge, ...]:
        return tuple(
            e for e in self.edges
            if e.is_epsilon and (reflexive or e.source != e.target)
        )

    def without(self, edge: CertEdge) -> "Certificate":
        return Certificate(self.alphabet, self.rules, self.states,
                           tuple(e for e in self.edges if e != edge), self.bound)

    def replacing(self, old: CertEdge, new: CertEdge) -> "Certificate":
        return Certificate(self.alphabet, self.rules, self.states,
                           tuple(new if e == old else e for e in self.edges), self.bound)
