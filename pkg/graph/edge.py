"""
edge.py — Labelled Edges & Edge Batches
========================================
An Edge connects two states under one letter of the extended alphabet
and carries a semiring weight.  An EdgeBatch is the unit of change fed
to the incremental automaton: a list of edges that may introduce new
states simply by mentioning them.

Design decisions:
  - `source` and `target` are plain ints (state ids), never objects, so
    edges stay hashable and serialisable.
  - A batch is split per letter into Relations before it is applied;
    parallel edges for the same (source, letter, target) are merged with
    the semiring's plus at that point.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List

from algebra.semiring import SemiringOps
from graph.letter import Letter
from graph.relation import Relation


@dataclass(frozen=True)
class Edge:
    """
    Attributes:
        source : tail state id.
        letter : extended-alphabet label.
        target : head state id.
        weight : semiring element, never the semiring zero.
    """

    source: int
    letter: Letter
    target: int
    weight: Any

    def __str__(self) -> str:
        return f"{self.source} -{self.letter}:{self.weight!r}-> {self.target}"


EdgeBatch = List[Edge]


def batch_relations(batch: Iterable[Edge], ops: SemiringOps) -> Dict[Letter, Relation]:
    """Split a batch into one Relation per letter, merging parallel edges with plus."""
    grouped: Dict[Letter, list] = {}
    for edge in batch:
        grouped.setdefault(edge.letter, []).append((edge.source, edge.target, edge.weight))
    return {
        letter: Relation.from_edges(triples, ops.plus, ops.zero)
        for letter, triples in grouped.items()
    }
