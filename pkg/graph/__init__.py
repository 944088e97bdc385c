"""
graph/
-----
Core data layer.  Public API:

    from graph import Relation, Edge, EdgeBatch, Letter
    from graph import plus_with, times_with, combine, diff
"""

from graph.letter import (
    LAMBDA, Letter, LetterKind, Word,
    plain, post_inv, pre_inv, render_word, word_key,
)
from graph.relation import (
    Relation,
    combine, diff, empty, identity, is_ascending, is_mirrored, naive_times,
    plus_with, relation_semiring, times_with,
)
from graph.edge import Edge, EdgeBatch, batch_relations

__all__ = [
    "LAMBDA", "Letter", "LetterKind", "Word",
    "plain", "post_inv", "pre_inv", "render_word", "word_key",
    "Relation",
    "combine", "diff", "empty", "identity", "is_ascending", "is_mirrored", "naive_times",
    "plus_with", "relation_semiring", "times_with",
    "Edge", "EdgeBatch", "batch_relations",
]
