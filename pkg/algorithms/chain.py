"""
chain.py — Multiplication Chains via RePair
=============================================
A multiplication chain for a finite word set W is a set of words that
contains every letter of W, contains W, and in which every word longer
than one letter is the concatenation of two members.  Evaluating the
chain bottom-up computes A(w) for every w ∈ W with one relation product
per composite member; that count is the chain's cost.

Construction (RePair):
  1. Canonicalise W (dedupe, sort) and spell each word as unit indexes.
  2. While some sequence is longer than 2: find the adjacent index pair
     with the most non-overlapping occurrences over all sequences,
     create a Times node for it, and substitute it left-to-right.
  3. Close every remaining length-2 sequence with one more Times node.

Ties between equally frequent pairs go to the pair whose first
occurrence (word index, position) is smallest.  Times nodes are
hash-consed on (left, right), so structurally equal products are shared.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from errors import InputError, QueryError
from graph.letter import Letter, Word, render_word, word_key

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


# ---------------------------------------------------------------------------
# Chain model
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ChainNode:
    """
    Attributes:
        id     : position in the chain (topological order).
        letter : the letter of a Unit node, None for Times nodes.
        left   : index of the left factor (Times only).
        right  : index of the right factor (Times only).
        word   : the word this node denotes.
    """

    id:     int
    letter: Optional[Letter]
    left:   Optional[int]
    right:  Optional[int]
    word:   Word

    @property
    def is_unit(self) -> bool:
        return self.letter is not None

    def describe(self) -> str:
        if self.is_unit:
            return f"Unit {self.letter}"
        return f"Times({self.left}, {self.right})"


@dataclass(frozen=True)
class Chain:
    nodes:       Tuple[ChainNode, ...]
    query_index: Dict[Word, int] = field(default_factory=dict)

    @property
    def cost(self) -> int:
        return sum(1 for node in self.nodes if not node.is_unit)

    def node_for(self, word: Sequence[Letter]) -> int:
        try:
            return self.query_index[tuple(word)]
        except KeyError:
            raise QueryError(f"word '{render_word(word)}' is not a registered query") from None

    def units(self) -> Dict[Letter, int]:
        return {node.letter: node.id for node in self.nodes if node.is_unit}


def cost(chain: Chain) -> int:
    return chain.cost


# ---------------------------------------------------------------------------
# Builder
# ---------------------------------------------------------------------------
class _ChainBuilder:

    def __init__(self):
        self.nodes: List[ChainNode]    = []
        self.units: Dict[Letter, int]  = {}
        self.pairs: Dict[Pair, int]    = {}

    def unit(self, letter: Letter) -> int:
        idx = self.units.get(letter)
        if idx is None:
            idx = len(self.nodes)
            self.nodes.append(ChainNode(idx, letter, None, None, (letter,)))
            self.units[letter] = idx
        return idx

    def times(self, left: int, right: int) -> int:
        idx = self.pairs.get((left, right))
        if idx is None:
            idx = len(self.nodes)
            word = self.nodes[left].word + self.nodes[right].word
            self.nodes.append(ChainNode(idx, None, left, right, word))
            self.pairs[(left, right)] = idx
        return idx


def build_chain(words: Iterable[Sequence[Letter]]) -> Chain:
    canonical = sorted({tuple(w) for w in words}, key=word_key)
    if any(len(w) == 0 for w in canonical):
        raise InputError("query words must be nonempty")

    builder = _ChainBuilder()
    seqs: List[List[int]] = [[builder.unit(c) for c in w] for w in canonical]

    while any(len(s) > 2 for s in seqs):
        pair = _most_frequent_pair(seqs)
        idx  = builder.times(*pair)
        seqs = [_substitute(s, pair, idx) for s in seqs]

    query_index: Dict[Word, int] = {}
    for w, s in zip(canonical, seqs):
        query_index[w] = s[0] if len(s) == 1 else builder.times(s[0], s[1])

    chain = Chain(tuple(builder.nodes), query_index)
    logger.debug("chain for %d words: %d nodes, cost %d", len(canonical), len(chain.nodes), chain.cost)
    return chain


def _most_frequent_pair(seqs: List[List[int]]) -> Pair:
    counts: Dict[Pair, int]               = {}
    first:  Dict[Pair, Tuple[int, int]]   = {}
    for wi, s in enumerate(seqs):
        last_at: Dict[Pair, int] = {}
        for i in range(len(s) - 1):
            pair = (s[i], s[i + 1])
            if last_at.get(pair, -2) == i - 1:
                continue        # overlaps the occurrence just counted (runs like x x x)
            last_at[pair] = i
            counts[pair] = counts.get(pair, 0) + 1
            first.setdefault(pair, (wi, i))
    return min(counts, key=lambda pair: (-counts[pair], first[pair]))


def _substitute(seq: List[int], pair: Pair, idx: int) -> List[int]:
    out: List[int] = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and (seq[i], seq[i + 1]) == pair:
            out.append(idx)
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return out


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------
def is_chain(chain: Chain, words: Iterable[Sequence[Letter]]) -> bool:
    nodes = chain.nodes
    for pos, node in enumerate(nodes):
        if node.id != pos:
            return False
        if node.is_unit:
            if node.word != (node.letter,):
                return False
            continue
        if node.left is None or node.right is None:
            return False
        if not (0 <= node.left < pos and 0 <= node.right < pos):
            return False
        if node.word != nodes[node.left].word + nodes[node.right].word:
            return False

    denoted = {node.word for node in nodes}
    units   = chain.units()
    for w in words:
        w = tuple(w)
        if any(c not in units for c in w):
            return False
        if w not in denoted:
            return False
    return True


def evaluate_node(chain: Chain, idx: int) -> Word:
    """Rebuild the word of a node from its Times tree alone."""
    node = chain.nodes[idx]
    if node.is_unit:
        return (node.letter,)
    return evaluate_node(chain, node.left) + evaluate_node(chain, node.right)
