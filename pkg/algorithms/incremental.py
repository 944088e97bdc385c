"""
incremental.py — Incremental Automaton over a Multiplication Chain
===================================================================
Keeps A(w) for every member w of a multiplication chain and updates all
of them after a batch of edge additions without recomputing from
scratch.

For a chain member w = w1·w2 and an update A' = A + Δ:

    A'(w) = A(w) + Δ(w1)·A(w2) + A(w1)·Δ(w2) + Δ(w1)·Δ(w2)

evaluated bottom-up along the chain with the OLD A(w1), A(w2).  For
idempotent semirings Δ(w) is then pruned to the entries that actually
changed, so deltas stay as small as the real change; for other semirings
the raw three-term sum is carried upward, which is exact for any
semiring.

At least one factor of every product is a Δ, which is what makes an
update cheap when A is large and Δ is small.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.semiring import SemiringOps
from algorithms.chain import Chain, build_chain
from errors import InputError
from graph.edge import EdgeBatch, batch_relations
from graph.letter import Letter
from graph.relation import Relation, diff, empty, naive_times, plus_with, times_with

logger = logging.getLogger(__name__)

_EMPTY = empty()


# ---------------------------------------------------------------------------
# Statistics of one sweep
# ---------------------------------------------------------------------------
@dataclass
class SweepStats:
    delta_sizes:     Dict[int, int] = field(default_factory=dict)   # chain index → |Δ|
    multiplications: int            = 0
    edges_added:     int            = 0

    @property
    def changed_entries(self) -> int:
        return sum(self.delta_sizes.values())


# ---------------------------------------------------------------------------
# Automaton value
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class IncrementalAutomaton:
    """
    Attributes:
        chain      : multiplication chain over the query words.
        base       : {letter: A(letter)} for every letter ever given an edge.
        products   : A(node.word) per chain node, indexed like chain.nodes.
        ops        : the weight semiring.
        last_sweep : statistics of the update that produced this value.
    """

    chain:      Chain
    base:       Dict[Letter, Relation]
    products:   Tuple[Relation, ...]
    ops:        SemiringOps
    last_sweep: SweepStats = field(default_factory=SweepStats)

    def relation(self, letter: Letter) -> Relation:
        return self.base.get(letter, _EMPTY)


def _times(ops: SemiringOps, r: Relation, s: Relation) -> Relation:
    return times_with(ops.plus, ops.times, r, s, ops.zero)


def _plus(ops: SemiringOps, r: Relation, s: Relation) -> Relation:
    return plus_with(ops.plus, r, s, ops.zero)


def _full_products(chain: Chain, base: Dict[Letter, Relation], ops: SemiringOps) -> Tuple[Relation, ...]:
    products: List[Relation] = []
    for node in chain.nodes:
        if node.is_unit:
            products.append(base.get(node.letter, _EMPTY))
        else:
            products.append(_times(ops, products[node.left], products[node.right]))
    return tuple(products)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------
def init_automaton(
    query_words: Iterable[Sequence[Letter]],
    base_edges: EdgeBatch,
    ops: SemiringOps,
) -> IncrementalAutomaton:
    words = [tuple(w) for w in query_words]
    if not words:
        raise InputError("at least one query word is required")
    chain = build_chain(words)
    base  = batch_relations(base_edges, ops)
    stats = SweepStats(multiplications=chain.cost, edges_added=len(base_edges))
    return IncrementalAutomaton(chain, base, _full_products(chain, base, ops), ops, stats)


def apply_delta(a: IncrementalAutomaton, delta: EdgeBatch) -> IncrementalAutomaton:
    ops, chain = a.ops, a.chain
    stats = SweepStats(edges_added=len(delta))
    if not delta:
        return IncrementalAutomaton(chain, a.base, a.products, ops, stats)

    base = dict(a.base)
    letter_delta: Dict[Letter, Relation] = {}
    for letter, added in batch_relations(delta, ops).items():
        old = base.get(letter, _EMPTY)
        new = _plus(ops, old, added)
        base[letter] = new
        letter_delta[letter] = diff(new, old, within=added) if ops.idempotent else added

    old_products = a.products
    products: List[Relation] = list(old_products)
    deltas:   List[Relation] = [_EMPTY] * len(chain.nodes)

    for node in chain.nodes:
        i = node.id
        if node.is_unit:
            d = letter_delta.get(node.letter)
            if d is not None and not d.is_empty():
                deltas[i]   = d
                products[i] = base[node.letter]
        else:
            dl, dr = deltas[node.left], deltas[node.right]
            if dl.is_empty() and dr.is_empty():
                continue
            al, ar = old_products[node.left], old_products[node.right]
            terms: List[Relation] = []
            if not dl.is_empty():
                terms.append(_times(ops, dl, ar))
            if not dr.is_empty():
                terms.append(_times(ops, al, dr))
            if not dl.is_empty() and not dr.is_empty():
                terms.append(_times(ops, dl, dr))
            stats.multiplications += len(terms)

            d_sum = terms[-1]
            for term in reversed(terms[:-1]):
                d_sum = _plus(ops, term, d_sum)

            old_t = old_products[i]
            new_t = _plus(ops, old_t, d_sum)
            products[i] = new_t
            deltas[i]   = diff(new_t, old_t, within=d_sum) if ops.idempotent else d_sum

        if not deltas[i].is_empty():
            stats.delta_sizes[i] = deltas[i].support_size()

    logger.debug(
        "sweep: %d edges, %d multiplications, %d changed entries",
        len(delta), stats.multiplications, stats.changed_entries,
    )
    return IncrementalAutomaton(chain, base, tuple(products), ops, stats)


def get_relation(a: IncrementalAutomaton, word: Sequence[Letter]) -> Relation:
    return a.products[a.chain.node_for(word)]


def query(a: IncrementalAutomaton, word: Sequence[Letter], p: int, q: int) -> Any:
    return get_relation(a, word).lookup(p, q, a.ops.zero)


def recompute_full(a: IncrementalAutomaton) -> IncrementalAutomaton:
    stats = SweepStats(multiplications=a.chain.cost)
    return IncrementalAutomaton(a.chain, a.base, _full_products(a.chain, a.base, a.ops), a.ops, stats)


def evaluate_word(ops: SemiringOps, base: Dict[Letter, Relation], word: Sequence[Letter]) -> Relation:
    """Plain left-to-right product of base relations; the slow reference for A(word)."""
    if not word:
        raise InputError("cannot evaluate the empty word")
    acc = base.get(word[0], _EMPTY)
    for letter in word[1:]:
        acc = naive_times(ops, acc, base.get(letter, _EMPTY))
    return acc


def product_mismatches(
    a: IncrementalAutomaton,
    b: IncrementalAutomaton,
    eq: Optional[Any] = None,
) -> List[int]:
    """Chain indexes whose relations differ (entrywise, under eq if given)."""
    bad: List[int] = []
    for i, (r, s) in enumerate(zip(a.products, b.products)):
        if eq is None:
            if r != s:
                bad.append(i)
            continue
        if r.fore.keys() != s.fore.keys() or any(
            r.fore[p].keys() != s.fore[p].keys()
            or not all(eq(w, s.fore[p][q]) for q, w in r.fore[p].items())
            for p in r.fore
        ):
            bad.append(i)
    return bad
