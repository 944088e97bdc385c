"""
relation.py — Sparse Weighted Relations
========================================
A weighted relation r : Q × Q → S stored as two mirrored nested maps

    fore[p][q] = w      successors of p
    back[q][p] = w      predecessors of q

Only non-zero weights are stored.  Both indexes are always kept in sync,
so successors and predecessors are one outer-map access each.  Outer and
inner keys are kept in ascending order, so every iteration over a
relation is deterministic.

Relations are values: every operation returns a new Relation and never
mutates its inputs.  Untouched inner rows are shared between the input
and the result, so adding a small relation to a large one costs in the
size of the small one plus the touched rows.

Operations:
  plus_with(f, r, s)        entrywise union, clashes combined with f
  times_with(f, g, r, s)    matrix product: Σ_f g(r(p,m), s(m,q)) over m
  combine(g, col, row)      outer product for one middle node
  diff(new, old)            entries of new whose weight differs in old
"""

from types import MappingProxyType
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from algebra.semiring import SemiringOps

Weight  = Any
Index   = Dict[int, Dict[int, Weight]]
Triple  = Tuple[int, int, Weight]
Combine = Callable[[Weight, Weight], Weight]

_EMPTY_ROW: Mapping[int, Weight] = MappingProxyType({})
_MISSING = object()


class Relation:
    """
    Attributes:
        fore : {p: {q: w}}
        back : {q: {p: w}}
    Treat both as read-only; rows may be shared with other relations.
    """

    __slots__ = ("fore", "back")

    def __init__(self, fore: Optional[Index] = None, back: Optional[Index] = None):
        self.fore: Index = fore if fore is not None else {}
        self.back: Index = back if back is not None else _mirror(self.fore)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def from_edges(cls, triples: Iterable[Triple], plus: Combine, zero: Weight = None) -> "Relation":
        """Parallel (p, q) entries are merged with plus."""
        fore: Index = {}
        for p, q, w in triples:
            row = fore.setdefault(p, {})
            row[q] = plus(row[q], w) if q in row else w
        return cls(_ordered(_drop_zero(fore, zero)))

    # ------------------------------------------------------------------
    # Reads
    # ------------------------------------------------------------------
    def lookup(self, p: int, q: int, zero: Weight = None) -> Weight:
        return self.fore.get(p, _EMPTY_ROW).get(q, zero)

    def successors(self, p: int) -> Mapping[int, Weight]:
        row = self.fore.get(p)
        return MappingProxyType(row) if row else _EMPTY_ROW

    def predecessors(self, q: int) -> Mapping[int, Weight]:
        col = self.back.get(q)
        return MappingProxyType(col) if col else _EMPTY_ROW

    def edges(self) -> List[Triple]:
        """All entries, ascending by (p, q)."""
        return [(p, q, self.fore[p][q]) for p in sorted(self.fore) for q in sorted(self.fore[p])]

    def edges_via_back(self) -> List[Triple]:
        return sorted(((p, q, w) for q, col in self.back.items() for p, w in col.items()),
                      key=lambda t: (t[0], t[1]))

    def states(self) -> Set[int]:
        return set(self.fore) | set(self.back)

    def support_size(self) -> int:
        return sum(len(row) for row in self.fore.values())

    def is_empty(self) -> bool:
        return not self.fore

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.edges())

    def __len__(self) -> int:
        return self.support_size()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Relation) and self.fore == other.fore

    def __hash__(self) -> int:
        return hash(tuple((p, q) for p, q, _ in self.edges()))

    def __repr__(self) -> str:
        body = ", ".join(f"({p},{q}):{w!r}" for p, q, w in self.edges()[:8])
        more = "" if self.support_size() <= 8 else ", …"
        return f"Relation({{{body}{more}}})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------
def empty() -> Relation:
    return Relation({}, {})


def identity(states: Iterable[int], unit_weight: Weight) -> Relation:
    return Relation({q: {q: unit_weight} for q in sorted(set(states))})


# ---------------------------------------------------------------------------
# Addition
# ---------------------------------------------------------------------------
def plus_with(f: Combine, r: Relation, s: Relation, zero: Weight = None) -> Relation:
    """
    Entrywise union; where both define (p, q) the result is f(r(p,q), s(p,q)).
    Entries where f yields zero are removed from both indexes.
    """
    if s.is_empty():
        return r
    if r.is_empty():
        return s
    swap = r.support_size() < s.support_size()
    big, small = (s, r) if swap else (r, s)
    fore = _merge_index(f, big.fore, small.fore, zero, small_is_left=swap)
    back = _merge_index(f, big.back, small.back, zero, small_is_left=swap)
    return Relation(fore, back)


def _merge_index(f: Combine, big: Index, small: Index, zero: Weight, small_is_left: bool) -> Index:
    out = dict(big)
    for p, small_row in small.items():
        big_row = big.get(p)
        if big_row is None:
            out[p] = dict(small_row)
            continue
        row = dict(big_row)
        grown = False
        for q, w in small_row.items():
            old = row.get(q, _MISSING)
            if old is _MISSING:
                row[q] = w
                grown = True
                continue
            new = f(w, old) if small_is_left else f(old, w)
            if zero is not None and new == zero:
                del row[q]
            else:
                row[q] = new
        if row:
            out[p] = _sorted_map(row) if grown else row
        else:
            del out[p]
    return _sorted_map(out)


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------
def combine(g: Combine, col: Mapping[int, Weight], row: Mapping[int, Weight], zero: Weight = None) -> Relation:
    """Outer product for one middle node m: (p, q) ↦ g(col[p], row[q])."""
    fore: Index = {}
    for p, w1 in col.items():
        out_row = {}
        for q, w2 in row.items():
            w = g(w1, w2)
            if zero is None or w != zero:
                out_row[q] = w
        if out_row:
            fore[p] = out_row
    return Relation(fore)


def times_with(f: Combine, g: Combine, r: Relation, s: Relation, zero: Weight = None) -> Relation:
    """
    (r·s)(p, q) = Σ_f { g(r(p,m), s(m,q)) | m }.

    Middle nodes are the intersection of back(r) and fore(s), visited in
    ascending order; each contributes the outer product of its column in
    r and its row in s.
    """
    if r.is_empty() or s.is_empty():
        return empty()
    acc: Index = {}
    for m in sorted(r.back.keys() & s.fore.keys()):
        col = r.back[m]
        row = s.fore[m]
        for p, w1 in col.items():
            target = acc.get(p)
            if target is None:
                target = acc[p] = {}
            for q, w2 in row.items():
                w = g(w1, w2)
                if zero is not None and w == zero:
                    continue
                old = target.get(q, _MISSING)
                target[q] = w if old is _MISSING else f(old, w)
    return Relation(_ordered(_drop_zero(acc, zero)))


def naive_times(ops: SemiringOps, r: Relation, s: Relation) -> Relation:
    """Triple-loop reference product over all states of r and s."""
    nodes = sorted(r.states() | s.states())
    triples = []
    for p in nodes:
        for q in nodes:
            total = ops.zero
            for m in nodes:
                total = ops.plus(total, ops.times(r.lookup(p, m, ops.zero), s.lookup(m, q, ops.zero)))
            if not ops.is_zero(total):
                triples.append((p, q, total))
    return Relation.from_edges(triples, ops.plus, ops.zero)


# ---------------------------------------------------------------------------
# Difference
# ---------------------------------------------------------------------------
def diff(new: Relation, old: Relation, within: Optional[Relation] = None) -> Relation:
    """
    Entries (p, q, w) of new whose weight in old is not w (or absent).
    With `within`, only the support of that relation is examined; callers
    pass the delta they just added, outside of which new and old agree.
    """
    scope = within.fore if within is not None else new.fore
    fore: Index = {}
    for p, scope_row in scope.items():
        new_row = new.fore.get(p)
        if not new_row:
            continue
        old_row = old.fore.get(p, _EMPTY_ROW)
        changed = {}
        for q in scope_row:
            w = new_row.get(q, _MISSING)
            if w is _MISSING:
                continue
            if old_row.get(q, _MISSING) != w:
                changed[q] = w
        if changed:
            fore[p] = changed
    return Relation(fore)


# ---------------------------------------------------------------------------
# Consistency & algebra on relations
# ---------------------------------------------------------------------------
def is_mirrored(r: Relation) -> bool:
    return r.edges() == r.edges_via_back()


def is_ascending(r: Relation) -> bool:
    """Outer and inner keys of both indexes iterate in ascending order."""
    return all(
        _is_ascending(index) and all(_is_ascending(row) for row in index.values())
        for index in (r.fore, r.back)
    )


def relation_semiring(ops: SemiringOps, states: Iterable[int]) -> SemiringOps:
    """Relations over a fixed finite state set, lifted from ops."""
    state_list = sorted(set(states))
    return SemiringOps(
        name=f"relation[{ops.name}]",
        zero=empty(),
        one=identity(state_list, ops.one),
        plus=lambda a, b: plus_with(ops.plus, a, b, ops.zero),
        times=lambda a, b: times_with(ops.plus, ops.times, a, b, ops.zero),
        idempotent=ops.idempotent,
    )


def _mirror(fore: Index) -> Index:
    back: Index = {}
    for p in sorted(fore):
        for q, w in fore[p].items():
            back.setdefault(q, {})[p] = w
    return _sorted_map(back)


def _is_ascending(keys: Iterable[int]) -> bool:
    keys = list(keys)
    return all(a < b for a, b in zip(keys, keys[1:]))


def _sorted_map(d: Dict[int, Any]) -> Dict[int, Any]:
    return d if _is_ascending(d) else {k: d[k] for k in sorted(d)}


def _ordered(index: Index) -> Index:
    return {p: _sorted_map(index[p]) for p in sorted(index)}


def _drop_zero(fore: Index, zero: Weight) -> Index:
    if zero is None:
        return {p: row for p, row in fore.items() if row}
    out: Index = {}
    for p, row in fore.items():
        kept = {q: w for q, w in row.items() if w != zero}
        if kept:
            out[p] = kept
    return out
