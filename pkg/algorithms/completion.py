"""
completion.py — Matchbound Completion
======================================
Builds a matchbound certificate for a string rewriting system by
saturating an automaton over the extended alphabet
(plain letters, λ, →c, ←c) with three rules:

    TRANSITIVE  ε edges are closed under composition:
                add p -ε-> q wherever A(λλ)(p,q) ≠ 0 but A(λ)(p,q) = 0.
    INVERSE     →c collapses with a following c, ←c with a preceding c:
                add p -ε-> q wherever A(→c λ c)(p,q) or A(c λ ←c)(p,q) is ONE.
    REWRITE     for a rule l → r and a pair (p,q) with
                A(λlλ)(p,q) not <_0 A(λrλ)(p,q), take the minimal edge
                p' -c:h-> q' of the maximal l-path (l = s·c·t) and add a path
                p' → q' over fresh states labelled
                    ←s_k:h … ←s_1:h   r_1:h+1 … r_m:h+1   →t_j:h … →t_1:h

REWRITE only fires when TRANSITIVE and INVERSE are saturated, one
violation at a time, the first one by rule order and then by (p,q).
The run stops when no rule applies (Success) or when a limit is hit
(Limit).  Every product A(w) used above is a query word of one
IncrementalAutomaton, so each firing costs one incremental sweep.

Structure:
    flower_init(...)   →  CompletionState (one state with height-0 loops)
    complete(state)    →  generator of Steps, last one carries the outcome
    run(state)         →  drives complete() and returns the outcome
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Generator, Iterable, List, Optional, Sequence, Tuple, Union

from algebra.matchbox import (
    MATCHBOX,
    ONE,
    ZERO,
    One,
    Side,
    Val,
    lt_zero,
    mk_edge_val,
    mk_inv,
    weight_equivalent,
)
from algorithms.incremental import (
    IncrementalAutomaton,
    SweepStats,
    apply_delta,
    get_relation,
    init_automaton,
    product_mismatches,
    recompute_full,
)
from algorithms.srs import Rule
from algorithms.step import RuleKind, Step
from errors import EngineError, InputError
from graph.edge import Edge, EdgeBatch
from graph.letter import LAMBDA, Letter, Word, plain, post_inv, pre_inv
from graph.relation import diff

logger = logging.getLogger(__name__)

FLOWER_STATE = 1


# ---------------------------------------------------------------------------
# Limits
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Limits:
    max_steps:  int = 10_000      # REWRITE firings
    max_states: int = 100_000
    max_height: int = 64


LIMIT_PRESETS: Dict[str, Limits] = {
    "quick":    Limits(max_steps=1_000,   max_states=10_000,    max_height=16),
    "default":  Limits(),
    "thorough": Limits(max_steps=100_000, max_states=1_000_000, max_height=256),
}


# ---------------------------------------------------------------------------
# State & outcomes
# ---------------------------------------------------------------------------
@dataclass
class CompletionStats:
    steps:               int            = 0      # REWRITE firings
    rounds:              int            = 0      # ε-saturation sweeps
    firings:             Dict[str, int] = field(default_factory=lambda: {
        RuleKind.TRANSITIVE.value: 0,
        RuleKind.INVERSE.value:    0,
        RuleKind.REWRITE.value:    0,
    })
    states:              int            = 0
    edges:               int            = 0
    max_height:          int            = 0
    multiplications:     int            = 0
    delta_sizes:         Dict[int, int] = field(default_factory=dict)   # chain index → Σ|Δ| over all sweeps
    max_delta:           int            = 0      # largest |Δ| at one node in one sweep
    incremental_seconds: float          = 0.0
    full_seconds:        float          = 0.0    # only with check_full

    def as_dict(self) -> Dict[str, object]:
        return {
            "steps":               self.steps,
            "rounds":              self.rounds,
            "firings":             dict(self.firings),
            "states":              self.states,
            "edges":               self.edges,
            "max_height":          self.max_height,
            "multiplications":     self.multiplications,
            "delta_sizes":         dict(self.delta_sizes),
            "max_delta":           self.max_delta,
            "incremental_seconds": round(self.incremental_seconds, 6),
            "full_seconds":        round(self.full_seconds, 6),
        }


@dataclass
class CompletionState:
    """
    Attributes:
        automaton  : incremental automaton over the extended alphabet.
        alphabet   : plain symbols, sorted.
        rules      : the rewriting system, in input order.
        next_state : next fresh state id; ids are never reused.
        limits     : resource limits for run().
        stats      : running counters.
        check_full : cross-check every sweep against a full recomputation.
    """

    automaton:  IncrementalAutomaton
    alphabet:   Tuple[str, ...]
    rules:      Tuple[Rule, ...]
    next_state: int
    limits:     Limits          = field(default_factory=Limits)
    stats:      CompletionStats = field(default_factory=CompletionStats)
    check_full: bool            = False

    @property
    def state_ids(self) -> List[int]:
        return list(range(FLOWER_STATE, self.next_state))


@dataclass(frozen=True)
class Violation:
    rule:    Rule
    p:       int
    q:       int
    witness: Val

    def describe(self) -> str:
        t = self.witness.track
        return (
            f"rule {self.rule} incompatible at ({self.p},{self.q}): "
            f"minimal edge {t.source}->{t.target} height {self.witness.height} offset {t.offset}"
        )


@dataclass(frozen=True)
class Success:
    automaton: IncrementalAutomaton
    bound:     int
    stats:     CompletionStats


@dataclass(frozen=True)
class Limit:
    kind:  str          # "max_steps" | "max_states" | "max_height"
    stats: CompletionStats


Outcome = Union[Success, Limit]


class LimitReached(Exception):
    def __init__(self, kind: str):
        super().__init__(kind)
        self.kind = kind


# ---------------------------------------------------------------------------
# Query words
# ---------------------------------------------------------------------------
def lambda_word(symbols: Sequence[str]) -> Word:
    """λ w1 λ w2 … λ wn λ; the empty word gives (λ,)."""
    word: List[Letter] = [LAMBDA]
    for c in symbols:
        word.append(plain(c))
        word.append(LAMBDA)
    return tuple(word)


def pre_inverse_word(c: str) -> Word:
    return (pre_inv(c), LAMBDA, plain(c))


def post_inverse_word(c: str) -> Word:
    return (plain(c), LAMBDA, post_inv(c))


def query_words(alphabet: Iterable[str], rules: Iterable[Rule]) -> List[Word]:
    words: List[Word] = [(LAMBDA, LAMBDA)]
    for c in sorted(set(alphabet)):
        words.append(pre_inverse_word(c))
        words.append(post_inverse_word(c))
    for rule in rules:
        words.append(lambda_word(rule.lhs))
        words.append(lambda_word(rule.rhs))
    return list(dict.fromkeys(words))


# ---------------------------------------------------------------------------
# Initial automaton
# ---------------------------------------------------------------------------
def flower_init(
    alphabet: Iterable[str],
    rules: Iterable[Rule],
    limits: Optional[Limits] = None,
    check_full: bool = False,
) -> CompletionState:
    letters = tuple(sorted(set(alphabet)))
    if not letters:
        raise InputError("alphabet must be nonempty")
    rules = tuple(rules)
    for rule in rules:
        stray = set(rule.lhs + rule.rhs) - set(letters)
        if stray:
            raise InputError(f"rule {rule} uses symbols outside the alphabet: {sorted(stray)}")

    s = FLOWER_STATE
    edges: EdgeBatch = [Edge(s, plain(c), s, mk_edge_val(0, s, s)) for c in letters]
    edges.append(Edge(s, LAMBDA, s, ONE))

    automaton = init_automaton(query_words(letters, rules), edges, MATCHBOX)
    st = CompletionState(
        automaton=automaton,
        alphabet=letters,
        rules=rules,
        next_state=s + 1,
        limits=limits or Limits(),
        check_full=check_full,
    )
    _absorb_sweep(st.stats, automaton.last_sweep)
    _refresh_counts(st)
    logger.debug("flower over %s: chain of %d nodes", " ".join(letters), len(automaton.chain.nodes))
    return st


# ---------------------------------------------------------------------------
# Rule detection
# ---------------------------------------------------------------------------
def _eps_edges(pairs: Iterable[Tuple[int, int]]) -> EdgeBatch:
    return [Edge(p, LAMBDA, q, ONE) for p, q in sorted(set(pairs))]


def find_transitive(st: CompletionState) -> EdgeBatch:
    a = st.automaton
    closure = diff(get_relation(a, (LAMBDA, LAMBDA)), a.relation(LAMBDA))
    return _eps_edges((p, q) for p, q, _ in closure)


def find_inverse(st: CompletionState) -> EdgeBatch:
    a   = st.automaton
    eps = a.relation(LAMBDA)
    found = set()
    for c in st.alphabet:
        for word in (pre_inverse_word(c), post_inverse_word(c)):
            for p, q, w in get_relation(a, word):
                if isinstance(w, One) and eps.lookup(p, q, ZERO) is ZERO:
                    found.add((p, q))
    return _eps_edges(found)


def find_rewrite(st: CompletionState) -> Optional[Violation]:
    a = st.automaton
    for rule in st.rules:
        lhs = get_relation(a, lambda_word(rule.lhs))
        rhs = get_relation(a, lambda_word(rule.rhs))
        for p in sorted(lhs.fore):
            row = lhs.fore[p]
            for q in sorted(row):
                w = row[q]
                if lt_zero(w, rhs.lookup(p, q, ZERO)):
                    continue
                if not isinstance(w, Val):
                    raise EngineError(f"rule {rule}: witness {w!r} at ({p},{q}) carries no edge")
                return Violation(rule, p, q, w)
    return None


# ---------------------------------------------------------------------------
# REWRITE path
# ---------------------------------------------------------------------------
def rewrite_labels(rule: Rule, offset: int, height: int) -> List[Tuple[Letter, object]]:
    """(letter, weight-template) pairs of the path, weights without tracking."""
    s, t = rule.lhs[:offset], rule.lhs[offset + 1:]
    labels: List[Tuple[Letter, object]] = []
    labels += [(post_inv(x), mk_inv(Side.POST, height)) for x in reversed(s)]
    labels += [(plain(x), height + 1) for x in rule.rhs]
    labels += [(pre_inv(x), mk_inv(Side.PRE, height)) for x in reversed(t)]
    return labels


def add_rewrite_path(st: CompletionState, v: Violation) -> EdgeBatch:
    track  = v.witness.track
    h      = v.witness.height
    labels = rewrite_labels(v.rule, track.offset, h)

    if not labels:
        return [Edge(track.source, LAMBDA, track.target, ONE)]

    if v.rule.rhs and h + 1 > st.limits.max_height:
        raise LimitReached("max_height")
    fresh_count = len(labels) - 1
    if st.next_state - 1 + fresh_count > st.limits.max_states:
        raise LimitReached("max_states")

    fresh = list(range(st.next_state, st.next_state + fresh_count))
    st.next_state += fresh_count
    path = [track.source] + fresh + [track.target]

    batch: EdgeBatch = []
    for (letter, weight), src, tgt in zip(labels, path, path[1:]):
        if letter.is_plain:
            weight = mk_edge_val(weight, src, tgt)
        batch.append(Edge(src, letter, tgt, weight))
    batch.extend(Edge(x, LAMBDA, x, ONE) for x in fresh)

    if v.rule.rhs:
        st.stats.max_height = max(st.stats.max_height, h + 1)
    logger.debug("rewrite %s at (%d,%d): %d fresh states", v.rule, v.p, v.q, fresh_count)
    return batch


# ---------------------------------------------------------------------------
# Applying a batch
# ---------------------------------------------------------------------------
def _apply(st: CompletionState, batch: EdgeBatch) -> None:
    t0  = time.perf_counter()
    new = apply_delta(st.automaton, batch)
    st.stats.incremental_seconds += time.perf_counter() - t0
    _absorb_sweep(st.stats, new.last_sweep)

    if st.check_full:
        t0   = time.perf_counter()
        full = recompute_full(new)
        st.stats.full_seconds += time.perf_counter() - t0
        bad = product_mismatches(new, full, eq=weight_equivalent)
        if bad:
            words = ", ".join(" ".join(map(str, new.chain.nodes[i].word)) for i in bad[:5])
            raise EngineError(f"incremental products disagree with full recomputation: {words}")

    st.automaton = new
    _refresh_counts(st)


def _absorb_sweep(stats: CompletionStats, sweep: SweepStats) -> None:
    stats.multiplications += sweep.multiplications
    for i, size in sweep.delta_sizes.items():
        stats.delta_sizes[i] = stats.delta_sizes.get(i, 0) + size
        stats.max_delta = max(stats.max_delta, size)


def _refresh_counts(st: CompletionState) -> None:
    st.stats.states = st.next_state - 1
    st.stats.edges  = sum(r.support_size() for r in st.automaton.base.values())


def bound_of(automaton: IncrementalAutomaton) -> int:
    """Maximum height over plain-letter edges."""
    heights = [
        w.height
        for letter, rel in automaton.base.items() if letter.is_plain
        for _, _, w in rel
    ]
    return max(heights, default=0)


# ---------------------------------------------------------------------------
# Generator
# ---------------------------------------------------------------------------
def complete(st: CompletionState) -> Generator[Step, None, None]:
    step_no = 0

    def snapshot(rule: RuleKind, edges: EdgeBatch, explanation: str,
                 violation: Optional[Violation] = None, outcome: Optional[Outcome] = None) -> Step:
        nonlocal step_no
        step = Step(
            step_number=step_no,
            rule=rule,
            edges=tuple(edges),
            violation=violation,
            explanation=explanation,
            metrics={
                "steps":      st.stats.steps,
                "states":     st.stats.states,
                "edges":      st.stats.edges,
                "max_height": st.stats.max_height,
            },
            is_final=outcome is not None,
            outcome=outcome,
        )
        step_no += 1
        return step

    def stop(kind: str) -> Step:
        logger.warning("limit %s reached after %d rewrite steps", kind, st.stats.steps)
        return snapshot(RuleKind.LIMIT, [], f"Limit reached: {kind}", outcome=Limit(kind, st.stats))

    logger.info("completion: %d rules over %d letters", len(st.rules), len(st.alphabet))
    while True:
        # ε-saturation
        while True:
            transitive = find_transitive(st)
            taken      = {(e.source, e.target) for e in transitive}
            inverse    = [e for e in find_inverse(st) if (e.source, e.target) not in taken]
            if not transitive and not inverse:
                break
            _apply(st, transitive + inverse)
            st.stats.rounds += 1
            if transitive:
                st.stats.firings[RuleKind.TRANSITIVE.value] += len(transitive)
                yield snapshot(RuleKind.TRANSITIVE, transitive,
                               f"TRANSITIVE: {len(transitive)} ε edge(s) by composition")
            if inverse:
                st.stats.firings[RuleKind.INVERSE.value] += len(inverse)
                yield snapshot(RuleKind.INVERSE, inverse,
                               f"INVERSE: {len(inverse)} ε edge(s) by collapsing inverse letters")

        violation = find_rewrite(st)
        if violation is None:
            bound = bound_of(st.automaton)
            logger.info("certificate found: bound %d, %d states", bound, st.stats.states)
            yield snapshot(RuleKind.SUCCESS, [], f"Compatible: matchbound {bound}",
                           outcome=Success(st.automaton, bound, st.stats))
            return

        if st.stats.steps >= st.limits.max_steps:
            yield stop("max_steps")
            return
        try:
            batch = add_rewrite_path(st, violation)
        except LimitReached as exc:
            yield stop(exc.kind)
            return

        _apply(st, batch)
        st.stats.steps += 1
        st.stats.firings[RuleKind.REWRITE.value] += 1
        yield snapshot(RuleKind.REWRITE, batch, f"REWRITE: {violation.describe()}", violation=violation)


def run(st: CompletionState, on_step: Optional[Callable[[Step], None]] = None) -> Outcome:
    last: Optional[Step] = None
    for step in complete(st):
        if on_step is not None:
            on_step(step)
        last = step
    if last is None or last.outcome is None:
        raise EngineError("completion ended without an outcome")
    return last.outcome
