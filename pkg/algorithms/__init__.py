"""
algorithms/__init__.py — Chains, Incremental Automata, Completion
==================================================================
    from algorithms import build_chain, init_automaton, apply_delta
    from algorithms import parse_srs, flower_init, run

Layers, bottom-up:
    chain        RePair multiplication chains over query words
    incremental  per-chain-node relations kept up to date under edge batches
    srs          rewriting rules and their text format
    completion   matchbound completion as a Step generator
"""

from algorithms.chain import Chain, ChainNode, build_chain, cost, evaluate_node, is_chain
from algorithms.incremental import (
    IncrementalAutomaton, SweepStats,
    apply_delta, evaluate_word, get_relation, init_automaton, product_mismatches, query, recompute_full,
)
from algorithms.srs import Rule, SrsInput, alphabet_of, parse_srs, render_srs
from algorithms.step import RuleKind, Step
from algorithms.completion import (
    LIMIT_PRESETS, CompletionState, CompletionStats, Limit, Limits, Outcome, Success, Violation,
    add_rewrite_path, bound_of, complete, find_inverse, find_rewrite, find_transitive,
    flower_init, lambda_word, query_words, run,
)

__all__ = [
    "Chain", "ChainNode", "build_chain", "cost", "evaluate_node", "is_chain",
    "IncrementalAutomaton", "SweepStats",
    "apply_delta", "evaluate_word", "get_relation", "init_automaton", "product_mismatches", "query",
    "recompute_full",
    "Rule", "SrsInput", "alphabet_of", "parse_srs", "render_srs",
    "RuleKind", "Step",
    "LIMIT_PRESETS", "CompletionState", "CompletionStats", "Limit", "Limits", "Outcome",
    "Success", "Violation",
    "add_rewrite_path", "bound_of", "complete", "find_inverse", "find_rewrite", "find_transitive",
    "flower_init", "lambda_word", "query_words", "run",
]
