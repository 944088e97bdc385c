import pytest
from hypothesis import given
from hypothesis import strategies as st

from algorithms.chain import build_chain, cost, evaluate_node, is_chain
from errors import InputError, QueryError
from graph.letter import plain

from conftest import plain_words


def word(text: str):
    return tuple(plain(c) for c in text)


def test_shared_prefix_is_built_once():
    chain = build_chain([word("bbb"), word("bbc")])
    assert cost(chain) == 3
    assert word("bb") in {node.word for node in chain.nodes}
    assert is_chain(chain, [word("bbb"), word("bbc")])


def test_single_letter_words_cost_nothing():
    chain = build_chain([word("a"), word("b")])
    assert chain.cost == 0
    assert chain.node_for(word("a")) != chain.node_for(word("b"))


def test_duplicates_are_canonicalised():
    assert build_chain([word("ab"), word("ab")]) == build_chain([word("ab")])


def test_run_of_equal_letters_counts_non_overlapping_pairs():
    chain = build_chain([word("aaaa")])
    assert chain.cost == 2
    assert [node.word for node in chain.nodes if not node.is_unit] == [word("aa"), word("aaaa")]


def test_construction_is_deterministic():
    words = [word("abab"), word("bab"), word("abba")]
    assert build_chain(words) == build_chain(list(reversed(words)))


def test_empty_word_rejected():
    with pytest.raises(InputError):
        build_chain([()])


def test_unregistered_query_raises():
    chain = build_chain([word("abc")])
    with pytest.raises(QueryError):
        chain.node_for(word("ab"))


def test_describe_nodes():
    chain = build_chain([word("ab")])
    assert [n.describe() for n in chain.nodes] == ["Unit a", "Unit b", "Times(0, 1)"]


@given(st.lists(plain_words("abc", 6), min_size=1, max_size=6))
def test_random_word_sets_yield_valid_chains(texts):
    words = [tuple(plain(c) for c in t) for t in texts]
    chain = build_chain(words)
    assert is_chain(chain, words)
    for w in words:
        assert evaluate_node(chain, chain.node_for(w)) == w
    assert chain.cost <= sum(len(w) - 1 for w in set(words))
