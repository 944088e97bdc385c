"""
Shared fixtures and hypothesis strategies.
"""

from pathlib import Path
from typing import List, Tuple

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from algebra import BOOLEAN, FUZZY, NATURAL, NEG_INF, POS_INF
from algorithms.srs import parse_srs
from certificate import Certificate
from engine import Recorder
from graph import Relation

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

DATA_DIR = Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# Files & runs
# ---------------------------------------------------------------------------
@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="module")
def example_recorder() -> Recorder:
    rec = Recorder()
    rec.start(parse_srs((DATA_DIR / "aa-aba.srs").read_text(encoding="utf-8")))
    rec.run_to_completion()
    return rec


@pytest.fixture(scope="module")
def example_cert(example_recorder) -> Certificate:
    cert = example_recorder.certificate()
    assert cert is not None
    return cert


# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------
WEIGHTS = {
    "boolean": (BOOLEAN, st.just(True)),
    "natural": (NATURAL, st.integers(min_value=1, max_value=5)),
    "fuzzy":   (FUZZY,   st.one_of(st.integers(min_value=-3, max_value=8), st.just(POS_INF))),
}


def triples(weights: st.SearchStrategy, max_state: int = 15, max_size: int = 40) -> st.SearchStrategy:
    state = st.integers(min_value=1, max_value=max_state)
    return st.lists(st.tuples(state, state, weights), max_size=max_size)


@st.composite
def relations(draw, ops, weights: st.SearchStrategy, max_state: int = 15) -> Relation:
    return Relation.from_edges(draw(triples(weights, max_state)), ops.plus, ops.zero)


def fuzzy_values() -> st.SearchStrategy:
    return st.one_of(st.just(NEG_INF), st.just(POS_INF), st.integers(min_value=-10, max_value=10))


def plain_words(alphabet: str = "ab", max_len: int = 5) -> st.SearchStrategy:
    return st.lists(st.sampled_from(list(alphabet)), min_size=1, max_size=max_len).map(tuple)


def edge_list(cert: Certificate) -> List[Tuple[int, str, int]]:
    return [(e.source, e.label(), e.target) for e in cert.edges]
