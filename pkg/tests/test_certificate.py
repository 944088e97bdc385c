import json
from dataclasses import replace

import pytest

from algorithms.srs import Rule
from certificate import CertEdge, Certificate, export_json, import_json, read_json, verify, write_json
from errors import CertificateFormatError
from graph.letter import LetterKind
from ui import render_certificate, render_dot

NEG = float("-inf")


# ---------------------------------------------------------------------------
# A second, row-vector evaluation of A_ε(w)(p, ·) used as the oracle
# ---------------------------------------------------------------------------
def _step(cert, current, kind, symbol):
    out = {}
    for e in cert.edges:
        if e.kind is not kind or (symbol is not None and e.symbol != symbol):
            continue
        if e.source not in current:
            continue
        h = float("inf") if kind is LetterKind.LAMBDA else e.height
        out[e.target] = max(out.get(e.target, NEG), min(current[e.source], h))
    return out


def _row(cert, p, word):
    current = _step(cert, {p: float("inf")}, LetterKind.LAMBDA, None)
    for c in word:
        current = _step(cert, current, LetterKind.PLAIN, c)
        current = _step(cert, current, LetterKind.LAMBDA, None)
    return current


def oracle_compatible(cert) -> bool:
    for rule in cert.rules:
        for p in cert.states:
            left, right = _row(cert, p, rule.lhs), _row(cert, p, rule.rhs)
            for q, x in left.items():
                if not x < right.get(q, NEG):
                    return False
    return True


def find_edge(cert, source, label, target):
    return next(e for e in cert.edges if (e.source, e.label(), e.target) == (source, label, target))


# ---------------------------------------------------------------------------
# Checker
# ---------------------------------------------------------------------------
def test_example_certificate_verifies(example_cert):
    verdict = verify(example_cert)
    assert verdict.ok
    assert oracle_compatible(example_cert)


def test_deleting_derived_epsilon_edge_is_caught(example_cert):
    mutated = example_cert.without(find_edge(example_cert, 4, "ε", 2))
    verdict = verify(mutated)
    assert not verdict.ok
    assert verdict.by_check("compatible")


def test_lowering_a_top_edge_is_caught(example_cert):
    edge = find_edge(example_cert, 3, "a:2", 5)
    verdict = verify(example_cert.replacing(edge, replace(edge, height=1)))
    assert not verdict.ok
    assert any("(3," in f.message for f in verdict.by_check("compatible"))


def test_single_mutation_sweep(example_cert):
    mutants = [example_cert.without(e) for e in example_cert.epsilon_edges(reflexive=False)]
    mutants += [
        example_cert.replacing(e, replace(e, height=e.height - 1))
        for e in example_cert.plain_edges() if e.height > 0
    ]
    assert len(mutants) == 3 + 6
    for mutant in mutants:
        verdict = verify(mutant)
        assert bool(verdict.by_check("compatible")) == (not oracle_compatible(mutant))
        if verdict.ok:
            assert oracle_compatible(mutant)


def test_malformed_entries_are_reported_separately(example_cert):
    bad = Certificate(
        example_cert.alphabet, example_cert.rules, example_cert.states,
        example_cert.edges + (
            CertEdge(1, LetterKind.PLAIN, "a", 99, 0),
            CertEdge(2, LetterKind.PLAIN, "b", 3, -1),
        ),
        example_cert.bound,
    )
    verdict = verify(bad)
    messages = [f.message for f in verdict.by_check("malformed")]
    assert len(messages) == 2
    assert any("unknown state 99" in m for m in messages)
    assert any("negative height" in m for m in messages)


def test_missing_flower_and_reflexivity():
    cert = Certificate(
        alphabet=("a",),
        rules=(Rule(("a",), ("a", "a")),),
        states=(1, 2),
        edges=(CertEdge(1, LetterKind.PLAIN, "a", 2, 0), CertEdge(1, LetterKind.LAMBDA, None, 1, None)),
        bound=0,
    )
    verdict = verify(cert)
    assert verdict.by_check("flower")
    assert [f.message for f in verdict.by_check("epsilon")] == ["missing reflexive ε edge at 2"]


def test_non_transitive_epsilon_relation():
    eps = lambda p, q: CertEdge(p, LetterKind.LAMBDA, None, q, None)
    cert = Certificate(
        alphabet=("a",),
        rules=(),
        states=(1, 2, 3),
        edges=(CertEdge(1, LetterKind.PLAIN, "a", 1, 0), eps(1, 1), eps(2, 2), eps(3, 3), eps(1, 2), eps(2, 3)),
        bound=0,
    )
    assert [f.message for f in verify(cert).by_check("epsilon")] == ["ε relation not transitive: 1->3 missing"]


# ---------------------------------------------------------------------------
# JSON codec
# ---------------------------------------------------------------------------
def test_json_round_trip(example_cert):
    text = export_json(example_cert)
    assert text.endswith("\n")
    assert import_json(text) == example_cert


def test_json_schema(example_cert):
    data = json.loads(export_json(example_cert))
    assert set(data) == {"alphabet", "rules", "states", "edges", "bound"}
    assert data["rules"] == [{"lhs": ["a", "a"], "rhs": ["a", "b", "a"]}]
    assert {"from": 1, "label": {"kind": "plain", "symbol": "a"}, "to": 2, "height": 1} in data["edges"]
    assert {"from": 4, "label": {"kind": "lambda", "symbol": None}, "to": 2, "height": None} in data["edges"]
    assert {"from": 4, "label": {"kind": "pre", "symbol": "a"}, "to": 1, "height": 0} in data["edges"]


def test_empty_edge_certificate():
    cert = Certificate(("a",), (), (1,), (), 0)
    data = json.loads(export_json(cert))
    assert data["edges"] == []
    assert import_json(export_json(cert)) == cert


def test_file_round_trip(tmp_path, example_cert):
    path = tmp_path / "cert.json"
    write_json(example_cert, path)
    assert read_json(path) == example_cert


def test_syntax_error_carries_location():
    with pytest.raises(CertificateFormatError) as info:
        import_json('{\n  "alphabet": ["a",]\n}')
    assert info.value.line == 2
    assert info.value.column is not None


@pytest.mark.parametrize("text, fragment", [
    ("[]", "expected a JSON object"),
    ('{"alphabet": ["a"], "rules": [], "states": [1], "bound": 0}', "missing field 'edges'"),
    ('{"alphabet": ["a"], "rules": [], "states": [1], "edges": [{"from": 1, "to": 1, '
     '"label": {"kind": "weird"}}], "bound": 0}', "unknown kind"),
    ('{"alphabet": ["a"], "rules": [{"lhs": [], "rhs": []}], "states": [1], "edges": [], "bound": 0}',
     "rules[0]"),
    ('{"alphabet": ["a"], "rules": [], "states": ["x"], "edges": [], "bound": 0}', "states"),
])
def test_schema_errors(text, fragment):
    with pytest.raises(CertificateFormatError) as info:
        import_json(text)
    assert fragment in str(info.value)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------
def test_dot_export(example_cert):
    dot = render_dot(example_cert)
    assert dot.startswith("digraph certificate {")
    assert '1 -> 2 [label="a:1"]' in dot
    assert '4 -> 1 [label="→a:0"' in dot
    assert "4 -> 2 [style=dashed" in dot
    assert "1 -> 1 [style=dashed" not in dot
    assert dot.endswith("}\n")


def test_text_rendering(example_cert):
    text = render_certificate(example_cert)
    assert "bound: 2" in text
    assert "states: 7" in text
    assert "  7 →a:1 4" in text
    assert "  7 ε 2" in text
