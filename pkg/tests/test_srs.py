import pytest

from algorithms.srs import Rule, parse_srs, render_srs
from errors import InputError, SrsParseError


def test_parse_example():
    srs = parse_srs("a a -> a b a\n")
    assert srs.rules == (Rule(("a", "a"), ("a", "b", "a")),)
    assert srs.alphabet == ("a", "b")


def test_empty_rhs():
    assert parse_srs("a b ->").rules == (Rule(("a", "b"), ()),)


def test_comments_and_blank_lines():
    srs = parse_srs("# header\n\n  a b -> b a   # swap\n\nb -> c\n")
    assert [str(r) for r in srs.rules] == ["a b -> b a", "b -> c"]
    assert srs.alphabet == ("a", "b", "c")


def test_multi_character_tokens():
    srs = parse_srs("x1 x1 -> x1 x2 x1")
    assert srs.alphabet == ("x1", "x2")


@pytest.mark.parametrize("text, line", [
    ("-> a", 1),
    ("a -> b\nb c\n", 2),
    ("a -> b -> c", 1),
])
def test_errors_name_the_line(text, line):
    with pytest.raises(SrsParseError) as info:
        parse_srs(text)
    assert info.value.line_number == line
    assert f"line {line}" in str(info.value)


@pytest.mark.parametrize("text", ["", "\n\n", "# only a comment\n"])
def test_empty_input_rejected(text):
    with pytest.raises(SrsParseError):
        parse_srs(text)


def test_parse_errors_are_input_errors():
    assert issubclass(SrsParseError, InputError)
    assert issubclass(SrsParseError, ValueError)


def test_render_round_trip():
    text = "a a -> a b a\na b ->\n"
    assert render_srs(parse_srs(text)) == text
