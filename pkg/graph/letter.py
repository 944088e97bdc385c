"""
letter.py — Extended Alphabet
==============================
Edge labels of the completion automaton.  Besides the plain letters of
the rewriting system there is the ε letter λ and, per plain letter c,
two formal inverses:

    PRE_INV  →c   sits before c;   →c λ c collapses to ε
    POST_INV ←c   sits after c;    c λ ←c collapses to ε

A word is a tuple of letters.  Letters sort by (kind, symbol) so sets of
words can be put into a canonical order.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple


class LetterKind(Enum):
    PLAIN    = "plain"
    LAMBDA   = "lambda"
    PRE_INV  = "pre"
    POST_INV = "post"


_KIND_ORDER = {
    LetterKind.PLAIN:    0,
    LetterKind.LAMBDA:   1,
    LetterKind.PRE_INV:  2,
    LetterKind.POST_INV: 3,
}


@dataclass(frozen=True)
class Letter:
    kind:   LetterKind
    symbol: Optional[str] = None

    @property
    def is_plain(self) -> bool:
        return self.kind is LetterKind.PLAIN

    def sort_key(self) -> Tuple[int, str]:
        return (_KIND_ORDER[self.kind], self.symbol or "")

    def __str__(self) -> str:
        if self.kind is LetterKind.PLAIN:
            return str(self.symbol)
        if self.kind is LetterKind.LAMBDA:
            return "λ"
        if self.kind is LetterKind.PRE_INV:
            return f"→{self.symbol}"
        return f"←{self.symbol}"


Word = Tuple[Letter, ...]

LAMBDA = Letter(LetterKind.LAMBDA)


def plain(symbol: str) -> Letter:
    return Letter(LetterKind.PLAIN, symbol)


def pre_inv(symbol: str) -> Letter:
    return Letter(LetterKind.PRE_INV, symbol)


def post_inv(symbol: str) -> Letter:
    return Letter(LetterKind.POST_INV, symbol)


def word_key(word: Iterable[Letter]) -> Tuple[Tuple[int, str], ...]:
    return tuple(letter.sort_key() for letter in word)


def render_word(word: Iterable[Letter]) -> str:
    return " ".join(str(letter) for letter in word) or "ε"
