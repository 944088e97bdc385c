"""
srs.py — String Rewriting Systems
==================================
Rules and the plain-text input format.

Format (one rule per line):
    a a -> a b a        # comment
    a b ->              empty right-hand side
Symbols are whitespace-separated tokens; `#` starts a comment; blank
lines are ignored.  The alphabet is every token used by any rule.
"""

from dataclasses import dataclass
from typing import List, Tuple

from errors import SrsParseError

ARROW = "->"


@dataclass(frozen=True)
class Rule:
    lhs: Tuple[str, ...]
    rhs: Tuple[str, ...]

    def __post_init__(self):
        if not self.lhs:
            raise SrsParseError("left-hand side of a rule must be nonempty")

    def __str__(self) -> str:
        return f"{' '.join(self.lhs)} {ARROW} {' '.join(self.rhs)}".rstrip()


@dataclass(frozen=True)
class SrsInput:
    alphabet: Tuple[str, ...]
    rules:    Tuple[Rule, ...]


def alphabet_of(rules: List[Rule]) -> Tuple[str, ...]:
    return tuple(sorted({c for rule in rules for c in rule.lhs + rule.rhs}))


def parse_srs(text: str) -> SrsInput:
    rules: List[Rule] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ARROW not in line:
            raise SrsParseError(f"missing '{ARROW}' in {raw.strip()!r}", number)
        left, right = line.split(ARROW, 1)
        lhs, rhs = tuple(left.split()), tuple(right.split())
        if ARROW in right:
            raise SrsParseError(f"more than one '{ARROW}' in {raw.strip()!r}", number)
        if not lhs:
            raise SrsParseError("empty left-hand side", number)
        rules.append(Rule(lhs, rhs))
    if not rules:
        raise SrsParseError("no rules found")
    return SrsInput(alphabet_of(rules), tuple(rules))


def render_srs(srs: SrsInput) -> str:
    return "".join(f"{rule}\n" for rule in srs.rules)
