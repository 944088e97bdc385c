"""
codec.py — Certificate JSON Codec
==================================
Canonical persistence format:

    {
      "alphabet": ["a", "b"],
      "rules":    [{"lhs": ["a", "a"], "rhs": ["a", "b", "a"]}],
      "states":   [1, 2, ...],
      "edges":    [{"from": 1, "label": {"kind": "plain", "symbol": "a"},
                    "to": 2, "height": 1}, ...],
      "bound":    2
    }

label.kind is one of "plain", "lambda", "pre", "post"; ε edges have
symbol and height null.  Files are UTF-8 with a trailing newline.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from algorithms.srs import Rule
from certificate.model import CertEdge, Certificate
from errors import CertificateFormatError, SrsParseError
from graph.letter import LetterKind


# ---------------------------------------------------------------------------
# Encode
# ---------------------------------------------------------------------------
def to_dict(cert: Certificate) -> Dict[str, Any]:
    return {
        "alphabet": list(cert.alphabet),
        "rules":    [{"lhs": list(r.lhs), "rhs": list(r.rhs)} for r in cert.rules],
        "states":   list(cert.states),
        "edges": [
            {
                "from":   e.source,
                "label":  {"kind": e.kind.value, "symbol": e.symbol},
                "to":     e.target,
                "height": e.height,
            }
            for e in cert.edges
        ],
        "bound": cert.bound,
    }


def export_json(cert: Certificate) -> str:
    return json.dumps(to_dict(cert), indent=2, ensure_ascii=False) + "\n"


def write_json(cert: Certificate, path: Union[str, Path]) -> None:
    Path(path).write_text(export_json(cert), encoding="utf-8")


# ---------------------------------------------------------------------------
# Decode
# ---------------------------------------------------------------------------
def _require(obj: Dict[str, Any], key: str, kind: type, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise CertificateFormatError(f"{where}: missing field '{key}'")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise CertificateFormatError(f"{where}: field '{key}' must be {kind.__name__}")
    if not isinstance(value, kind):
        raise CertificateFormatError(f"{where}: field '{key}' must be {kind.__name__}")
    return value


def _strings(values: List[Any], where: str) -> tuple:
    if not all(isinstance(v, str) for v in values):
        raise CertificateFormatError(f"{where}: expected a list of strings")
    return tuple(values)


def _ints(values: List[Any], where: str) -> tuple:
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise CertificateFormatError(f"{where}: expected a list of integers")
    return tuple(values)


def _edge(raw: Any, index: int) -> CertEdge:
    where = f"edges[{index}]"
    if not isinstance(raw, dict):
        raise CertificateFormatError(f"{where}: expected an object")
    label = _require(raw, "label", dict, where)
    try:
        kind = LetterKind(_require(label, "kind", str, f"{where}.label"))
    except ValueError:
        raise CertificateFormatError(f"{where}.label: unknown kind {label.get('kind')!r}") from None
    symbol = label.get("symbol")
    if symbol is not None and not isinstance(symbol, str):
        raise CertificateFormatError(f"{where}.label: symbol must be a string or null")
    height = raw.get("height")
    if height is not None and (isinstance(height, bool) or not isinstance(height, int)):
        raise CertificateFormatError(f"{where}: height must be an integer or null")
    return CertEdge(
        source=_require(raw, "from", int, where),
        kind=kind,
        symbol=symbol,
        target=_require(raw, "to", int, where),
        height=height,
    )


def from_dict(data: Any) -> Certificate:
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate: expected a JSON object")
    rules = []
    for i, raw in enumerate(_require(data, "rules", list, "certificate")):
        where = f"rules[{i}]"
        lhs = _strings(_require(raw, "lhs", list, where), f"{where}.lhs")
        rhs = _strings(_require(raw, "rhs", list, where), f"{where}.rhs")
        try:
            rules.append(Rule(lhs, rhs))
        except SrsParseError as exc:
            raise CertificateFormatError(f"{where}: {exc}") from None
    return Certificate(
        alphabet=_strings(_require(data, "alphabet", list, "certificate"), "alphabet"),
        rules=tuple(rules),
        states=_ints(_require(data, "states", list, "certificate"), "states"),
        edges=tuple(_edge(raw, i) for i, raw in enumerate(_require(data, "edges", list, "certificate"))),
        bound=_require(data, "bound", int, "certificate"),
    )


def import_json(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(exc.msg, exc.lineno, exc.colno) from None
    return from_dict(data)


def read_json(path: Union[str, Path]) -> Certificate:
    return import_json(Path(path).read_text(encoding="utf-8"))
