"""JSON encodings used by the command line and by file inputs.

Rationals are "p/q" strings in lowest terms ("0/1", "1/1" included).
Words inside JSON object keys are compact strings: one character per
symbol, or comma-separated labels when some label is longer than one
character.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .coding import Interval
from .core import (
    Alphabet,
    BiSequenceDescriptor,
    CantorSpaceError,
    Cylinder,
    LevelSystem,
    SequenceDescriptor,
    SymbolError,
    Word,
)
from .dynamics import OpTable
from .integration import StepFunction
from .measure import FinitePointMeasure, ProductMeasure, TreeMeasure, finite_to_tree


class FormatError(CantorSpaceError):
    pass


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(v: Any) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise FormatError(f"expected an exact rational, got {v!r}")
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise FormatError(f"not a rational: {v!r}") from e


def char_symbol(c: str):
    """Label for a single character when no alphabet is known: digits become ints."""
    return int(c) if c.isdigit() else c


def parse_word(s: str, system: LevelSystem | None = None, start: int = 1) -> Word:
    """Compact word string to a tuple of symbols.

    With a level system each piece is matched against the labels of its
    level's alphabet by ``str``; without one, ``char_symbol`` decides.
    """
    pieces = [p for p in s.split(",")] if "," in s else list(s)
    if s == "":
        pieces = []
    if system is None:
        return tuple(char_symbol(p) for p in pieces)
    out = []
    for i, p in enumerate(pieces):
        alphabet = system.alphabet(start + i)
        match = [a for a in alphabet if str(a) == p]
        if not match:
            raise SymbolError(f"{p!r} is not a label at level {start + i}")
        out.append(match[0])
    return tuple(out)


def format_word(w: Word) -> str:
    labels = [str(s) for s in w]
    if any(len(x) != 1 for x in labels):
        return ",".join(labels)
    return "".join(labels)


def descriptor_to_json(x: SequenceDescriptor) -> dict:
    n = x.normalized()
    return {"pre": list(n.pre), "per": list(n.per)}


def descriptor_from_json(obj: Any) -> SequenceDescriptor:
    try:
        return SequenceDescriptor(tuple(obj["pre"]), tuple(obj["per"]))
    except (KeyError, TypeError) as e:
        raise FormatError(f"sequence descriptor needs 'pre' and 'per' lists: {obj!r}") from e


def bisequence_to_json(x: BiSequenceDescriptor) -> dict:
    return {"left": list(x.left), "center": list(x.center), "right": list(x.right), "origin": x.origin}


def bisequence_from_json(obj: Any) -> BiSequenceDescriptor:
    try:
        return BiSequenceDescriptor(
            tuple(obj["left"]), tuple(obj.get("center", ())), tuple(obj["right"]), int(obj.get("origin", 0))
        )
    except (KeyError, TypeError, AttributeError) as e:
        raise FormatError(f"two-sided descriptor needs 'left' and 'right' lists: {obj!r}") from e


def point_from_json(obj: Any) -> SequenceDescriptor | BiSequenceDescriptor:
    if isinstance(obj, dict) and "left" in obj:
        return bisequence_from_json(obj)
    return descriptor_from_json(obj)


def cylinder_to_json(c: Cylinder) -> dict:
    return {"prefix": list(c.prefix)}


def cylinder_from_json(obj: Any) -> Cylinder:
    try:
        return Cylinder(tuple(obj["prefix"]))
    except (KeyError, TypeError) as e:
        raise FormatError(f"cylinder needs a 'prefix' list: {obj!r}") from e


def interval_to_json(iv: Interval) -> dict:
    return {"lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}


def optable_to_json(t: OpTable) -> dict:
    E = t.alphabet.symbols
    out: dict = {"symbols": list(E), "table": [[t(a, b) for b in E] for a in E]}
    if t.identity is not None:
        out["identity"] = t.identity
    if t.inverse is not None:
        out["inverse"] = {str(a): b for a, b in t.inverse.items()}
    return out


def optable_from_json(obj: Any) -> OpTable:
    try:
        symbols = tuple(obj["symbols"])
        rows = obj["table"]
    except (KeyError, TypeError) as e:
        raise FormatError("operation table needs 'symbols' and 'table'") from e
    if len(rows) != len(symbols) or any(len(r) != len(symbols) for r in rows):
        raise FormatError("operation table must be square over its symbols")
    by_label = {str(s): s for s in symbols}
    inverse = obj.get("inverse")
    if inverse is not None:
        inverse = {by_label.get(k, k): v for k, v in inverse.items()}
    return OpTable.from_rows(symbols, rows, obj.get("identity"), inverse)


def _symbol_lists(obj: dict, n: int) -> list[list] | None:
    symbols = obj.get("symbols")
    if symbols is None:
        return None
    if symbols and all(isinstance(s, list) for s in symbols):
        return symbols
    return [symbols] * n


def measure_from_json(obj: Any) -> ProductMeasure | TreeMeasure:
    """Read ``{"type": "product", "weights": [[...], ...]}`` or ``{"type": "tree", "mass": {...}}``.

    Product weight lists repeat cyclically over the levels; symbols default to
    0..k-1 unless a ``"symbols"`` list is given. Tree words are compact keys.
    """
    if not isinstance(obj, dict):
        raise FormatError("measure must be a JSON object")
    kind = obj.get("type")
    if kind == "product":
        weights = obj.get("weights")
        if not weights or not all(isinstance(w, list) for w in weights):
            raise FormatError("product measure needs a non-empty list of weight lists")
        symbols = _symbol_lists(obj, len(weights)) or [list(range(len(w))) for w in weights]
        if any(len(s) != len(w) for s, w in zip(symbols, weights)):
            raise FormatError("each weight list must match its symbol list")
        levels = [
            {s: parse_rational(v) for s, v in zip(syms, w)} for syms, w in zip(symbols, weights)
        ]
        return ProductMeasure(cycle=tuple(levels), probability=bool(obj.get("probability", False)))
    if kind == "tree":
        mass = obj.get("mass")
        if not isinstance(mass, dict):
            raise FormatError("tree measure needs a 'mass' object")
        words = {k: parse_word(k) for k in mass}
        depth = max(len(w) for w in words.values())
        if "symbols" in obj:
            alphabet = Alphabet(tuple(obj["symbols"]))
            system = LevelSystem.homogeneous(alphabet)
            words = {k: parse_word(k, system) for k in mass}
        else:
            seen = sorted({s for w in words.values() for s in w}, key=str)
            system = LevelSystem.homogeneous(Alphabet(tuple(seen) or (0,)))
        return TreeMeasure(system, depth, {words[k]: parse_rational(v) for k, v in mass.items()},
                           probability=bool(obj.get("probability", False)))
    raise FormatError(f"unknown measure type {kind!r}")


def measure_to_json(mu: ProductMeasure | TreeMeasure | FinitePointMeasure) -> dict:
    """Inverse of :func:`measure_from_json`; finite point measures become trees."""
    if isinstance(mu, FinitePointMeasure):
        mu = finite_to_tree(mu)
    if isinstance(mu, ProductMeasure):
        if mu.head:
            raise FormatError("the JSON product format has no room for head levels")
        levels = mu.cycle
        return {
            "type": "product",
            "symbols": [list(w) for w in levels],
            "weights": [[format_rational(v) for v in w.values()] for w in levels],
        }
    if not mu.system.is_homogeneous:
        raise FormatError("the JSON tree format needs a single alphabet")
    return {
        "type": "tree",
        "symbols": list(mu.system.alphabet(1).symbols),
        "mass": {format_word(w): format_rational(v) for w, v in mu.masses.items()},
    }


def step_from_json(obj: Any, system: LevelSystem) -> StepFunction:
    try:
        depth = int(obj["depth"])
        values = obj["values"]
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError("step function needs 'depth' and 'values'") from e
    return StepFunction(system, depth, {parse_word(k, system): parse_rational(v) for k, v in values.items()})


def step_to_json(f: StepFunction) -> dict:
    return {"depth": f.depth, "values": {format_word(w): format_rational(v) for w, v in f.values.items()}}
