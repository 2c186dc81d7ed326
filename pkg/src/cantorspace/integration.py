"""Locally constant functions and their integrals against cylinder measures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .core import (
    DEFAULT_BUDGET,
    CantorSpaceError,
    Cylinder,
    LevelSystem,
    SequenceDescriptor,
    Word,
    as_cylinder,
)
from .measure import DepthError, Measure, MeasureError, TreeMeasure, iter_masses
from .metric import DEFAULT_PARAMS, UltrametricParams


class FunctionalContractError(CantorSpaceError):
    """A black-box functional failed a linearity or positivity probe."""


@dataclass(frozen=True)
class StepFunction:
    """Function on the sequence space that only looks at the first ``depth`` terms."""

    system: LevelSystem
    depth: int
    values: Mapping[Word, Fraction]

    def __post_init__(self):
        given = {tuple(w): Fraction(v) for w, v in self.values.items()}
        values = {}
        for w in self.system.words(self.depth):
            if w not in given:
                raise CantorSpaceError(f"step function undefined on word {w!r}")
            values[w] = given.pop(w)
        if given:
            raise CantorSpaceError(f"values given for words outside depth {self.depth}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_callable(cls, system: LevelSystem, depth: int, fn: Callable[[Word], Fraction]) -> StepFunction:
        return cls(system, depth, {w: fn(w) for w in system.words(depth)})

    @classmethod
    def constant(cls, system: LevelSystem, value, depth: int = 0) -> StepFunction:
        return cls.from_callable(system, depth, lambda w: Fraction(value))

    def __call__(self, x: SequenceDescriptor | Word) -> Fraction:
        if isinstance(x, SequenceDescriptor):
            return self.values[x.prefix(self.depth)]
        return self.values[tuple(x)[: self.depth]]

    def scaled(self, a) -> StepFunction:
        a = Fraction(a)
        return StepFunction(self.system, self.depth, {w: a * v for w, v in self.values.items()})

    def __add__(self, other: StepFunction) -> StepFunction:
        d = max(self.depth, other.depth)
        f, g = refine_step(self, d), refine_step(other, d)
        return StepFunction(self.system, d, {w: f.values[w] + g.values[w] for w in f.values})


def refine_step(f: StepFunction, d: int) -> StepFunction:
    if d < f.depth:
        raise CantorSpaceError(f"cannot refine depth-{f.depth} step function to depth {d}")
    if d == f.depth:
        return f
    m = f.depth
    return StepFunction(f.system, d, {w: f.values[w[:m]] for w in f.system.words(d)})


def indicator(c: Cylinder | Word, m: int, system: LevelSystem) -> StepFunction:
    """1 on the cylinder, 0 elsewhere, written at depth m."""
    prefix = as_cylinder(c).prefix
    k = len(prefix)
    if m < k:
        raise CantorSpaceError(f"indicator of a depth-{k} cylinder needs depth >= {k}, got {m}")
    return StepFunction.from_callable(system, m, lambda w: Fraction(int(w[:k] == prefix)))


def integrate_step(f: StepFunction, mu: Measure, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Finite sum of value * cylinder mass over the depth-m cylinders."""
    if mu.max_depth is not None and mu.max_depth < f.depth:
        raise DepthError(f"measure defined to depth {mu.max_depth}, function needs {f.depth}")
    return sum((f.values[w] * v for w, v in iter_masses(mu, f.depth, budget)), Fraction(0))


def measure_from_functional(
    functional: Callable[[StepFunction], Fraction], D: int, system: LevelSystem
) -> TreeMeasure:
    """Recover cylinder masses by feeding indicators to a functional.

    The functional is probed rather than trusted: every indicator must get a
    nonnegative value, doubling an indicator must double its value, and each
    indicator must equal the sum of its children's indicators.
    """
    masses: dict[Word, Fraction] = {}
    for d in range(D + 1):
        for w in system.words(d):
            ind = indicator(w, d, system)
            v = Fraction(functional(ind))
            if v < 0:
                raise FunctionalContractError(f"negative value {v} on the indicator of {w!r}")
            if Fraction(functional(ind.scaled(2))) != 2 * v:
                raise FunctionalContractError(f"functional is not homogeneous on the indicator of {w!r}")
            masses[w] = v
    for w, v in masses.items():
        if len(w) < D:
            if Fraction(functional(refine_step(indicator(w, len(w), system), len(w) + 1))) != v:
                raise FunctionalContractError(f"functional changes under refinement at {w!r}")
            kids = sum((masses[w + (s,)] for s in system.alphabet(len(w) + 1)), Fraction(0))
            if kids != v:
                raise FunctionalContractError(f"functional is not additive over the children of {w!r}")
    return TreeMeasure(system, D, masses)


class ModulusFunction:
    """Modulus of continuity: bound(r) for radius r in (0, 1], nonincreasing as r shrinks.

    Monotonicity cannot be checked everywhere, so it is checked on every pair
    of radii actually queried.
    """

    def __init__(self, fn: Callable[[Fraction], Fraction]):
        self._fn = fn
        self._seen: dict[Fraction, Fraction] = {}

    def __call__(self, r) -> Fraction:
        r = Fraction(r)
        if not 0 < r <= 1:
            raise CantorSpaceError(f"modulus radius must lie in (0, 1], got {r}")
        if r in self._seen:
            return self._seen[r]
        v = Fraction(self._fn(r))
        if v < 0:
            raise CantorSpaceError(f"modulus bound {v} is negative")
        for r2, v2 in self._seen.items():
            if (r2 < r and v2 > v) or (r2 > r and v2 < v):
                raise CantorSpaceError(f"modulus grows as the radius shrinks from {max(r, r2)} to {min(r, r2)}")
        self._seen[r] = v
        return v


def zero_extension(word: Word, system: LevelSystem) -> SequenceDescriptor:
    """The point of the cylinder ``word`` whose tail repeats the first symbol of the alphabet.

    Assumes the tail's alphabets share that first symbol, which holds for
    homogeneous systems.
    """
    tail = system.alphabet(len(word) + 1).symbols[0]
    return SequenceDescriptor(tuple(word), (tail,))


def approximate_integral(
    g: Callable[[Word], Fraction],
    omega: ModulusFunction | Callable[[Fraction], Fraction],
    mu: Measure,
    m: int,
    params: UltrametricParams = DEFAULT_PARAMS,
    budget: int = DEFAULT_BUDGET,
) -> tuple[Fraction, Fraction]:
    """Riemann sum at depth m plus a certified error bound.

    ``g(w)`` is the function's value at the zero-extension of w. If the
    caller's function obeys |g(x) - g(y)| <= omega(distance(x, y)), its true
    integral lies within ``omega(ratio**m)`` of the returned value.
    """
    if mu.total != 1 or not getattr(mu, "is_consistent", True):
        raise MeasureError(f"approximate_integral needs a probability measure, total is {mu.total}")
    value = sum((Fraction(g(w)) * v for w, v in iter_masses(mu, m, budget)), Fraction(0))
    return value, Fraction(omega(params.ratio**m))
