"""Cylinder measures with exact rational masses.

Three presentations share one query interface (``mass(prefix)``):

* ``FinitePointMeasure`` -- point masses on E_1 x ... x E_n;
* ``ProductMeasure`` -- per-level symbol weights, masses multiply;
* ``TreeMeasure`` -- an explicit mass for every word up to some depth.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .coding import Interval, cylinder_interval
from .core import (
    BINARY,
    DEFAULT_BUDGET,
    Alphabet,
    BudgetExceeded,
    CantorSpaceError,
    Cylinder,
    LevelError,
    LevelSystem,
    Word,
    as_cylinder,
    disjointify,
)


class MeasureError(CantorSpaceError):
    pass


class DepthError(MeasureError):
    """A cylinder deeper than the measure's defined depth was queried."""


def _check_masses(masses: Iterable[Fraction], positive: bool) -> None:
    for v in masses:
        if v < 0:
            raise MeasureError(f"negative mass {v}")
        if positive and v == 0:
            raise MeasureError("strict positivity requested but a mass is zero")


@dataclass(frozen=True)
class FinitePointMeasure:
    """Nonnegative mass on each n-tuple of E_1 x ... x E_n; missing tuples weigh 0."""

    system: LevelSystem
    n: int
    masses: Mapping[Word, Fraction]
    positive: bool = False
    probability: bool = False

    def __post_init__(self):
        masses = {}
        for w in self.system.words(self.n):
            masses[w] = Fraction(self.masses.get(w, 0))
        extra = set(map(tuple, self.masses)) - set(masses)
        if extra:
            raise MeasureError(f"masses given for words outside the product: {sorted(map(str, extra))[:3]}")
        object.__setattr__(self, "masses", masses)
        _check_masses(masses.values(), self.positive)
        if self.probability and self.total != 1:
            raise MeasureError(f"probability measure has total {self.total}")

    @property
    def max_depth(self) -> int:
        return self.n

    @property
    def total(self) -> Fraction:
        return sum(self.masses.values(), Fraction(0))

    def mass(self, prefix: Word) -> Fraction:
        prefix = tuple(prefix)
        if len(prefix) > self.n:
            raise DepthError(f"cylinder depth {len(prefix)} exceeds {self.n}")
        k = len(prefix)
        return sum((v for w, v in self.masses.items() if w[:k] == prefix), Fraction(0))


@dataclass(frozen=True)
class ProductMeasure:
    """Per-level weight tables laid out as a head followed by a repeating cycle.

    A single cycle entry gives an i.i.d. (Bernoulli) measure.
    """

    cycle: tuple
    head: tuple = ()
    positive: bool = False
    probability: bool = False
    system: LevelSystem = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        def freeze(ws):
            return tuple({s: Fraction(v) for s, v in dict(w).items()} for w in ws)

        object.__setattr__(self, "cycle", freeze(self.cycle))
        object.__setattr__(self, "head", freeze(self.head))
        if not self.cycle:
            raise MeasureError("product measure needs at least one repeating level")
        for w in self.head + self.cycle:
            _check_masses(w.values(), self.positive)
            if self.probability and sum(w.values()) != 1:
                raise MeasureError(f"level weights {w} do not sum to 1")
        object.__setattr__(
            self,
            "system",
            LevelSystem(
                tuple(Alphabet(tuple(w)) for w in self.head),
                tuple(Alphabet(tuple(w)) for w in self.cycle),
            ),
        )

    @classmethod
    def iid(cls, weights: Mapping, **flags) -> ProductMeasure:
        return cls(cycle=(weights,), **flags)

    @classmethod
    def uniform(cls, alphabet: Alphabet | Sequence = BINARY) -> ProductMeasure:
        symbols = tuple(alphabet)
        w = Fraction(1, len(symbols))
        return cls(cycle=({s: w for s in symbols},), probability=True)

    @classmethod
    def bernoulli(cls, p) -> ProductMeasure:
        """Weight 1 - p on 0 and p on 1 at every level."""
        p = Fraction(p)
        return cls(cycle=({0: 1 - p, 1: p},), probability=True)

    @property
    def max_depth(self) -> None:
        return None

    def weights(self, l: int) -> dict:
        if l <= len(self.head):
            return self.head[l - 1]
        return self.cycle[(l - len(self.head) - 1) % len(self.cycle)]

    def level_total(self, l: int) -> Fraction:
        return sum(self.weights(l).values(), Fraction(0))

    @property
    def total(self) -> Fraction:
        """Mass of the depth-0 cylinder (the empty product)."""
        return Fraction(1)

    @property
    def is_consistent(self) -> bool:
        """Cylinder masses are additive exactly when every level totals 1."""
        return all(sum(w.values()) == 1 for w in self.head + self.cycle)

    def mass(self, prefix: Word) -> Fraction:
        """Product of the per-level weights along the prefix."""
        out = Fraction(1)
        for l, s in enumerate(prefix, 1):
            w = self.weights(l)
            if s not in w:
                raise MeasureError(f"symbol {s!r} not weighted at level {l}")
            out *= w[s]
        return out


@dataclass(frozen=True)
class TreeMeasure:
    """Explicit mass for every word of length <= depth (the empty word included).

    Consistency is deliberately not enforced here; ``check_consistency``
    reports violations so that inconsistent trees can be examined.
    """

    system: LevelSystem
    depth: int
    masses: Mapping[Word, Fraction]
    positive: bool = False
    probability: bool = False

    def __post_init__(self):
        given = {tuple(w): Fraction(v) for w, v in self.masses.items()}
        masses = {}
        for d in range(self.depth + 1):
            for w in self.system.words(d):
                if w not in given:
                    raise MeasureError(f"tree measure missing mass for word {w!r}")
                masses[w] = given.pop(w)
        if given:
            raise MeasureError(f"masses for words outside the tree: {sorted(map(str, given))[:3]}")
        object.__setattr__(self, "masses", masses)
        _check_masses(masses.values(), self.positive)
        if self.probability and masses[()] != 1:
            raise MeasureError(f"probability tree has total {masses[()]}")

    @property
    def max_depth(self) -> int:
        return self.depth

    @property
    def total(self) -> Fraction:
        return self.masses[()]

    def mass(self, prefix: Word) -> Fraction:
        prefix = tuple(prefix)
        if len(prefix) > self.depth:
            raise DepthError(f"cylinder depth {len(prefix)} exceeds tree depth {self.depth}")
        return self.masses[prefix]

    def restrict(self, depth: int) -> TreeMeasure:
        if depth > self.depth:
            raise DepthError(f"cannot restrict depth-{self.depth} tree to depth {depth}")
        return TreeMeasure(self.system, depth, {w: v for w, v in self.masses.items() if len(w) <= depth})


Measure = Union[FinitePointMeasure, ProductMeasure, TreeMeasure]


def cylinder_mass(mu: Measure, c: Cylinder | Word) -> Fraction:
    return mu.mass(as_cylinder(c).prefix)


def check_consistency(mu: TreeMeasure) -> list[Word]:
    """Words whose children's masses do not sum to the word's own mass."""
    bad = []
    for w, v in mu.masses.items():
        if len(w) < mu.depth:
            kids = sum((mu.masses[w + (s,)] for s in mu.system.alphabet(len(w) + 1)), Fraction(0))
            if kids != v:
                bad.append(w)
    return bad


def _tree_size(system: LevelSystem, depth: int) -> int:
    return sum(system.count_words(d) for d in range(depth + 1))


def iter_masses(mu: Measure, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[Word, Fraction]]:
    """(word, mass) for every depth-m word in lexicographic order.

    Product measures are walked depth-first so each word costs one
    multiplication rather than m.
    """
    if mu.max_depth is not None and m > mu.max_depth:
        raise DepthError(f"depth {m} exceeds measure depth {mu.max_depth}")
    system = mu.system
    if system.count_words(m) > budget:
        raise BudgetExceeded(f"{system.count_words(m)} depth-{m} words exceed budget {budget}")
    if not isinstance(mu, ProductMeasure):
        for w in system.words(m):
            yield w, mu.mass(w)
        return
    # integer numerators over one common denominator; distinct products are
    # few, so the Fractions are memoised
    den = 1
    nums = [1]
    for l in range(1, m + 1):
        weights = list(mu.weights(l).values())
        d = math.lcm(*(w.denominator for w in weights))
        level = [w.numerator * (d // w.denominator) for w in weights]
        nums = [a * n for a in nums for n in level]
        den *= d
    cache: dict[int, Fraction] = {}
    for w, n in zip(system.words(m), nums):
        v = cache.get(n)
        if v is None:
            v = cache[n] = Fraction(n, den)
        yield w, v


def product_to_tree(mu: ProductMeasure, D: int, budget: int = DEFAULT_BUDGET) -> TreeMeasure:
    size = _tree_size(mu.system, D)
    if size > budget:
        raise BudgetExceeded(f"tree of depth {D} has {size} words, budget is {budget}")
    masses = {}
    for d in range(D + 1):
        masses.update(iter_masses(mu, d, budget))
    return TreeMeasure(mu.system, D, masses)


def finite_to_tree(mu: FinitePointMeasure) -> TreeMeasure:
    """Marginal masses of a point measure on E_1 x ... x E_n, for every depth <= n."""
    masses: dict[Word, Fraction] = {}
    for w, v in mu.masses.items():
        for k in range(mu.n + 1):
            masses[w[:k]] = masses.get(w[:k], Fraction(0)) + v
    return TreeMeasure(mu.system, mu.n, masses)


def clopen_mass(mu: Measure, cylinders: Iterable[Cylinder | Word]) -> Fraction:
    """Mass of a finite union of cylinders, overlaps counted once."""
    parts = disjointify([as_cylinder(c) for c in cylinders], mu.system)
    return sum((cylinder_mass(mu, c) for c in parts), Fraction(0))


class CodingMap(enum.Enum):
    TAU = "tau"
    BETA = "beta"


def pushforward_intervals(
    mu: Measure, coding: CodingMap | str, m: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[Interval, Fraction]]:
    """Image of a measure on binary sequences under tau or beta, at depth m.

    TAU pairs each depth-m stage interval with its cylinder's mass; BETA does
    the same with the dyadic intervals [k/2**m, (k+1)/2**m].
    """
    coding = CodingMap(coding)
    for l in range(1, max(m, 1) + 1):
        if set(mu.system.alphabet(l)) != {0, 1}:
            raise LevelError(f"pushforward needs the binary alphabet at level {l}")
    pairs = iter_masses(mu, m, budget)
    if coding is CodingMap.TAU:
        return [(cylinder_interval(w), v) for w, v in pairs]
    scale = 2**m
    ends = [Fraction(k, scale) for k in range(scale + 1)]
    if all(mu.system.alphabet(l).symbols == (0, 1) for l in range(1, m + 1)):
        # lexicographic enumeration order is then the dyadic order
        return [(Interval.trusted(ends[k], ends[k + 1]), v) for k, (_, v) in enumerate(pairs)]
    out = []
    for w, v in pairs:
        k = int("".join(map(str, w)), 2) if w else 0
        out.append((Interval.trusted(ends[k], ends[k + 1]), v))
    return out
