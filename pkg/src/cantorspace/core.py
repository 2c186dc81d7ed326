"""Alphabets, graded sequence spaces, eventually periodic points and cylinders.

Levels are 1-indexed throughout: ``symbol_at(x, 1)`` is the first term.
A point of the product space is represented by a finite preperiod followed
by a period repeated forever, which keeps equality decidable.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

Symbol = Hashable
Word = tuple  # finite word; entry i lives at level start + i (start = 1 unless stated)


class CantorSpaceError(ValueError):
    """Base class for contract violations raised by this package."""


class SymbolError(CantorSpaceError):
    pass


class LevelError(CantorSpaceError):
    """A level outside the defined part of a level system was requested."""


class BudgetExceeded(CantorSpaceError):
    """An enumeration would exceed the configured word budget."""


DEFAULT_BUDGET = 2**20


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple
    basepoint: int | None = None

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise SymbolError("alphabet must be non-empty")
        if len(set(symbols)) != len(symbols):
            raise SymbolError(f"duplicate symbols in alphabet {symbols!r}")
        if self.basepoint is not None and not 0 <= self.basepoint < len(symbols):
            raise SymbolError(f"basepoint index {self.basepoint} out of range")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __contains__(self, s) -> bool:
        return s in self.symbols

    @property
    def base_symbol(self) -> Symbol:
        if self.basepoint is None:
            raise SymbolError("alphabet has no basepoint")
        return self.symbols[self.basepoint]

    def index(self, s: Symbol) -> int:
        return self.symbols.index(s)


BINARY = Alphabet((0, 1), basepoint=0)


@dataclass(frozen=True)
class LevelSystem:
    """Alphabets E_1, E_2, ... given as an explicit head followed by a repeating cycle.

    An empty cycle means the system is finite: only levels ``1..len(head)`` exist.
    """

    head: tuple = ()
    cycle: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.head and not self.cycle:
            raise LevelError("level system has no levels")
        for a in self.head + self.cycle:
            if not isinstance(a, Alphabet):
                raise TypeError(f"expected Alphabet, got {type(a).__name__}")

    @classmethod
    def homogeneous(cls, alphabet: Alphabet | Iterable[Symbol]) -> LevelSystem:
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        return cls(cycle=(alphabet,))

    @classmethod
    def explicit(cls, alphabets: Sequence[Alphabet], repeat: bool = False) -> LevelSystem:
        """Levels given one by one; with ``repeat`` the list cycles forever."""
        if repeat:
            return cls(cycle=tuple(alphabets))
        return cls(head=tuple(alphabets))

    @property
    def is_finite(self) -> bool:
        return not self.cycle

    @property
    def n_levels(self) -> int | None:
        return len(self.head) if self.is_finite else None

    @property
    def is_homogeneous(self) -> bool:
        return bool(self.cycle) and len(set(self.head + self.cycle)) == 1

    def has_level(self, l: int) -> bool:
        return l >= 1 and (bool(self.cycle) or l <= len(self.head))

    def alphabet(self, l: int) -> Alphabet:
        if l < 1:
            raise LevelError(f"levels start at 1, got {l}")
        if l <= len(self.head):
            return self.head[l - 1]
        if not self.cycle:
            raise LevelError(f"level {l} beyond finite system of {len(self.head)} levels")
        return self.cycle[(l - len(self.head) - 1) % len(self.cycle)]

    def count_words(self, m: int, start: int = 1) -> int:
        return math.prod(len(self.alphabet(l)) for l in range(start, start + m))

    def words(self, m: int, start: int = 1) -> Iterator[Word]:
        """All words of length m starting at ``start``, in lexicographic alphabet order."""
        return itertools.product(*(self.alphabet(l).symbols for l in range(start, start + m)))

    def check_word(self, word: Iterable[Symbol], start: int = 1) -> Word:
        word = tuple(word)
        for i, s in enumerate(word):
            if s not in self.alphabet(start + i):
                raise SymbolError(f"symbol {s!r} not in alphabet at level {start + i}")
        return word

    def sequence(self, pre: Iterable[Symbol], per: Iterable[Symbol]) -> SequenceDescriptor:
        x = SequenceDescriptor(pre, per)
        validate_sequence(x, self)
        return x

    def cylinder(self, prefix: Iterable[Symbol]) -> Cylinder:
        return Cylinder(self.check_word(prefix))


def _primitive(per: tuple) -> tuple:
    n = len(per)
    for p in range(1, n + 1):
        if n % p == 0 and per[:p] * (n // p) == per:
            return per[:p]
    return per


@dataclass(frozen=True, eq=False)
class SequenceDescriptor:
    """Eventually periodic point: ``pre`` then ``per`` cycled forever.

    ``==`` and ``hash`` compare points, not presentations, so
    ``SequenceDescriptor((0,), (1, 0)) == SequenceDescriptor((), (0, 1))``.
    """

    pre: tuple
    per: tuple

    def __post_init__(self):
        object.__setattr__(self, "pre", tuple(self.pre))
        object.__setattr__(self, "per", tuple(self.per))
        if not self.per:
            raise SymbolError("period must be non-empty")

    def symbol_at(self, l: int) -> Symbol:
        if l < 1:
            raise LevelError(f"levels start at 1, got {l}")
        if l <= len(self.pre):
            return self.pre[l - 1]
        return self.per[(l - len(self.pre) - 1) % len(self.per)]

    def prefix(self, m: int) -> Word:
        return tuple(self.symbol_at(l) for l in range(1, m + 1))

    def normalized(self) -> SequenceDescriptor:
        """Shortest preperiod with a primitive period; unique per point."""
        pre, per = self.pre, _primitive(self.per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        return SequenceDescriptor(pre, per)

    def symbols(self) -> set:
        return set(self.pre) | set(self.per)

    def __eq__(self, other):
        if not isinstance(other, SequenceDescriptor):
            return NotImplemented
        return descriptor_equal(self, other)

    def __hash__(self):
        n = self.normalized()
        return hash((n.pre, n.per))

    def __repr__(self):
        return f"SequenceDescriptor(pre={list(self.pre)}, per={list(self.per)})"


def constant(s: Symbol) -> SequenceDescriptor:
    return SequenceDescriptor((), (s,))


def validate_sequence(x: SequenceDescriptor, system: LevelSystem) -> None:
    """Reject descriptors whose symbols fall outside their level alphabets.

    After ``max(|pre|, |head|)`` both the descriptor and the level system are
    periodic, so checking one joint period beyond that covers every level.
    """
    if system.is_finite:
        raise LevelError("infinite sequences need a level system with a repeating cycle")
    start = max(len(x.pre), len(system.head))
    horizon = start + math.lcm(len(x.per), len(system.cycle))
    for l in range(1, horizon + 1):
        s = x.symbol_at(l)
        if s not in system.alphabet(l):
            raise SymbolError(f"symbol {s!r} at level {l} not in alphabet {system.alphabet(l).symbols!r}")


def symbol_at(x: SequenceDescriptor, l: int) -> Symbol:
    return x.symbol_at(l)


def _equality_horizon(x: SequenceDescriptor, y: SequenceDescriptor) -> int:
    return len(x.pre) + len(y.pre) + math.lcm(len(x.per), len(y.per))


def descriptor_equal(x: SequenceDescriptor, y: SequenceDescriptor) -> bool:
    return all(x.symbol_at(l) == y.symbol_at(l) for l in range(1, _equality_horizon(x, y) + 1))


def first_difference(x: SequenceDescriptor, y: SequenceDescriptor) -> int | None:
    """Smallest level where x and y differ, or None when they are the same point."""
    for l in range(1, _equality_horizon(x, y) + 1):
        if x.symbol_at(l) != y.symbol_at(l):
            return l
    return None


@dataclass(frozen=True)
class Cylinder:
    """Standard neighborhood: all points whose first ``depth`` terms equal ``prefix``."""

    prefix: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))

    @property
    def depth(self) -> int:
        return len(self.prefix)


def as_cylinder(c: Cylinder | Iterable[Symbol]) -> Cylinder:
    return c if isinstance(c, Cylinder) else Cylinder(tuple(c))


def cylinder_contains(c: Cylinder, x: SequenceDescriptor) -> bool:
    return all(x.symbol_at(l) == s for l, s in enumerate(c.prefix, start=1))


def cylinder_children(c: Cylinder, system: LevelSystem) -> list[Cylinder]:
    alphabet = system.alphabet(c.depth + 1)
    return [Cylinder(c.prefix + (s,)) for s in alphabet]


def refine(c: Cylinder, depth: int, system: LevelSystem) -> list[Cylinder]:
    """The depth-``depth`` cylinders partitioning c."""
    if depth < c.depth:
        raise LevelError(f"cannot refine depth {c.depth} cylinder to depth {depth}")
    tails = system.words(depth - c.depth, start=c.depth + 1)
    return [Cylinder(c.prefix + t) for t in tails]


def disjointify(cylinders: Iterable[Cylinder], system: LevelSystem) -> list[Cylinder]:
    cylinders = [as_cylinder(c) for c in cylinders]
    if not cylinders:
        return []
    depth = max(c.depth for c in cylinders)
    out: dict[Cylinder, None] = {}
    for c in cylinders:
        for r in refine(c, depth, system):
            out[r] = None
    return list(out)


def pigeonhole_cluster(points: Sequence[Word], d: int, system: LevelSystem) -> tuple[Word, list[int]]:
    """Depth-d prefix shared by the most points, with the indices of those points.

    By pigeonhole at least ``ceil(N / #depth-d words)`` points share it; ties go
    to the prefix seen first.
    """
    if not points:
        raise CantorSpaceError("need at least one point")
    m = len(points[0])
    if any(len(p) != m for p in points):
        raise CantorSpaceError("points must share one depth")
    if not 0 <= d <= m:
        raise LevelError(f"target depth {d} exceeds point depth {m}")
    counts = Counter(tuple(p[:d]) for p in points)
    best = max(counts, key=lambda w: counts[w])  # max keeps first-seen on ties
    return best, [i for i, p in enumerate(points) if tuple(p[:d]) == best]


def nested_clusters(points: Sequence[Word], system: LevelSystem) -> list[tuple[Word, list[int]]]:
    """Repeat the pigeonhole step at depths 1..m, each time inside the previous cluster.

    This is the finite shadow of the diagonal argument: the surviving indices
    agree on ever longer prefixes.
    """
    m = len(points[0]) if points else 0
    chain = []
    idx = list(range(len(points)))
    for d in range(1, m + 1):
        prefix, sub = pigeonhole_cluster([points[i] for i in idx], d, system)
        idx = [idx[i] for i in sub]
        chain.append((prefix, idx))
    return chain


def lcm_all(*ns: int) -> int:
    return math.lcm(*ns) if ns else 1


@dataclass(frozen=True, eq=False)
class BiSequenceDescriptor:
    """Two-sided eventually periodic point.

    ``center[i]`` sits at level ``origin + i``. Toward -inf the left period is
    repeated with ``left[-1]`` at level ``origin - 1``; toward +inf the right
    period starts at level ``origin + len(center)``.
    """

    left: tuple
    center: tuple
    right: tuple
    origin: int = 0

    def __post_init__(self):
        for name in ("left", "center", "right"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.left or not self.right:
            raise SymbolError("left and right periods must be non-empty")

    @property
    def end(self) -> int:
        """First level of the right periodic tail."""
        return self.origin + len(self.center)

    def symbol_at(self, l: int) -> Symbol:
        if l < self.origin:
            return self.left[(l - self.origin) % len(self.left)]
        if l < self.end:
            return self.center[l - self.origin]
        return self.right[(l - self.end) % len(self.right)]

    def window(self, lo: int, hi: int) -> Word:
        """Symbols at levels lo..hi inclusive."""
        return tuple(self.symbol_at(l) for l in range(lo, hi + 1))

    def symbols(self) -> set:
        return set(self.left) | set(self.center) | set(self.right)

    def __eq__(self, other):
        if not isinstance(other, BiSequenceDescriptor):
            return NotImplemented
        return bi_first_difference(self, other) is None

    def __hash__(self):
        def rot(p):
            p = _primitive(p)
            return min(p[i:] + p[:i] for i in range(len(p)))

        return hash((rot(self.left), rot(self.right)))

    def __repr__(self):
        return (
            f"BiSequenceDescriptor(left={list(self.left)}, center={list(self.center)}, "
            f"right={list(self.right)}, origin={self.origin})"
        )


def _bi_range(x: BiSequenceDescriptor, y: BiSequenceDescriptor) -> tuple[int, int]:
    lo = min(x.origin, y.origin) - math.lcm(len(x.left), len(y.left))
    hi = max(x.end, y.end) + math.lcm(len(x.right), len(y.right))
    return lo, hi


def bi_first_difference(x: BiSequenceDescriptor, y: BiSequenceDescriptor) -> int | None:
    """Smallest |l| among levels where x and y differ (None when equal).

    Outside ``_bi_range`` both points are periodic with a joint period the
    range already covers, so equality is settled inside it.
    """
    lo, hi = _bi_range(x, y)
    if all(x.symbol_at(l) == y.symbol_at(l) for l in range(lo, hi + 1)):
        return None
    k = 0
    while x.symbol_at(k) == y.symbol_at(k) and x.symbol_at(-k) == y.symbol_at(-k):
        k += 1
    return k
