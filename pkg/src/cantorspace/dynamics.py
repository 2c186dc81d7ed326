"""Shift maps and termwise (semi)group structure on sequence spaces."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import (
    Alphabet,
    BiSequenceDescriptor,
    CantorSpaceError,
    LevelError,
    LevelSystem,
    SequenceDescriptor,
    Symbol,
    validate_sequence,
)


class AlgebraError(CantorSpaceError):
    pass


@dataclass(frozen=True)
class OpTable:
    """Cayley table of a binary operation on a finite alphabet."""

    alphabet: Alphabet
    table: Mapping[tuple, Symbol]
    identity: Symbol | None = None
    inverse: Mapping[Symbol, Symbol] | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", dict(self.table))
        if self.inverse is not None:
            object.__setattr__(self, "inverse", dict(self.inverse))
        for a, b in itertools.product(self.alphabet, repeat=2):
            if (a, b) not in self.table:
                raise AlgebraError(f"table undefined at ({a!r}, {b!r})")
            if self.table[(a, b)] not in self.alphabet:
                raise AlgebraError(f"table value {self.table[(a, b)]!r} outside alphabet")
        if self.identity is not None and self.identity not in self.alphabet:
            raise AlgebraError(f"identity {self.identity!r} outside alphabet")

    @classmethod
    def from_rows(cls, symbols: Sequence[Symbol], rows: Sequence[Sequence[Symbol]], identity=None, inverse=None) -> OpTable:
        """``rows[i][j]`` is ``symbols[i] * symbols[j]``."""
        symbols = tuple(symbols)
        table = {(a, b): rows[i][j] for i, a in enumerate(symbols) for j, b in enumerate(symbols)}
        return cls(Alphabet(symbols), table, identity, inverse)

    @classmethod
    def cyclic_group(cls, n: int) -> OpTable:
        """Z/n under addition, with identity and inverses declared."""
        symbols = tuple(range(n))
        table = {(a, b): (a + b) % n for a in symbols for b in symbols}
        return cls(Alphabet(symbols, basepoint=0), table, 0, {a: (-a) % n for a in symbols})

    def __call__(self, a: Symbol, b: Symbol) -> Symbol:
        return self.table[(a, b)]


@dataclass(frozen=True)
class OpReport:
    associative: bool
    has_identity: bool
    is_group: bool
    identity: Symbol | None = None
    inverse: dict | None = None
    failing_triple: tuple | None = None
    problems: list = field(default_factory=list)


def validate_op_table(t: OpTable) -> OpReport:
    """Brute-force check of associativity, identity and inverses.

    A declared identity or inverse map is verified; when absent, one is
    searched for, so the report also says whether one exists.
    """
    E = t.alphabet.symbols
    problems = []
    failing = None
    for a, b, c in itertools.product(E, repeat=3):
        if t(t(a, b), c) != t(a, t(b, c)):
            failing = (a, b, c)
            problems.append(f"({a!r}*{b!r})*{c!r} != {a!r}*({b!r}*{c!r})")
            break
    associative = failing is None

    def is_identity(e):
        return all(t(e, a) == a and t(a, e) == a for a in E)

    if t.identity is not None:
        identity = t.identity if is_identity(t.identity) else None
        if identity is None:
            problems.append(f"declared identity {t.identity!r} fails the identity law")
    else:
        identity = next((e for e in E if is_identity(e)), None)

    inverse = None
    if identity is not None:
        if t.inverse is not None:
            bad = [a for a in E if t.inverse.get(a) not in t.alphabet
                   or t(a, t.inverse[a]) != identity or t(t.inverse[a], a) != identity]
            if bad:
                problems.append(f"declared inverse fails at {bad[0]!r}")
            else:
                inverse = dict(t.inverse)
        else:
            found = {}
            for a in E:
                b = next((b for b in E if t(a, b) == identity and t(b, a) == identity), None)
                if b is None:
                    break
                found[a] = b
            else:
                inverse = found
    return OpReport(
        associative=associative,
        has_identity=identity is not None,
        is_group=associative and inverse is not None,
        identity=identity,
        inverse=inverse,
        failing_triple=failing,
        problems=problems,
    )


@dataclass(frozen=True)
class TermwiseStructure:
    """One operation table per level, laid out like a ``LevelSystem``."""

    head: tuple = ()
    cycle: tuple = ()
    reports: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise LevelError("termwise structure needs a repeating cycle of tables")
        reports = []
        for t in self.head + self.cycle:
            r = validate_op_table(t)
            if not r.associative:
                raise AlgebraError(f"table is not associative: {r.problems[0]}")
            if r.problems:
                raise AlgebraError(r.problems[0])
            reports.append(r)
        object.__setattr__(self, "reports", tuple(reports))

    @classmethod
    def homogeneous(cls, table: OpTable) -> TermwiseStructure:
        return cls(cycle=(table,))

    @property
    def system(self) -> LevelSystem:
        return LevelSystem(tuple(t.alphabet for t in self.head), tuple(t.alphabet for t in self.cycle))

    def _index(self, l: int) -> int:
        if l < 1:
            raise LevelError(f"levels start at 1, got {l}")
        if l <= len(self.head):
            return l - 1
        return len(self.head) + (l - len(self.head) - 1) % len(self.cycle)

    def table(self, l: int) -> OpTable:
        return (self.head + self.cycle)[self._index(l)]

    def report(self, l: int) -> OpReport:
        return self.reports[self._index(l)]


def _assemble(s: TermwiseStructure, pres: Sequence[int], pers: Sequence[int], at) -> SequenceDescriptor:
    """Build a descriptor from a level function that is periodic after max(pres, head)."""
    k = max(*pres, len(s.head))
    p = math.lcm(*pers, len(s.cycle))
    pre = tuple(at(l) for l in range(1, k + 1))
    per = tuple(at(l) for l in range(k + 1, k + p + 1))
    return SequenceDescriptor(pre, per).normalized()


def termwise_op(x: SequenceDescriptor, y: SequenceDescriptor, s: TermwiseStructure) -> SequenceDescriptor:
    system = s.system
    validate_sequence(x, system)
    validate_sequence(y, system)
    return _assemble(
        s, (len(x.pre), len(y.pre)), (len(x.per), len(y.per)),
        lambda l: s.table(l)(x.symbol_at(l), y.symbol_at(l)),
    )


def identity_sequence(s: TermwiseStructure) -> SequenceDescriptor:
    ids = [r.identity for r in s.reports]
    if any(e is None for e in ids):
        raise AlgebraError("some level has no identity element")
    return _assemble(s, (0,), (1,), lambda l: s.report(l).identity)


def termwise_inverse(x: SequenceDescriptor, s: TermwiseStructure) -> SequenceDescriptor:
    if not all(r.is_group for r in s.reports):
        raise AlgebraError("termwise inverse needs a group at every level")
    validate_sequence(x, s.system)
    return _assemble(s, (len(x.pre),), (len(x.per),), lambda l: s.report(l).inverse[x.symbol_at(l)])


def locality_check(s: TermwiseStructure, m: int) -> bool:
    """Check that the depth-m prefix of x*y depends only on the depth-m prefixes of x, y.

    Every pair of depth-m prefixes is extended by every pair of constant
    tails, which varies the symbols at level m + 1 and beyond.
    """
    system = s.system
    if not system.is_homogeneous:
        raise LevelError("locality check needs a homogeneous alphabet")
    E = system.alphabet(1).symbols
    if len(E) > 4 or m > 4 or m < 0:
        raise CantorSpaceError("locality check is exhaustive; needs |E| <= 4 and 0 <= m <= 4")
    for u, v in itertools.product(itertools.product(E, repeat=m), repeat=2):
        seen = None
        for a, b in itertools.product(E, repeat=2):
            z = termwise_op(SequenceDescriptor(u, (a,)), SequenceDescriptor(v, (b,)), s).prefix(m)
            if seen is None:
                seen = z
            elif z != seen:
                return False
    return True


def bi_termwise_op(x: BiSequenceDescriptor, y: BiSequenceDescriptor, t: OpTable) -> BiSequenceDescriptor:
    """Apply one operation table at every integer level of two-sided points."""
    lo = min(x.origin, y.origin)
    hi = max(x.end, y.end)
    p_left = math.lcm(len(x.left), len(y.left))
    p_right = math.lcm(len(x.right), len(y.right))

    def at(l):
        return t(x.symbol_at(l), y.symbol_at(l))

    # left[-1] sits at level lo - 1, so the period covers lo - p_left .. lo - 1
    left = tuple(at(l) for l in range(lo - p_left, lo))
    center = tuple(at(l) for l in range(lo, hi))
    right = tuple(at(l) for l in range(hi, hi + p_right))
    return BiSequenceDescriptor(left, center, right, lo)


def in_e_star(x: BiSequenceDescriptor, alphabet: Alphabet) -> int | None:
    """Largest L with x_l equal to the basepoint for every l <= L, or None.

    A point that is the basepoint everywhere has no largest L; the boundary
    just left of the center, ``origin - 1``, is reported for it.
    """
    b = alphabet.base_symbol
    if any(s != b for s in x.left):
        return None
    lead = 0
    while lead < len(x.center) and x.center[lead] == b:
        lead += 1
    if lead == len(x.center) and all(s == b for s in x.right):
        return x.origin - 1
    return x.origin - 1 + lead


def _require_homogeneous(system: LevelSystem | None) -> None:
    if system is not None and not system.is_homogeneous:
        raise LevelError("shift maps need a homogeneous level system")


def shift_one_sided(x: SequenceDescriptor, system: LevelSystem | None = None) -> SequenceDescriptor:
    """Drop the first term."""
    _require_homogeneous(system)
    if x.pre:
        return SequenceDescriptor(x.pre[1:], x.per).normalized()
    return SequenceDescriptor((), x.per[1:] + x.per[:1]).normalized()


def shift_preimages(y: SequenceDescriptor, system: LevelSystem) -> list[SequenceDescriptor]:
    """All x with shift(x) == y: one per symbol placed in front."""
    _require_homogeneous(system)
    return [SequenceDescriptor((s,) + y.pre, y.per) for s in system.alphabet(1)]


def shift_two_sided(x: BiSequenceDescriptor) -> BiSequenceDescriptor:
    """(x_l) -> (x_{l+1}), done by moving the origin label."""
    return BiSequenceDescriptor(x.left, x.center, x.right, x.origin - 1)


def unshift_two_sided(x: BiSequenceDescriptor) -> BiSequenceDescriptor:
    return BiSequenceDescriptor(x.left, x.center, x.right, x.origin + 1)


@dataclass(frozen=True)
class OrbitResult:
    points: list
    preperiod: int | None
    cycle: int | None


def orbit(x: SequenceDescriptor, n: int, system: LevelSystem | None = None) -> OrbitResult:
    """Iterate the one-sided shift n times and locate the first repeated point.

    ``preperiod`` and ``cycle`` stay None when no repeat shows up within n steps.
    """
    _require_homogeneous(system)
    points = [x]
    for _ in range(n):
        points.append(shift_one_sided(points[-1]))
    for j in range(1, len(points)):
        for i in range(j):
            if points[i] == points[j]:
                return OrbitResult(points, i, j - i)
    return OrbitResult(points, None, None)
