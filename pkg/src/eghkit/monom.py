"""Monomials, the lex order, and counting inside exponent boxes.

A monomial is an exponent vector.  Comparisons use the lexicographic order
with ``x1 > x2 > ... > xn``, which for exponent tuples is plain tuple
comparison.  A *box* is the set of monomials whose i-th exponent is strictly
below a bound ``a[i]``; bounds may be ``math.inf``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INF = math.inf


class Monomial(tuple):
    """Immutable exponent vector.

    Behaves as a tuple (hashing and equality included), so plain tuples and
    monomials can be mixed in sets and dicts.

    >>> Monomial((2, 1)) * Monomial((0, 1))
    Monomial((2, 2))
    """

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {exps!r}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "Monomial":
        exps = [0] * n
        exps[i] = power
        return cls(exps)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def n(self) -> int:
        return len(self)

    def _check(self, other) -> None:
        if len(other) != len(self):
            raise ValueError(f"ambient length mismatch: {len(self)} vs {len(other)}")

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        self._check(other)
        return Monomial(a + b for a, b in zip(self, other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        if not divides(other, self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(a - b for a, b in zip(self, other))

    def divides(self, other: Sequence[int]) -> bool:
        return divides(self, other)

    def gcd(self, other: Sequence[int]) -> "Monomial":
        self._check(other)
        return Monomial(map(min, self, other))

    def lcm(self, other: Sequence[int]) -> "Monomial":
        self._check(other)
        return Monomial(map(max, self, other))

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v))


def lex_compare(u: Sequence[int], v: Sequence[int]) -> int:
    """Return 1, 0 or -1 as x^u is lex-greater, equal or lex-smaller than x^v."""
    if len(u) != len(v):
        raise ValueError(f"ambient length mismatch: {len(u)} vs {len(v)}")
    u, v = tuple(u), tuple(v)
    return (u > v) - (u < v)


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Ring:
    """Ordered variable names; position 0 is the lex-greatest variable."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def standard(cls, n: int) -> "Ring":
        return cls(default_names(n))

    @property
    def n(self) -> int:
        return len(self.names)

    def one(self) -> Monomial:
        return Monomial.one(self.n)

    def var(self, i: int, power: int = 1) -> Monomial:
        return Monomial.variable(self.n, i, power)

    def drop_last(self) -> "Ring":
        return Ring(self.names[:-1])

    def format(self, m: Sequence[int]) -> str:
        return format_monomial(m, self.names)

    def monomial(self, text: str) -> Monomial:
        return parse_monomial(text, self.names)


def format_monomial(m: Sequence[int], names: Sequence[str]) -> str:
    """``x^2*y`` style text; ``1`` for the unit monomial."""
    if len(m) != len(names):
        raise ValueError("ambient length mismatch")
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    text = text.strip()
    exps = [0] * len(names)
    if text == "1":
        return Monomial(exps)
    index = {name: i for i, name in enumerate(names)}
    for factor in text.split("*"):
        factor = factor.strip()
        base, _, power = factor.partition("^")
        base = base.strip()
        if base not in index:
            raise ValueError(f"unknown variable {base!r} in {text!r}")
        e = int(power) if power else 1
        if e < 0:
            raise ValueError(f"negative exponent in {text!r}")
        exps[index[base]] += e
    return Monomial(exps)


@dataclass(frozen=True)
class DegreeSequence:
    """Nondecreasing degrees ``2 <= a1 <= a2 <= ...``, with ``inf`` entries last."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(INF if e == INF else int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        seen_inf = False
        prev = 0
        for e in entries:
            if e == INF:
                seen_inf = True
                continue
            if seen_inf:
                raise ValueError(f"infinite entries must come last: {self}")
            if e < 2:
                raise ValueError(f"finite degrees must be at least 2: {self}")
            if e < prev:
                raise ValueError(f"degrees must be nondecreasing: {self}")
            prev = e

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        items = [t.strip() for t in text.split(",") if t.strip()]
        return cls(tuple(INF if t in ("inf", "oo", "∞") else int(t) for t in items))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def finite(self) -> bool:
        return all(e != INF for e in self.entries)

    @property
    def socle(self) -> int:
        if not self.finite:
            raise ValueError("socle degree undefined with infinite entries")
        return sum(e - 1 for e in self.entries)

    def padded(self, n: int) -> tuple:
        if len(self.entries) > n:
            raise ValueError(f"{len(self.entries)} degrees for {n} variables")
        return self.entries + (INF,) * (n - len(self.entries))

    def __str__(self) -> str:
        return ", ".join("inf" if e == INF else str(e) for e in self.entries)


def box_bounds(a, n: int) -> tuple:
    """Exponent bounds of length n: ``a`` padded with ``inf``.

    ``a`` may be a DegreeSequence or any sequence of bounds; raw sequences are
    not checked for monotonicity so that other variable orders can be used.
    """
    entries = tuple(a)
    if len(entries) > n:
        raise ValueError(f"{len(entries)} bounds for {n} variables")
    return entries + (INF,) * (n - len(entries))


def box_count(n: int, a, d: int) -> int:
    """Number of degree-d monomials with i-th exponent below ``a[i]``.

    Inclusion-exclusion over the finitely bounded variables.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    bounds = box_bounds(a, n)
    if n == 0:
        return 1 if d == 0 else 0
    finite = [int(b) for b in bounds if b != INF]
    total = 0
    for size in range(len(finite) + 1):
        for subset in combinations(finite, size):
            rest = d - sum(subset)
            if rest < 0:
                continue
            total += (-1) ** size * math.comb(rest + n - 1, n - 1)
    return total


def _box_desc(bounds: tuple, d: int) -> Iterator[tuple]:
    n = len(bounds)
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        if d < bounds[0]:
            yield (d,)
        return
    top = d if bounds[0] == INF else min(d, bounds[0] - 1)
    for e in range(top, -1, -1):
        for rest in _box_desc(bounds[1:], d - e):
            yield (e,) + rest


def box_monomials(n: int, a, d: int) -> list[Monomial]:
    """Degree-d box monomials, lex-descending."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return [Monomial(m) for m in _box_desc(box_bounds(a, n), d)]


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    return box_monomials(n, (), d)


def in_box(m: Sequence[int], bounds: Sequence) -> bool:
    return all(e < b for e, b in zip(m, bounds))


def lex_segment(n: int, a, d: int, k: int) -> set[Monomial]:
    """The k lex-largest degree-d box monomials."""
    mons = box_monomials(n, a, d)
    if not 0 <= k <= len(mons):
        raise ValueError(f"segment size {k} outside [0, {len(mons)}]")
    return set(mons[:k])


def upper_shadow(B: Iterable[Sequence[int]], a) -> set[Monomial]:
    """Degree-(d+1) box monomials divisible by some element of B."""
    B = [tuple(m) for m in B]
    if not B:
        return set()
    n = len(B[0])
    degs = {sum(m) for m in B}
    if len(degs) != 1:
        raise ValueError(f"mixed degrees in shadow argument: {sorted(degs)}")
    bounds = box_bounds(a, n)
    out = set()
    for m in B:
        if len(m) != n:
            raise ValueError("ambient length mismatch")
        if not in_box(m, bounds):
            raise ValueError(f"{m} lies outside the box {bounds}")
        for i in range(n):
            if m[i] + 1 < bounds[i]:
                out.add(Monomial(m[:i] + (m[i] + 1,) + m[i + 1:]))
    return out
