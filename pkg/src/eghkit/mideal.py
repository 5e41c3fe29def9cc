"""Monomial ideals and their Hilbert functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .monom import INF, Monomial, Ring, divides, parse_monomial

#: Largest number of candidate monomials examined in one degree.
DEFAULT_SLICE_BUDGET = 2_000_000


class SliceBudgetError(RuntimeError):
    """A degree slice is larger than the configured budget."""


def _canonical_key(m):
    return (sum(m), tuple(-e for e in m))


class MonomialIdeal:
    """Ideal generated by monomials, stored by its minimal generators.

    Generators are kept in canonical order: by degree, then lex-descending.
    An ideal with no generators is the zero ideal.
    """

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring, gens: Iterable[Sequence[int]] = ()):
        n = ring.n
        cleaned = []
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {tuple(g)} has length {len(g)}, ring has {n} variables")
            cleaned.append(g if isinstance(g, Monomial) else Monomial(g))
        self.ring = ring
        self.gens = _minimal(cleaned)

    @classmethod
    def parse(cls, text: str, ring: Ring) -> "MonomialIdeal":
        body = text.strip()
        if body.startswith("<") and body.endswith(">"):
            body = body[1:-1]
        items = [t for t in (s.strip() for s in body.split(",")) if t]
        if items == ["0"]:
            items = []
        return cls(ring, [parse_monomial(t, ring.names) for t in items])

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring)

    @classmethod
    def unit(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, [ring.one()])

    @classmethod
    def pure_powers(cls, ring: Ring, a) -> "MonomialIdeal":
        return cls(ring, [ring.var(i, int(e)) for i, e in enumerate(a) if e != INF])

    @property
    def n(self) -> int:
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == 0

    def max_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ambient mismatch: {self.ring.names} vs {other.ring.names}")

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.ring, self.gens))

    def issubset(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(contains(other, g) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    def __str__(self) -> str:
        if not self.gens:
            return "<0>"
        return "<" + ", ".join(self.ring.format(g) for g in self.gens) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self})"


def _minimal(gens: list) -> tuple:
    kept: list = []
    for m in sorted(set(gens), key=_canonical_key):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


def minimalize(gens: Iterable[Sequence[int]], ring: Ring | None = None) -> MonomialIdeal:
    """Minimal monomial generating set of the ideal spanned by ``gens``."""
    gens = [tuple(g) for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = Ring.standard(len(gens[0]))
    return MonomialIdeal(ring, gens)


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != I.n:
        raise ValueError(f"monomial of length {len(m)} in a ring with {I.n} variables")
    return any(divides(g, m) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._check(J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._check(J)
    return MonomialIdeal(I.ring, [g.lcm(h) for g in I.gens for h in J.gens])


def colon_monomial(I: MonomialIdeal, g: Sequence[int]) -> MonomialIdeal:
    """(I : x^g)."""
    return MonomialIdeal(I.ring, [tuple(max(a - b, 0) for a, b in zip(m, g)) for m in I.gens])


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of (I : g) over generators g of J.

    Colon by the zero ideal is the unit ideal (empty intersection).
    """
    I._check(J)
    result = MonomialIdeal.unit(I.ring)
    for g in J.gens:
        result = intersection(result, colon_monomial(I, g))
    return result


def colon_power_saturate(I: MonomialIdeal, v: int) -> tuple[int, list[MonomialIdeal]]:
    """Least N with (I : x_v^N) = (I : x_v^(N+1)), and the chain up to N."""
    if not 0 <= v < I.n:
        raise ValueError(f"variable index {v} out of range")
    chain = [I]
    j = 0
    while True:
        nxt = colon_monomial(I, I.ring.var(v, j + 1))
        if nxt == chain[-1]:
            return j, chain
        chain.append(nxt)
        j += 1


def truncate_below_degree(I: MonomialIdeal, D: int) -> MonomialIdeal:
    if D < 0:
        raise ValueError("degree must be nonnegative")
    return MonomialIdeal(I.ring, [g for g in I.gens if g.degree < D])


def contains_pure_powers(I: MonomialIdeal, a) -> bool:
    entries = tuple(a)
    if len(entries) > I.n:
        raise ValueError(f"{len(entries)} degrees for {I.n} variables")
    return all(contains(I, I.ring.var(i, int(e))) for i, e in enumerate(entries) if e != INF)


@dataclass(frozen=True)
class HilbertFunction:
    """Values of H(S/I, d) (side ``quotient``) or H(I, d) (side ``ideal``)
    for ``0 <= d <= bound``.  Reading past the bound raises IndexError.
    """

    values: tuple[int, ...]
    n: int
    side: str = "quotient"

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.side not in ("quotient", "ideal"):
            raise ValueError(f"unknown side {self.side!r}")
        if not self.values:
            raise ValueError("a Hilbert function table needs at least degree 0")

    @property
    def bound(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, d: int) -> int:
        if not 0 <= d <= self.bound:
            raise IndexError(f"degree {d} outside the materialized range 0..{self.bound}")
        return self.values[d]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def flipped(self) -> "HilbertFunction":
        """The other side: H(I, d) <-> H(S/I, d)."""
        other = "ideal" if self.side == "quotient" else "quotient"
        full = [math.comb(d + self.n - 1, self.n - 1) for d in range(len(self.values))]
        return HilbertFunction(tuple(f - v for f, v in zip(full, self.values)), self.n, other)

    def quotient(self) -> "HilbertFunction":
        return self if self.side == "quotient" else self.flipped()

    def truncated(self, bound: int) -> "HilbertFunction":
        if bound > self.bound:
            raise IndexError(f"cannot extend a table of bound {self.bound} to {bound}")
        return HilbertFunction(self.values[: bound + 1], self.n, self.side)


def standard_monomials(I: MonomialIdeal, bound: int, budget: int = DEFAULT_SLICE_BUDGET):
    """Yield the sets of degree-d monomials outside I for d = 0..bound.

    Each standard monomial of degree d+1 is x_i times one of degree d, so only
    those products are examined.
    """
    n = I.n
    current = [] if I.is_unit() else [Monomial.one(n)]
    for d in range(bound + 1):
        yield current
        candidates = set()
        for m in current:
            for i in range(n):
                candidates.add(m[:i] + (m[i] + 1,) + m[i + 1:])
        if len(candidates) > budget:
            raise SliceBudgetError(
                f"degree {d + 1} slice has {len(candidates)} candidates, budget is {budget}")
        current = [Monomial(m) for m in sorted(candidates, reverse=True) if not contains(I, m)]


def hilbert_function(I: MonomialIdeal, bound: int, budget: int = DEFAULT_SLICE_BUDGET) -> HilbertFunction:
    """H(S/I, d) for 0 <= d <= bound, counted exactly."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return HilbertFunction(tuple(len(s) for s in standard_monomials(I, bound, budget)), I.n)


def ci_hilbert(a: Sequence[int], n: int, bound: int) -> HilbertFunction:
    """H(S/<x1^a1, ..., xr^ar>, d) from prod(1 + t + ... + t^(ai-1)) / (1-t)^(n-r)."""
    a = tuple(a)
    if any(e == INF for e in a):
        raise ValueError("complete-intersection degrees must be finite")
    if len(a) > n:
        raise ValueError(f"{len(a)} degrees for {n} variables")
    if any(int(e) < 1 for e in a):
        raise ValueError("degrees must be positive")
    series = [1] + [0] * bound
    for e in a:
        # multiply by 1 + t + ... + t^(e-1): windowed prefix sums
        prefix = [0]
        for c in series:
            prefix.append(prefix[-1] + c)
        series = [prefix[d + 1] - prefix[max(0, d + 1 - int(e))] for d in range(bound + 1)]
    for _ in range(n - len(a)):
        total = 0
        for d in range(bound + 1):
            total += series[d]
            series[d] = total
    return HilbertFunction(tuple(series), n)
