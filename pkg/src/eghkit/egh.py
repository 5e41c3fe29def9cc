"""Per-degree EGH checks, liaison of monomial complete intersections, and the
slice construction that lifts lex-plus-powers ideals across one variable."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .lpp import LppIdeal, cl_compress, lpp_growth
from .mideal import (
    MonomialIdeal,
    colon,
    colon_monomial,
    colon_power_saturate,
    contains_pure_powers,
    hilbert_function,
)
from .monom import INF, Monomial, Ring, box_bounds, box_count, box_monomials


def _finite(a) -> tuple[int, ...]:
    entries = tuple(a)
    if any(e == INF for e in entries):
        raise ValueError(f"degrees must be finite: {entries}")
    return tuple(int(e) for e in entries)


def socle_degree(a) -> int:
    return sum(e - 1 for e in _finite(a))


def gap_condition(a) -> bool:
    """a_j > sum_{i<j} (a_i - 1) for every j >= 2."""
    a = _finite(a)
    total = 0
    for j, e in enumerate(a):
        if j and e <= total:
            return False
        total += e - 1
    return True


def dual_degree(a, d: int) -> int:
    s = socle_degree(a)
    if not 0 <= d <= s - 1:
        raise ValueError(f"degree {d} outside [0, {s - 1}]")
    return s - d - 1


def egh_at_degree(hI_d: int, hI_d1: int, a, n: int, d: int) -> bool:
    """Whether quotient values (hI_d, hI_d1) at degrees d, d+1 are matched by an
    ideal containing the pure powers x_i^a_i."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    top = box_count(n, a, d)
    if not 0 <= hI_d <= top:
        raise ValueError(f"H(S/I,{d})={hI_d} outside [0, {top}]")
    if hI_d1 < 0:
        raise ValueError("Hilbert function values are nonnegative")
    return hI_d1 <= lpp_growth(a, n, d, hI_d)


def egh_witness(hI_d: int, hI_d1: int, a, n: int, d: int, ring: Ring | None = None) -> MonomialIdeal | None:
    """An ideal J containing the pure powers with H(S/J, d) = hI_d and
    H(S/J, d+1) = hI_d1, or None when none exists.

    Starts from the growth-extremal lex-plus-powers ideal and adds lex-largest
    standard monomials of degree d+1 as generators until the count drops.
    """
    if not egh_at_degree(hI_d, hI_d1, a, n, d):
        return None
    ring = ring or Ring.standard(n)
    bounds = box_bounds(a, n)
    box = box_monomials(n, bounds, d)
    J = MonomialIdeal.pure_powers(ring, bounds) + MonomialIdeal(ring, box[: len(box) - hI_d])
    std_next = [m for m in box_monomials(n, bounds, d + 1) if m not in J]
    extra = std_next[: len(std_next) - hI_d1]
    return J + MonomialIdeal(ring, extra)


def liaison_transform(J: MonomialIdeal, a) -> MonomialIdeal:
    """(M : J) for the complete intersection M = <x_1^a_1, ..., x_n^a_n>."""
    a = _finite(a)
    if len(a) != J.n:
        raise ValueError(f"need {J.n} degrees, got {len(a)}")
    if not contains_pure_powers(J, a):
        raise ValueError(f"{J} does not contain the pure powers {a}")
    return colon(MonomialIdeal.pure_powers(J.ring, a), J)


def liaison_check(J: MonomialIdeal, a) -> bool:
    """H(S/M, t) = H(S/J, t) + H(S/(M:J), s - t) for 0 <= t <= s."""
    linked = liaison_transform(J, a)
    a = _finite(a)
    s = socle_degree(a)
    hM = hilbert_function(MonomialIdeal.pure_powers(J.ring, a), s)
    hJ = hilbert_function(J, s)
    hL = hilbert_function(linked, s)
    return all(hM[t] == hJ[t] + hL[s - t] for t in range(s + 1))


def ideals_containing_powers(ring: Ring, a) -> Iterator[MonomialIdeal]:
    """Every monomial ideal containing <x_i^a_i> (all a_i finite), via the
    division-closed subsets of the box that serve as standard monomials."""
    a = _finite(a)
    if len(a) != ring.n:
        raise ValueError(f"need {ring.n} degrees, got {len(a)}")
    box = [m for d in range(socle_degree(a) + 1) for m in box_monomials(ring.n, a, d)]
    powers = MonomialIdeal.pure_powers(ring, a)
    n = ring.n

    def walk(i: int, std: frozenset) -> Iterator[MonomialIdeal]:
        if i == len(box):
            yield powers + MonomialIdeal(ring, [m for m in box if m not in std])
            return
        m = box[i]
        yield from walk(i + 1, std)
        if all(not m[k] or (m[:k] + (m[k] - 1,) + m[k + 1:]) in std for k in range(n)):
            yield from walk(i + 1, std | {m})

    yield from walk(0, frozenset())


@dataclass(frozen=True)
class Slice:
    j: int
    restricted: MonomialIdeal
    compressed: LppIdeal


@dataclass(frozen=True)
class SliceDecomposition:
    """Output of the slice construction.

    ``slices[j]`` holds (I : x_n^j) + <x_n> read in the first n-1 variables
    and its lex-plus-powers compression M_j; ``result`` is the ideal K whose
    monomials are x^u x_n^j with x^u in M_min(j, N).
    """

    g: int
    N: int
    slices: tuple[Slice, ...]
    result: MonomialIdeal

    def compressed_at(self, j: int) -> MonomialIdeal:
        return self.slices[min(j, self.N)].compressed.whole

    def member_by_slices(self, m: Sequence[int]) -> bool:
        """Membership in the union of the K_j and K_infinity sets."""
        return tuple(m[:-1]) in self.compressed_at(m[-1])


def _restrict(I: MonomialIdeal, ring: Ring) -> MonomialIdeal:
    """Image of I + <x_n> in the ring of the first n-1 variables."""
    return MonomialIdeal(ring, [g[:-1] for g in I.gens if g[-1] == 0])


def slice_construct(I: MonomialIdeal, a, r: int | None = None, bound: int | None = None) -> SliceDecomposition:
    """Build K by slices along the last variable.

    ``a`` lists the degrees of the pure powers x_1^a_1, ..., x_r^a_r known to
    lie in I, with r < n.  K contains the same pure powers and matches the
    Hilbert function of I through ``bound`` (default: socle degree of a + 2).
    """
    a = _finite(a)
    r = len(a) if r is None else r
    if r != len(a):
        raise ValueError(f"r={r} but {len(a)} degrees given")
    n = I.n
    if r >= n:
        raise ValueError("slicing needs r < n so the last variable is free")
    if not contains_pure_powers(I, a):
        raise ValueError(f"{I} does not contain the pure powers {a}")
    if bound is None:
        bound = socle_degree(a) + 2
    sub = I.ring.drop_last()
    N, chain = colon_power_saturate(I, n - 1)
    slices = []
    gens = []
    for j, quotient in enumerate(chain):
        restricted = _restrict(quotient, sub)
        compressed = cl_compress(restricted, a, bound)
        slices.append(Slice(j, restricted, compressed))
        gens.extend(Monomial(u + (j,)) for u in compressed.whole.gens)
    K = MonomialIdeal(I.ring, gens)
    return SliceDecomposition(n - 1, N, tuple(slices), K)


def slice_hf_identity(I: MonomialIdeal, bound: int) -> bool:
    """H(S/I, t) = sum_{j<=t} H(S/((I : x_n^j) + <x_n>), t - j) for t <= bound."""
    n = I.n
    last = I.ring.var(n - 1)
    target = hilbert_function(I, bound)
    pieces = [hilbert_function(colon_monomial(I, I.ring.var(n - 1, j)) + MonomialIdeal(I.ring, [last]), bound)
              for j in range(bound + 1)]
    return all(target[t] == sum(pieces[j][t - j] for j in range(t + 1)) for t in range(bound + 1))
