"""Lex and lex-plus-powers ideals, Clements-Lindstrom compression and growth bounds.

Quotient-side conventions throughout: ``q`` is H(S/I, d) and the growth
functions return the largest possible H(S/I, d+1).  Standard monomials of a
lex-plus-powers ideal are always the lex-smallest box monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .mideal import (
    HilbertFunction,
    MonomialIdeal,
    contains,
    contains_pure_powers,
    hilbert_function,
)
from .monom import INF, Ring, box_bounds, box_monomials, monomials_of_degree


class NotAchievable(ValueError):
    """No lex-plus-powers ideal realizes the requested values."""

    def __init__(self, degree: int, reason: str = ""):
        self.degree = degree
        super().__init__(f"not achievable at degree {degree}" + (f": {reason}" if reason else ""))


class InvariantViolation(RuntimeError):
    """An outcome guaranteed by theory did not happen; indicates a bug."""


@dataclass(frozen=True)
class LppIdeal:
    """``whole = <x_i^a_i : a_i finite> + lex_part`` with ``lex_part`` lexicographic."""

    a: tuple
    lex_part: MonomialIdeal

    @property
    def ring(self) -> Ring:
        return self.lex_part.ring

    @property
    def whole(self) -> MonomialIdeal:
        return MonomialIdeal.pure_powers(self.ring, self.a) + self.lex_part

    def __str__(self) -> str:
        return str(self.whole)


def _bounds(a, n: int) -> tuple:
    return box_bounds(a, n)


def _check_degrees(I: MonomialIdeal, a) -> tuple:
    bounds = _bounds(a, I.n)
    if all(b != INF for b in bounds):
        return bounds, range(sum(int(b) - 1 for b in bounds) + 1)
    return bounds, range(I.max_degree() + 2)


def is_box_lex(I: MonomialIdeal, a, max_degree: int | None = None) -> bool:
    """Box-lex condition only: in each degree the box monomials of I form an
    initial lex segment of the box monomials."""
    bounds, degrees = _check_degrees(I, a)
    if max_degree is not None:
        degrees = range(max_degree + 1)
    for d in degrees:
        seen_out = False
        for m in box_monomials(I.n, bounds, d):
            if contains(I, m):
                if seen_out:
                    return False
            else:
                seen_out = True
    return True


def is_lpp(I: MonomialIdeal, a, strict: bool = True) -> bool:
    """Lex-plus-powers test.

    ``strict`` also requires every finite pure power x_i^a_i to lie in I; the
    weak reading checks only the box-lex condition.  Degrees are checked up
    to the box socle degree, or one past the top generator degree when some
    bound is infinite.
    """
    if len(tuple(a)) != I.n:
        raise ValueError(f"need {I.n} degrees, got {len(tuple(a))}")
    if strict and not contains_pure_powers(I, a):
        return False
    return is_box_lex(I, a)


def is_lex(I: MonomialIdeal, max_degree: int) -> bool:
    """Lexicographic test (no box) through ``max_degree``."""
    return is_box_lex(I, (), max_degree)


def _values(h) -> list[int]:
    if isinstance(h, HilbertFunction):
        return list(h.quotient().values)
    return [int(v) for v in h]


def lpp_from_hf(a, n: int, h, ring: Ring | None = None) -> LppIdeal:
    """The lex-plus-powers ideal whose quotient has values ``h`` through its bound.

    Raises NotAchievable at the first degree where the lex-smallest choice of
    standard monomials is not closed under division.
    """
    ring = ring or Ring.standard(n)
    if ring.n != n:
        raise ValueError("ring does not have n variables")
    bounds = _bounds(a, n)
    values = _values(h)
    lex_gens = []
    prev_std: set = set()
    for d, hd in enumerate(values):
        box = box_monomials(n, bounds, d)
        if not 0 <= hd <= len(box):
            raise NotAchievable(d, f"value {hd} outside [0, {len(box)}]")
        std = box[len(box) - hd:]
        if d > 0:
            for m in std:
                for i in range(n):
                    if m[i] and (m[:i] + (m[i] - 1,) + m[i + 1:]) not in prev_std:
                        raise NotAchievable(d, f"{ring.format(m)} has a divisor in the ideal")
        if hd < len(box):
            # everything lex-above the smallest non-standard box monomial
            cut = box[len(box) - hd - 1]
            lex_gens.extend(m for m in monomials_of_degree(n, d) if m >= cut)
        prev_std = set(std)
    return LppIdeal(tuple(bounds), MonomialIdeal(ring, lex_gens))


def lpp_growth(a, n: int, d: int, q: int) -> int:
    """H(S/J, d+1) for J = <x^a> + L, L lex generated in degree d, H(S/J, d) = q.

    This is the largest H(S/I, d+1) among ideals with H(S/I, d) = q that share
    a Hilbert function with an ideal containing the pure powers.
    """
    bounds = _bounds(a, n)
    box = box_monomials(n, bounds, d)
    if not 0 <= q <= len(box):
        raise ValueError(f"q={q} outside [0, {len(box)}]")
    ideal_part = set(box[: len(box) - q])
    count = 0
    for m in box_monomials(n, bounds, d + 1):
        if not any(m[i] and (m[:i] + (m[i] - 1,) + m[i + 1:]) in ideal_part for i in range(n)):
            count += 1
    return count


def macaulay_representation(q: int, d: int) -> list[tuple[int, int]]:
    """The d-th Macaulay representation q = sum C(k_j, j), k_d > k_{d-1} > ... >= j >= 1.

    Returned as (k_j, j) pairs from j = d downward.
    """
    if d < 1:
        raise ValueError("Macaulay representations need d >= 1")
    if q < 0:
        raise ValueError("q must be nonnegative")
    rep = []
    j = d
    while q > 0 and j >= 1:
        k = j
        while math.comb(k + 1, j) <= q:
            k += 1
        rep.append((k, j))
        q -= math.comb(k, j)
        j -= 1
    return rep


def macaulay_bound(q: int, d: int) -> int:
    """q^<d> = sum C(k_j + 1, j + 1) over the Macaulay representation."""
    return sum(math.comb(k + 1, j + 1) for k, j in macaulay_representation(q, d))


def macaulay_growth(n: int, d: int, q: int) -> int:
    """Macaulay's maximal growth: lpp_growth with no power constraints.

    Cross-checked against the representation arithmetic for d >= 1.
    """
    value = lpp_growth((), n, d, q)
    if d >= 1 and value != macaulay_bound(q, d):
        raise InvariantViolation(f"lex growth {value} != q^<d> {macaulay_bound(q, d)} for n={n}, d={d}, q={q}")
    return value


def refined_bound(n: int, a, d: int, q: int) -> int:
    """Growth bound for ideals in n variables containing a regular sequence of degrees a."""
    return lpp_growth(tuple(a), n, d, q)


def cl_compress(I: MonomialIdeal, a, bound: int | None = None) -> LppIdeal:
    """The lex-plus-powers ideal with the Hilbert function of I.

    With all n degrees finite the comparison runs to the box socle degree,
    past which both quotients vanish.  Otherwise ``bound`` defaults to one past
    the top generator degree and agreement is only guaranteed up to it.
    """
    bounds = _bounds(a, I.n)
    if not contains_pure_powers(I, bounds):
        raise ValueError(f"{I} does not contain the pure powers of {tuple(a)}")
    if bound is None:
        if all(b != INF for b in bounds):
            bound = sum(int(b) - 1 for b in bounds) + 1
        else:
            bound = I.max_degree() + 1
    h = hilbert_function(I, bound)
    try:
        return lpp_from_hf(bounds, I.n, h, I.ring)
    except NotAchievable as exc:
        raise InvariantViolation(f"compression of {I} failed: {exc}") from exc


def powers_plus_lex_with_hf(ring: Ring, bounds: Sequence, target: Sequence[int]) -> list[MonomialIdeal]:
    """All ideals <x_i^bounds_i> + L with L lexicographic (for the ring's
    variable order) whose quotient matches ``target`` through its length.

    Exhaustive over the sizes of the lex segments L_d, d <= len(target) - 1.
    ``bounds`` is taken as given, without monotonicity checks.
    """
    n = ring.n
    bounds = tuple(bounds) + (INF,) * (n - len(bounds))
    powers = MonomialIdeal.pure_powers(ring, bounds)
    top = len(target) - 1
    layers = [monomials_of_degree(n, d) for d in range(top + 1)]
    found = []

    def shadow_size(d: int, k: int) -> int:
        seg = layers[d][:k]
        shadow = {m[:i] + (m[i] + 1,) + m[i + 1:] for m in seg for i in range(n)}
        return len(shadow)

    def extend(d: int, sizes: list[int]) -> None:
        if d > top:
            gens = [m for e, k in enumerate(sizes) for m in layers[e][:k]]
            found.append(powers + MonomialIdeal(ring, gens))
            return
        low = shadow_size(d - 1, sizes[-1]) if d else 0
        for k in range(low, len(layers[d]) + 1):
            in_segment = set(layers[d][:k])
            std = sum(1 for m in layers[d] if m not in in_segment and not contains(powers, m))
            if std == target[d]:
                extend(d + 1, sizes + [k])

    extend(0, [])
    return found
