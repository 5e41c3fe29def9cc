"""Homogeneous polynomials over prime fields and a small Buchberger engine.

Polynomials are dicts from exponent tuples to residues mod p.  Everything is
homogeneous, so the degrevlex comparison only ever compares monomials of one
degree.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .mideal import DEFAULT_SLICE_BUDGET, HilbertFunction, MonomialIdeal, SliceBudgetError, ci_hilbert, hilbert_function
from .monom import Monomial, Ring, divides, monomials_of_degree

ORDERS = ("degrevlex", "lex")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not 2 <= self.p < 2 ** 16:
            raise ValueError(f"modulus {self.p} outside [2, 65536)")
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def inv(self, c: int) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(c, self.p - 2, self.p)

    def __str__(self) -> str:
        return f"gf({self.p})"


def order_key(order: str):
    """Sort key: larger key means larger monomial."""
    if order == "lex":
        return tuple
    if order == "degrevlex":
        return lambda m: (sum(m), tuple(-e for e in reversed(m)))
    raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}")


class Polynomial:
    """Homogeneous polynomial with coefficients in a prime field."""

    __slots__ = ("ring", "field", "terms")

    def __init__(self, ring: Ring, field: PrimeField, terms: dict | Iterable = ()):
        p = field.p
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != ring.n:
                raise ValueError(f"term {m} does not fit a ring with {ring.n} variables")
            c = (clean.get(m, 0) + c) % p
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        if len({sum(m) for m in clean}) > 1:
            raise ValueError("polynomial is not homogeneous")
        self.ring = ring
        self.field = field
        self.terms = clean

    @classmethod
    def parse(cls, text: str, ring: Ring, field: PrimeField) -> "Polynomial":
        return cls(ring, field, parse_terms(text, ring))

    @classmethod
    def monomial(cls, ring: Ring, field: PrimeField, m: Sequence[int], c: int = 1) -> "Polynomial":
        return cls(ring, field, {tuple(m): c})

    @property
    def degree(self) -> int | None:
        for m in self.terms:
            return sum(m)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        if self.ring != other.ring:
            raise ValueError("ambient mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.ring, self.field, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.ring, self.field, {m: v * c for m, v in self.terms.items()})

    def shift(self, u: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial x^u."""
        return Polynomial(self.ring, self.field,
                          {tuple(a + b for a, b in zip(m, u)): c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = []
        for m, c in self.terms.items():
            for k, e in other.terms.items():
                out.append((tuple(a + b for a, b in zip(m, k)), c * e))
        return Polynomial(self.ring, self.field, out)

    def leading(self, order: str = "degrevlex") -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order_key(order))
        return Monomial(m), self.terms[m]

    def monic(self, order: str = "degrevlex") -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading(order)[1]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.field, frozenset(self.terms.items())))

    def to_str(self, order: str = "degrevlex") -> str:
        if not self.terms:
            return "0"
        p = self.field.p
        parts = []
        for m in sorted(self.terms, key=order_key(order), reverse=True):
            c = self.terms[m]
            # print the representative closest to zero
            sign = "-" if c > p // 2 else "+"
            c = p - c if sign == "-" else c
            mono = self.ring.format(m)
            body = mono if c == 1 else (str(c) if mono == "1" else f"{c}*{mono}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self}, {self.field})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-]))")


def parse_terms(text: str, ring: Ring) -> list[tuple[tuple, int]]:
    """Parse ``3*x^2*y - y*z + 2`` into (exponents, integer coefficient) pairs.

    Raises ValueError with a column offset on malformed input.
    """
    index = {name: i for i, name in enumerate(ring.names)}
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"column {pos + 1}: unexpected character {text[pos]!r}")
        kind = mt.lastindex
        tokens.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    terms = []
    i = 0
    if not tokens:
        raise ValueError("column 1: expected a term")

    def expect_fail(what: str, k: int):
        col = tokens[k][2] + 1 if k < len(tokens) else len(text) + 1
        raise ValueError(f"column {col}: expected {what}")

    while i < len(tokens):
        sign = 1
        if tokens[i][0] == 5:
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif terms:
            expect_fail("'+' or '-'", i)
        coeff = 1
        exps = [0] * ring.n
        seen_factor = False
        while True:
            if i >= len(tokens):
                expect_fail("a coefficient or variable", i)
            kind, val, col = tokens[i]
            if kind == 1:
                coeff *= int(val)
                i += 1
            elif kind == 2:
                if val not in index:
                    raise ValueError(f"column {col + 1}: undeclared variable {val!r}")
                i += 1
                power = 1
                if i < len(tokens) and tokens[i][0] == 3:
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != 1:
                        expect_fail("an integer exponent", i + 1)
                    power = int(tokens[i + 1][1])
                    i += 2
                exps[index[val]] += power
            else:
                expect_fail("a coefficient or variable", i)
            seen_factor = True
            if i < len(tokens) and tokens[i][0] == 4:
                i += 1
                continue
            break
        assert seen_factor
        terms.append((tuple(exps), sign * coeff))
    return terms


def _lt(f: dict, key):
    m = max(f, key=key)
    return m, f[m]


def _reduce(f: dict, basis: list[dict], lts: list[tuple], key, p: int) -> dict:
    """Full normal form of f modulo basis (all polynomials monic)."""
    f = dict(f)
    rem = {}
    while f:
        m = max(f, key=key)
        c = f.pop(m)
        for g, lt in zip(basis, lts):
            if divides(lt, m):
                shift = tuple(a - b for a, b in zip(m, lt))
                for k, e in g.items():
                    if k == lt:
                        continue
                    t = tuple(a + b for a, b in zip(k, shift))
                    v = (f.get(t, 0) - c * e) % p
                    if v:
                        f[t] = v
                    else:
                        f.pop(t, None)
                break
        else:
            rem[m] = c
    return rem


def _monic(f: dict, key, p: int) -> dict:
    _, c = _lt(f, key)
    inv = pow(c, p - 2, p)
    return {m: v * inv % p for m, v in f.items()}


def _spoly(f: dict, g: dict, key, p: int) -> dict:
    (mf, cf), (mg, cg) = _lt(f, key), _lt(g, key)
    lcm = tuple(map(max, mf, mg))
    sf = tuple(a - b for a, b in zip(lcm, mf))
    sg = tuple(a - b for a, b in zip(lcm, mg))
    out: dict = {}
    for m, c in f.items():
        t = tuple(a + b for a, b in zip(m, sf))
        out[t] = (out.get(t, 0) + c * cg) % p
    for m, c in g.items():
        t = tuple(a + b for a, b in zip(m, sg))
        out[t] = (out.get(t, 0) - c * cf) % p
    return {m: c for m, c in out.items() if c}


def _buchberger(gens: list[dict], order: str, p: int, max_degree: int | None = None) -> list[dict]:
    key = order_key(order)
    basis: list[dict] = []
    lts: list[tuple] = []
    queue: list = []
    counter = 0

    def add(h: dict):
        nonlocal counter
        h = _monic(h, key, p)
        lt = _lt(h, key)[0]
        idx = len(basis)
        basis.append(h)
        lts.append(lt)
        for i in range(idx):
            lcm = tuple(map(max, lts[i], lt))
            deg = sum(lcm)
            if max_degree is not None and deg > max_degree:
                continue
            heapq.heappush(queue, (deg, counter, i, idx))
            counter += 1

    for g in sorted((g for g in gens if g), key=lambda g: sum(next(iter(g)))):
        h = _reduce(g, basis, lts, key, p)
        if h:
            add(h)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        a, b = lts[i], lts[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading terms
        h = _reduce(_spoly(basis[i], basis[j], key, p), basis, lts, key, p)
        if h:
            add(h)
    return _autoreduce(basis, key, p)


def _autoreduce(basis: list[dict], key, p: int) -> list[dict]:
    lts = [_lt(g, key)[0] for g in basis]
    keep = []
    for i, (g, lt) in enumerate(zip(basis, lts)):
        redundant = False
        for j, other in enumerate(lts):
            if j != i and divides(other, lt) and (other != lt or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        olts = [_lt(h, key)[0] for h in others]
        lt, c = _lt(g, key)
        tail = {m: v for m, v in g.items() if m != lt}
        red = _reduce(tail, others, olts, key, p)
        red[lt] = c
        out.append(_monic(red, key, p))
    out.sort(key=lambda g: key(_lt(g, key)[0]))
    return out


class PolynomialIdeal:
    """Ideal of homogeneous polynomials with a per-order Groebner basis cache."""

    def __init__(self, ring: Ring, field: PrimeField, gens: Iterable[Polynomial]):
        self.ring = ring
        self.field = field
        kept = []
        for g in gens:
            if g.ring != ring or g.field != field:
                raise ValueError("generator from a different ring or field")
            if g.is_zero():
                continue
            if g.degree == 0:
                raise ValueError("degree-0 generators are not allowed")
            kept.append(g)
        self.gens = tuple(kept)
        self._gb: dict = {}

    @classmethod
    def parse(cls, texts: Iterable[str], ring: Ring, field: PrimeField) -> "PolynomialIdeal":
        return cls(ring, field, [Polynomial.parse(t, ring, field) for t in texts])

    @property
    def n(self) -> int:
        return self.ring.n

    def groebner(self, order: str = "degrevlex", max_degree: int | None = None) -> list[Polynomial]:
        return buchberger(self, order, max_degree)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.gens) + ">"


def _to_poly(ring, field, d: dict) -> Polynomial:
    return Polynomial(ring, field, d)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: str = "degrevlex") -> Polynomial:
    """Remainder of f under division by G (leading terms taken in ``order``)."""
    if not G:
        raise ValueError("empty divisor list")
    for g in G:
        f._check(g)
    key = order_key(order)
    p = f.field.p
    monics = [_monic(g.terms, key, p) for g in G if g.terms]
    lts = [_lt(g, key)[0] for g in monics]
    return _to_poly(f.ring, f.field, _reduce(f.terms, monics, lts, key, p))


def s_polynomial(f: Polynomial, g: Polynomial, order: str = "degrevlex") -> Polynomial:
    """lc(g) * (L/lt(f)) * f - lc(f) * (L/lt(g)) * g with L the lcm of leading monomials."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    return _to_poly(f.ring, f.field, _spoly(f.terms, g.terms, order_key(order), f.field.p))


def buchberger(I: PolynomialIdeal, order: str = "degrevlex", max_degree: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis (monic, sorted by leading term ascending).

    Pairs are processed lowest lcm degree first, ties by creation order.
    With ``max_degree`` set, pairs above it are skipped: the result is then a
    basis only through that degree, which suffices for Hilbert functions up
    to it.
    """
    cache_key = (order, max_degree)
    if cache_key not in I._gb:
        order_key(order)
        basis = _buchberger([g.terms for g in I.gens], order, I.field.p, max_degree)
        I._gb[cache_key] = [_to_poly(I.ring, I.field, g) for g in basis]
    return list(I._gb[cache_key])


def is_groebner(G: Sequence[Polynomial], order: str = "degrevlex") -> bool:
    """Every S-polynomial of a pair in G reduces to zero modulo G."""
    return all(normal_form(s_polynomial(f, g, order), G, order).is_zero() for f, g in combinations(G, 2))


def is_autoreduced(G: Sequence[Polynomial], order: str = "degrevlex") -> bool:
    lts = [g.leading(order)[0] for g in G]
    for i, g in enumerate(G):
        others = lts[:i] + lts[i + 1:]
        if any(divides(o, m) for m in g.terms for o in others):
            return False
    return True


def initial_ideal(I: PolynomialIdeal, order: str = "degrevlex", max_degree: int | None = None) -> MonomialIdeal:
    return MonomialIdeal(I.ring, [g.leading(order)[0] for g in buchberger(I, order, max_degree)])


def hilbert_function_poly(I: PolynomialIdeal, bound: int, order: str = "degrevlex",
                          budget: int = DEFAULT_SLICE_BUDGET) -> HilbertFunction:
    """H(S/I, d) for d <= bound via the initial ideal of a degree-truncated basis."""
    return hilbert_function(initial_ideal(I, order, bound), bound, budget)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [v * inv % p for v in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            c = rows[i][col] % p
            if c:
                rows[i] = [(v - c * w) % p for v, w in zip(rows[i], prow)]
        rank += 1
    return rank


def hf_rank_oracle(I: PolynomialIdeal, d: int, budget: int = DEFAULT_SLICE_BUDGET) -> int:
    """H(S/I, d) as dim S_d minus the rank of all degree-d multiples of the generators."""
    cols = monomials_of_degree(I.n, d)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in I.gens:
        e = d - g.degree
        if e < 0:
            continue
        for u in monomials_of_degree(I.n, e):
            row = [0] * len(cols)
            for m, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, u))]] = c
            rows.append(row)
            if len(rows) * len(cols) > budget:
                raise SliceBudgetError(f"degree {d} matrix exceeds budget {budget}")
    return len(cols) - _rank_mod_p(rows, I.field.p)


@dataclass(frozen=True)
class RegularityCertificate:
    """Outcome of the regular-sequence test.

    ``witness_degree`` is the first degree at which the Hilbert function of
    the quotient exceeds the complete-intersection one (None if regular).
    """

    regular: bool
    witness_degree: int | None
    degrees: tuple[int, ...]
    by_hilbert: bool = field(default=True)
    by_dimension: bool = field(default=True)

    def __bool__(self) -> bool:
        return self.regular


class CertifierDisagreement(RuntimeError):
    """The Hilbert-function and dimension certifiers returned different answers."""


def _check_sequence(fs: Sequence[Polynomial]) -> None:
    if not fs:
        raise ValueError("empty sequence")
    for f in fs:
        if f.is_zero():
            raise ValueError("zero form in sequence")
        fs[0]._check(f)
    if len(fs) > fs[0].ring.n:
        raise ValueError(f"{len(fs)} forms in {fs[0].ring.n} variables")


def regular_by_hilbert(fs: Sequence[Polynomial], order: str = "degrevlex") -> tuple[bool, int | None]:
    """Compare H(S/<fs>) with the complete-intersection values up to sum of degrees."""
    _check_sequence(fs)
    ring, fld = fs[0].ring, fs[0].field
    degrees = sorted(f.degree for f in fs)
    top = sum(degrees)
    actual = hilbert_function_poly(PolynomialIdeal(ring, fld, fs), top, order)
    expected = ci_hilbert(degrees, ring.n, top)
    for d in range(top + 1):
        if actual[d] != expected[d]:
            return False, d
    return True, None


def krull_dimension(J: MonomialIdeal) -> int:
    """dim S/J = n minus the smallest set of variables meeting every generator's support."""
    n = J.n
    if J.is_zero():
        return n
    if J.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in J.gens]
    for size in range(n + 1):
        for cover in combinations(range(n), size):
            c = set(cover)
            if all(s & c for s in supports):
                return n - size
    return 0


def regular_by_dimension(fs: Sequence[Polynomial], order: str = "degrevlex") -> bool:
    """Homogeneous forms are regular iff the quotient has dimension n - r."""
    _check_sequence(fs)
    ring, fld = fs[0].ring, fs[0].field
    return krull_dimension(initial_ideal(PolynomialIdeal(ring, fld, fs), order)) == ring.n - len(fs)


def is_regular_sequence(fs: Sequence[Polynomial], order: str = "degrevlex") -> RegularityCertificate:
    """Regular-sequence test; both certifiers must agree."""
    fs = list(fs)
    _check_sequence(fs)
    by_hf, witness = regular_by_hilbert(fs, order)
    by_dim = regular_by_dimension(fs, order)
    if by_hf != by_dim:
        raise CertifierDisagreement(
            f"Hilbert-function certifier says {by_hf}, dimension certifier says {by_dim}")
    return RegularityCertificate(by_hf, witness, tuple(f.degree for f in fs), by_hf, by_dim)


def random_form(ring: Ring, field: PrimeField, degree: int, rng: random.Random,
                density: float = 1.0) -> Polynomial:
    """Random nonzero form: each monomial kept with probability ``density``,
    coefficients uniform on the nonzero residues."""
    mons = monomials_of_degree(ring.n, degree)
    while True:
        terms = {m: rng.randrange(1, field.p) for m in mons if rng.random() < density}
        if terms:
            return Polynomial(ring, field, terms)


def random_regular_sequence(n: int, a: Sequence[int], field: PrimeField, seed, max_attempts: int = 50,
                            ring: Ring | None = None) -> list[Polynomial]:
    """Dense random forms of degrees ``a`` that pass is_regular_sequence.

    Retries with fresh randomness; raises RuntimeError after ``max_attempts``.
    """
    ring = ring or Ring.standard(n)
    rng = random.Random(seed)
    for _ in range(max_attempts):
        fs = [random_form(ring, field, int(e), rng) for e in a]
        if is_regular_sequence(fs):
            return fs
    raise RuntimeError(f"no regular sequence of degrees {tuple(a)} over {field} in {max_attempts} attempts; "
                       "try a larger prime")


def random_containing_ideal(fs: Sequence[Polynomial], extra: Sequence[int], field: PrimeField, seed,
                            density: float = 0.5) -> PolynomialIdeal:
    """<fs> plus random forms of the degrees in ``extra``."""
    if not fs:
        raise ValueError("need at least one form")
    ring = fs[0].ring
    rng = random.Random(seed)
    gens = list(fs) + [random_form(ring, field, int(e), rng, density) for e in extra]
    return PolynomialIdeal(ring, field, gens)
