"""Seeded and exhaustive verification runs.

Every run is a list of independent instances identified by an index; an
instance draws its randomness from ``instance_seed(master, index)`` so the
results do not depend on how instances are spread over workers.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Sequence

from .egh import egh_at_degree, ideals_containing_powers, liaison_check, slice_construct, slice_hf_identity, socle_degree
from .lpp import lpp_growth
from .mideal import MonomialIdeal, contains_pure_powers, hilbert_function
from .monom import Ring, box_monomials, lex_segment, monomials_of_degree, upper_shadow
from .polyfp import (
    Polynomial,
    PolynomialIdeal,
    PrimeField,
    buchberger,
    hf_rank_oracle,
    hilbert_function_poly,
    is_autoreduced,
    is_groebner,
    random_containing_ideal,
    random_form,
    random_regular_sequence,
    regular_by_dimension,
    regular_by_hilbert,
)


def instance_seed(master: int, index: int) -> int:
    return master * 1_000_003 + index


def run_parallel(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """Map ``fn`` over ``items`` keeping input order."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(*item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star, [(fn, item) for item in items]))


def _star(packed):
    fn, item = packed
    return fn(*item)


@dataclass
class CaseResult:
    label: str
    params: dict = field(default_factory=dict)
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return len(self.failures)


# -- Clements-Lindstrom shadow minimality ---------------------------------

def degree_sequences(n: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    return [tuple(c) for c in combinations_with_replacement(range(lo, hi + 1), n)]


def cl_minimality_case(n: int, a: tuple, d: int) -> CaseResult:
    """Every subset B of degree-d box monomials: its upper shadow is at least
    that of the lex segment of the same size, and the quotient by <x^a> + <B>
    grows no faster than the lex-plus-powers bound."""
    ring = Ring.standard(n)
    box = box_monomials(n, a, d)
    powers = MonomialIdeal.pure_powers(ring, a)
    lex_shadow = [len(upper_shadow(lex_segment(n, a, d, k), a)) for k in range(len(box) + 1)]
    result = CaseResult(f"n={n} a={','.join(map(str, a))} d={d}", {"n": n, "a": list(a), "d": d})
    for size in range(len(box) + 1):
        bound = lpp_growth(a, n, d, len(box) - size)
        for B in combinations(box, size):
            result.checked += 1
            shadow = len(upper_shadow(B, a))
            h = hilbert_function(powers + MonomialIdeal(ring, B), d + 1)
            if shadow < lex_shadow[size] or h[d + 1] > bound or h[d] != len(box) - size:
                result.failures.append({"subset": [ring.format(m) for m in B], "shadow": shadow,
                                        "lex_shadow": lex_shadow[size], "h_next": h[d + 1], "bound": bound})
    return result


def cl_minimality_search(n_max: int = 3, a_max: int = 3, d_max: int = 3, jobs: int = 1) -> list[CaseResult]:
    cases = [(n, a, d) for n in range(1, n_max + 1) for a in degree_sequences(n, 2, a_max)
             for d in range(d_max + 1)]
    return run_parallel(cl_minimality_case, cases, jobs)


# -- liaison ---------------------------------------------------------------

def liaison_case(a: tuple) -> CaseResult:
    ring = Ring.standard(len(a))
    result = CaseResult(f"a={','.join(map(str, a))}", {"a": list(a)})
    for J in ideals_containing_powers(ring, a):
        result.checked += 1
        if not liaison_check(J, a):
            result.failures.append({"ideal": str(J)})
    return result


# -- slice construction ----------------------------------------------------

def random_monomial_instance(rng: random.Random) -> tuple[MonomialIdeal, tuple[int, ...]]:
    """Monomial ideal in 3 or 4 variables containing x_1^a_1, ..., x_r^a_r, r < n."""
    n = rng.choice((3, 4))
    r = rng.randint(1, n - 1)
    a = tuple(sorted(rng.randint(2, 3) for _ in range(r)))
    ring = Ring.standard(n)
    gens = [ring.var(i, e) for i, e in enumerate(a)]
    for _ in range(rng.randint(1, 4)):
        gens.append(rng.choice(monomials_of_degree(n, rng.randint(2, 4))))
    return MonomialIdeal(ring, gens), a


def slice_instance(master: int, index: int) -> dict:
    rng = random.Random(instance_seed(master, index))
    I, a = random_monomial_instance(rng)
    bound = socle_degree(a) + 2
    dec = slice_construct(I, a, bound=bound)
    K = dec.result
    hI = hilbert_function(I, bound)
    hK = hilbert_function(K, bound)
    nested = all(dec.slices[j - 1].compressed.whole <= dec.slices[j].compressed.whole
                 for j in range(1, len(dec.slices)))
    members_match = all(dec.member_by_slices(m) == (m in K)
                        for t in range(bound + 1) for m in monomials_of_degree(I.n, t))
    return {
        "index": index,
        "ideal": str(I),
        "degrees": a,
        "result": str(K),
        "N": dec.N,
        "hf_equal": hI.values == hK.values,
        "powers": contains_pure_powers(K, a),
        "nested": nested,
        "slices_match": members_match,
        "identity": slice_hf_identity(I, bound),
    }


# -- randomized EGH verification ---------------------------------------------

def verify_instance(n: int, a: tuple, p: int, master: int, index: int, order: str = "degrevlex") -> dict:
    """A random ideal containing a random regular sequence of degrees ``a``,
    checked against the lex-plus-powers growth bound at every d <= s."""
    fld = PrimeField(p)
    seed = instance_seed(master, index)
    rng = random.Random(seed)
    s = socle_degree(a)
    fs = random_regular_sequence(n, a, fld, rng.getrandbits(64))
    extra = [rng.randint(1, s) for _ in range(rng.randint(0, 3))]
    I = random_containing_ideal(fs, extra, fld, rng.getrandbits(64))
    h = hilbert_function_poly(I, s + 1, order)
    failing = []
    for d in range(s + 1):
        try:
            ok = egh_at_degree(h[d], h[d + 1], a, n, d)
        except ValueError:
            ok = False
        if not ok:
            failing.append(d)
    return {"index": index, "seed": seed, "extra": extra, "hf": h.values, "failing": failing}


# -- Groebner correctness ------------------------------------------------------

def groebner_instance(master: int, index: int, max_d: int = 6) -> dict:
    rng = random.Random(instance_seed(master, index))
    n = rng.randint(1, 3)
    fld = PrimeField(rng.choice((7, 101)))
    ring = Ring.standard(n)
    gens = [random_form(ring, fld, rng.randint(1, 4), rng, 0.5) for _ in range(rng.randint(1, 3))]
    I = PolynomialIdeal(ring, fld, gens)
    G = buchberger(I)
    h = hilbert_function_poly(I, max_d)
    oracle = [hf_rank_oracle(I, d) for d in range(max_d + 1)]
    return {
        "index": index,
        "p": fld.p,
        "ideal": str(I),
        "hf": h.values,
        "oracle": tuple(oracle),
        "agree": h.values == tuple(oracle),
        "groebner": is_groebner(G),
        "autoreduced": is_autoreduced(G),
        "idempotent": buchberger(PolynomialIdeal(ring, fld, G)) == G,
    }


# -- regular sequences ---------------------------------------------------------

def perturb(fs: Sequence[Polynomial], rng: random.Random) -> list[Polynomial]:
    """Make a sequence non-regular: either f_j becomes a multiple of f_i, or
    f_i and f_j are rebuilt with a shared linear factor (i < j)."""
    fs = list(fs)
    ring, fld = fs[0].ring, fs[0].field
    i, j = sorted(rng.sample(range(len(fs)), 2))
    di, dj = fs[i].degree, fs[j].degree
    if rng.random() < 0.5 or di < 2:
        g = random_form(ring, fld, dj - di, rng) if dj > di else Polynomial.monomial(ring, fld, ring.one(), rng.randrange(1, fld.p))
        fs[j] = g * fs[i]
    else:
        line = random_form(ring, fld, 1, rng)
        fs[i] = line * random_form(ring, fld, di - 1, rng)
        fs[j] = line * random_form(ring, fld, dj - 1, rng)
    return fs


def regularity_instance(master: int, index: int, perturbed: bool) -> dict:
    rng = random.Random(instance_seed(master, 2 * index + perturbed))
    n = rng.randint(2 if perturbed else 1, 3)
    r = rng.randint(2 if perturbed else 1, n)
    a = tuple(sorted(rng.randint(1, 3) for _ in range(r)))
    fld = PrimeField(rng.choice((7, 101)))
    fs = random_regular_sequence(n, a, fld, rng.getrandbits(64))
    if perturbed:
        fs = perturb(fs, rng)
    verdicts = []
    for perm in permutations(range(r)):
        seq = [fs[k] for k in perm]
        by_hf, _ = regular_by_hilbert(seq)
        verdicts.append((by_hf, regular_by_dimension(seq)))
    return {
        "index": index,
        "perturbed": perturbed,
        "degrees": a,
        "p": fld.p,
        "agree": all(h == dm for h, dm in verdicts),
        "permutation_invariant": len(set(verdicts)) == 1,
        "regular": verdicts[0][0],
    }

