"""Acceptance suite: ten end-to-end criteria with pinned sizes and time limits.

Each test records a one-line verdict in RESULTS; conftest.py prints them in
the terminal summary, and running this file directly prints them as well.
"""

import time

import pytest

from eghkit.campaign import (
    cl_minimality_search,
    groebner_instance,
    liaison_case,
    regularity_instance,
    run_parallel,
    slice_instance,
    verify_instance,
)
from eghkit.lpp import is_lpp, macaulay_growth, powers_plus_lex_with_hf, refined_bound
from eghkit.mideal import MonomialIdeal, hilbert_function
from eghkit.monom import Ring

pytestmark = pytest.mark.acceptance

RESULTS: dict[int, str] = {}
SEED = 20240
SLICE_INSTANCES = 200
VERIFY_TRIALS = 500
GROEBNER_INSTANCES = 200
REGULARITY_INSTANCES = 200


def _record(number, title, ok, elapsed, limit, detail=""):
    verdict = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"[{verdict}] criterion {number:2d}: {title} ({elapsed:.2f}s, limit {limit:g}s)"
    RESULTS[number] = line + (f" {detail}" if detail else "")
    print(RESULTS[number])
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.2f}s"


@pytest.fixture(scope="module")
def slice_runs():
    start = time.perf_counter()
    runs = [slice_instance(SEED, i) for i in range(SLICE_INSTANCES)]
    return runs, time.perf_counter() - start


def test_criterion_01_weak_lpp_example():
    start = time.perf_counter()
    ring = Ring.standard(2)
    I = MonomialIdeal.parse("<x^2, x*y, y^4>", ring)
    weak = is_lpp(I, (2, 3), strict=False)
    h = hilbert_function(I, 4).values
    ok = weak and h == (1, 2, 1, 1, 0)
    _record(1, "<x^2, x*y, y^4> is weakly LPP for (2,3), HF (1,2,1,1,0)", ok,
            time.perf_counter() - start, 1, f"weak={weak} hf={h}")


def test_criterion_02_no_powers_plus_lex_ideal():
    start = time.perf_counter()
    ring = Ring(("y", "x"))
    found = powers_plus_lex_with_hf(ring, (3, 2), (1, 2, 1, 1, 0))
    _record(2, "no <y^3, x^2> + lex(y > x) ideal has HF (1,2,1,1,0)", found == [],
            time.perf_counter() - start, 1, f"found={[str(J) for J in found]}")


def test_criterion_03_clements_lindstrom_minimality():
    start = time.perf_counter()
    cases = cl_minimality_search(3, 3, 3)
    subsets = sum(c.checked for c in cases)
    bad = sum(c.violations for c in cases)
    _record(3, f"shadow minimality over {subsets} subsets (n,a_i,d <= 3)", bad == 0 and subsets > 0,
            time.perf_counter() - start, 60, f"violations={bad}")


def test_criterion_04_liaison_identity():
    start = time.perf_counter()
    cases = [liaison_case(a) for a in ((2, 2), (2, 3), (3, 3))]
    ideals = sum(c.checked for c in cases)
    bad = sum(c.violations for c in cases)
    _record(4, f"liaison identity on all {ideals} ideals, n=2", bad == 0 and ideals > 0,
            time.perf_counter() - start, 30, f"violations={bad}")


def test_criterion_05_slice_construction(slice_runs):
    runs, elapsed = slice_runs
    bad = [r["index"] for r in runs if not (r["hf_equal"] and r["powers"])]
    _record(5, f"slice construction on {len(runs)} random ideals", not bad and len(runs) >= 200,
            elapsed, 60, f"failing={bad[:10]}")


def test_criterion_06_decomposition_identity(slice_runs):
    start = time.perf_counter()
    runs, _ = slice_runs
    bad = [r["index"] for r in runs if not r["identity"]]
    _record(6, f"slice decomposition identity on {len(runs)} instances, t <= s+2", not bad,
            time.perf_counter() - start, 60, f"failing={bad[:10]}")


def test_criterion_07_randomized_growth_bound():
    start = time.perf_counter()
    items = [(3, (2, 3, 5), 101, SEED, i) for i in range(VERIFY_TRIALS)]
    results = run_parallel(verify_instance, items, jobs=1)
    bad = [r["index"] for r in results if r["failing"]]
    _record(7, f"growth bound on {len(results)} ideals containing a (2,3,5) regular sequence over gf(101)",
            not bad and len(results) == VERIFY_TRIALS, time.perf_counter() - start, 600, f"failing={bad[:10]}")


def test_criterion_08_refined_bound_strict():
    start = time.perf_counter()
    refined = refined_bound(3, (2, 2), 1, 3)
    classical = macaulay_growth(3, 1, 3)
    _record(8, f"refined bound {refined} < Macaulay bound {classical}", refined == 4 and classical == 6,
            time.perf_counter() - start, 1)


def test_criterion_09_groebner_correctness():
    start = time.perf_counter()
    runs = [groebner_instance(SEED, i) for i in range(GROEBNER_INSTANCES)]
    bad = [r["index"] for r in runs if not (r["agree"] and r["groebner"])]
    _record(9, f"HF vs rank oracle and S-pair reduction on {len(runs)} ideals", not bad,
            time.perf_counter() - start, 300, f"failing={bad[:10]}")


def test_criterion_10_regularity_certifiers():
    start = time.perf_counter()
    regular = [regularity_instance(SEED, i, False) for i in range(REGULARITY_INSTANCES)]
    perturbed = [regularity_instance(SEED, i, True) for i in range(REGULARITY_INSTANCES)]
    runs = regular + perturbed
    disagree = [(r["perturbed"], r["index"]) for r in runs if not (r["agree"] and r["permutation_invariant"])]
    wrong = [r["index"] for r in regular if not r["regular"]] + [r["index"] for r in perturbed if r["regular"]]
    _record(10, f"certifiers agree on {len(regular)} regular + {len(perturbed)} perturbed sequences",
            not disagree and not wrong, time.perf_counter() - start, 600,
            f"disagreements={disagree[:10]} misclassified={wrong[:10]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
