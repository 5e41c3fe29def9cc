import random
from itertools import permutations

import pytest

from eghkit.mideal import MonomialIdeal, SliceBudgetError, ci_hilbert
from eghkit.monom import Ring
from eghkit.polyfp import (
    CertifierDisagreement,
    Polynomial,
    PolynomialIdeal,
    PrimeField,
    buchberger,
    hf_rank_oracle,
    hilbert_function_poly,
    initial_ideal,
    is_autoreduced,
    is_groebner,
    is_regular_sequence,
    krull_dimension,
    normal_form,
    random_containing_ideal,
    random_form,
    random_regular_sequence,
    regular_by_dimension,
    regular_by_hilbert,
    s_polynomial,
)

import oracles

R3 = Ring.standard(3)
F7, F101 = PrimeField(7), PrimeField(101)


def P(text, field=F101, ring=R3):
    return Polynomial.parse(text, ring, field)


def test_prime_field():
    assert F7.inv(3) == 5
    for bad in (1, 4, 65537, 100):
        with pytest.raises(ValueError):
            PrimeField(bad)
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)


def test_polynomial_text_and_arithmetic():
    assert str(P("x+y") * P("x-y")) == "x^2 - y^2"
    assert str(P("-x")) == "-x"
    assert str(P("3*x - 3*x")) == "0"
    assert P("x^2 + 100*y^2") == P("x^2 - y^2")
    with pytest.raises(ValueError):
        P("x^2 + y")
    with pytest.raises(ValueError):
        P("x") + P("x", F7)


def test_examples_of_reduction():
    I = PolynomialIdeal.parse(["x^2 - y^2", "x*y"], R3, F101)
    G = buchberger(I)
    assert [str(g) for g in G] == ["x*y", "x^2 - y^2", "y^3"]
    assert str(s_polynomial(P("x^2 - y^2"), P("x*y"))) == "-y^3"
    assert normal_form(P("x^3"), G).is_zero()
    assert str(normal_form(P("x^2 + z^2"), G)) == "y^2 + z^2"
    assert initial_ideal(I) == MonomialIdeal.parse("<x^2, x*y, y^3>", R3)
    assert is_groebner(G) and is_autoreduced(G)
    assert not is_groebner(I.gens)


def test_hilbert_function_example():
    I = PolynomialIdeal.parse(["x^2 - y^2", "x*y"], R3, F101)
    assert hilbert_function_poly(I, 5).values == (1, 3, 4, 4, 4, 4)
    assert [hf_rank_oracle(I, d) for d in range(6)] == [1, 3, 4, 4, 4, 4]


def test_lex_and_degrevlex_bases_differ_but_hf_agrees():
    I = PolynomialIdeal.parse(["x*z - y^2", "x*w - y*z"], Ring(("x", "y", "z", "w")), F101)
    lex = initial_ideal(I, "lex")
    drl = initial_ideal(I, "degrevlex")
    assert lex != drl
    assert hilbert_function_poly(I, 6, "lex") == hilbert_function_poly(I, 6, "degrevlex")


def _random_ideal(rng):
    n = rng.randint(1, 3)
    ring = Ring.standard(n)
    fld = PrimeField(rng.choice((2, 3, 7)))
    gens = [random_form(ring, fld, rng.randint(1, 3), rng, 0.6) for _ in range(rng.randint(1, 3))]
    return PolynomialIdeal(ring, fld, gens)


def test_hf_matches_independent_rank_computation():
    rng = random.Random(3)
    for _ in range(60):
        I = _random_ideal(rng)
        h = hilbert_function_poly(I, 5)
        h_lex = hilbert_function_poly(I, 5, "lex")
        for d in range(6):
            expected = oracles.poly_hf([g.terms for g in I.gens], I.n, d, I.field.p)
            assert h[d] == h_lex[d] == hf_rank_oracle(I, d) == expected


def test_bases_are_reduced_and_stable():
    rng = random.Random(8)
    for _ in range(40):
        I = _random_ideal(rng)
        for order in ("degrevlex", "lex"):
            G = buchberger(I, order)
            assert is_groebner(G, order)
            assert is_autoreduced(G, order)
            assert all(g.leading(order)[1] == 1 for g in G)
            assert buchberger(PolynomialIdeal(I.ring, I.field, G), order) == G
            shuffled = list(I.gens)
            rng.shuffle(shuffled)
            assert buchberger(PolynomialIdeal(I.ring, I.field, shuffled), order) == G


def test_truncated_basis_suffices_below_its_degree():
    rng = random.Random(21)
    for _ in range(20):
        I = _random_ideal(rng)
        full = initial_ideal(I)
        part = initial_ideal(I, max_degree=3)
        for d in range(4):
            assert {m for m in oracles.all_monomials(I.n, d) if m in full} == \
                   {m for m in oracles.all_monomials(I.n, d) if m in part}


def test_krull_dimension():
    assert krull_dimension(MonomialIdeal.parse("<x*y, x*z>", R3)) == 2
    assert krull_dimension(MonomialIdeal.parse("<x, y*z>", R3)) == 1
    assert krull_dimension(MonomialIdeal.zero(R3)) == 3
    assert krull_dimension(MonomialIdeal.parse("<x^2, y^3, z>", R3)) == 0


def test_regularity_depends_on_characteristic():
    # in characteristic 2 both forms are divisible by x + y
    F2 = PrimeField(2)
    assert not is_regular_sequence([P("x^2 + y^2", F2), P("x*y + y^2", F2)])
    assert is_regular_sequence([P("x^2 + y^2", F7), P("x*y + y^2", F7)])


def test_regularity_examples():
    cert = is_regular_sequence([P("x*y"), P("x*z")])
    assert not cert and cert.witness_degree == 3
    assert is_regular_sequence([P("x^2"), P("y^3"), P("z^5")])
    assert regular_by_hilbert([P("x")]) == (True, None)
    assert not regular_by_dimension([P("x*y"), P("x^2")])
    with pytest.raises(ValueError):
        is_regular_sequence([])
    with pytest.raises(ValueError):
        is_regular_sequence([P("x"), P("y"), P("z"), P("x+y")])


def test_random_regular_sequences_are_symmetric_ci():
    for seed in range(12):
        a = (2, 2, 3) if seed % 2 else (1, 2, 3)
        fs = random_regular_sequence(3, a, F101, seed)
        s = sum(e - 1 for e in a)
        h = hilbert_function_poly(PolynomialIdeal(R3, F101, fs), s + 1)
        assert h == ci_hilbert(a, 3, s + 1)
        assert h[s + 1] == 0
        assert all(h[d] == h[s - d] for d in range(s + 1))
        for perm in permutations(fs):
            assert is_regular_sequence(list(perm))


def test_seeded_generation_is_deterministic():
    one = random_regular_sequence(3, (2, 3), F101, 99)
    two = random_regular_sequence(3, (2, 3), F101, 99)
    assert one == two
    I1 = random_containing_ideal(one, (2, 4), F101, 5)
    I2 = random_containing_ideal(two, (2, 4), F101, 5)
    assert I1.gens == I2.gens


def test_certifier_disagreement_type():
    assert issubclass(CertifierDisagreement, RuntimeError)


def test_rank_oracle_budget():
    I = PolynomialIdeal.parse(["x^2"], R3, F7)
    with pytest.raises(SliceBudgetError):
        hf_rank_oracle(I, 8, budget=10)


def test_listed_two_variable_examples():
    R2 = Ring.standard(2)

    def Q(text, field=F7):
        return Polynomial.parse(text, R2, field)

    assert normal_form(Q("x^2*y"), [Q("x*y")]).is_zero()
    assert normal_form(Q("x^2"), [Q("x^2 - y^2")]) == Q("y^2")
    assert normal_form(Q("y^3"), [Q("x^2")], "lex") == Q("y^3")
    assert s_polynomial(Q("x^2 - y^2"), Q("x*y")) == Q("-y^3")
    assert s_polynomial(Q("x^2 - y^2"), Q("x^2 - y^2")).is_zero()
    assert s_polynomial(Q("x^2"), Q("y^2")).is_zero()
    I = PolynomialIdeal.parse(["x^2 - y^2", "x*y"], R2, F7)
    assert set(buchberger(I)) == {Q("x^2 - y^2"), Q("x*y"), Q("y^3")}
    assert hilbert_function_poly(I, 4).values == (1, 2, 1, 0, 0)
    assert (hf_rank_oracle(I, 0), hf_rank_oracle(I, 2), hf_rank_oracle(I, 3)) == (1, 1, 0)
    assert initial_ideal(PolynomialIdeal.parse(["x + y"], R2, F7)) == MonomialIdeal.parse("<x>", R2)
    pure = PolynomialIdeal.parse(["x^2", "y^3"], R2, F7)
    assert buchberger(pure) == [Q("x^2"), Q("y^3")]
    assert hilbert_function_poly(pure, 5) == ci_hilbert((2, 3), 2, 5)
    cert = is_regular_sequence([Q("x"), Q("x^2")])
    assert not cert and cert.witness_degree == 2
    F2 = PrimeField(2)
    assert not is_regular_sequence([Q("x + y", F2), Q("x - y", F2)])
    assert is_regular_sequence([Q("x + y"), Q("x - y")])


def test_listed_generation_examples():
    (f,) = random_regular_sequence(1, (2,), F101, 3)
    assert set(f.terms) == {(2,)}
    fs = random_regular_sequence(2, (2, 3), F101, 1)
    assert is_regular_sequence(fs)
    assert random_containing_ideal(fs, [], F101, 0).gens == tuple(fs)
