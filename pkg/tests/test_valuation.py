import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind.lexgroup import IsolatedSubgroup, LexVector
from dedekind.orders import Chain, Cut, cuts, phi1, phi2
from dedekind.valuation import (
    INFINITY,
    DomainError,
    FieldElement,
    HahnPoly,
    PrimeIdeal,
    SampleConfig,
    axioms_check,
    in_t_prime,
    in_valuation_ring,
    mu,
    principality_check,
    psi,
    psi_predicate,
    random_ring_element,
    spectrum,
    spectrum_as_cut_space,
    subgroup_of_cut,
    valuation,
)
from dedekind.lexgroup import IncompatibleParents

T = Chain(("a", "b", "c"))


def mono(*exp, coef=1):
    return FieldElement.monomial(T, exp, coef)


exps = st.tuples(*[st.integers(-3, 3)] * 3)
coefs = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)
polys = st.lists(st.tuples(exps, coefs), min_size=1, max_size=4).map(lambda ts: HahnPoly.build(T, ts))
nonzero_polys = polys.filter(lambda p: not p.is_zero())
elements = st.tuples(polys, nonzero_polys).map(lambda nd: FieldElement(*nd))


def product_oracle(p, q):
    acc = {}
    for e1, c1 in p.terms:
        for e2, c2 in q.terms:
            e = tuple(a + b for a, b in zip(e1, e2))
            acc[e] = acc.get(e, 0) + c1 * c2
    return {e: c for e, c in acc.items() if c}


# polynomial arithmetic


def test_monomial_product():
    a, b = HahnPoly.monomial(T, (1, 2, 0)), HahnPoly.monomial(T, (0, -1, 3))
    assert (a * b) == HahnPoly.monomial(T, (1, 1, 3))


def test_additive_inverse():
    p = HahnPoly.build(T, [((1, 0, 0), 2), ((0, 1, 0), Fraction(-1, 3))])
    assert (p + (-p)).is_zero()


def test_distribution_example():
    al, be, ga = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    lhs = (HahnPoly.monomial(T, al) + HahnPoly.monomial(T, be)) * HahnPoly.monomial(T, ga)
    assert dict(lhs.terms) == {(1, 0, 1): 1, (0, 1, 1): 1}


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert dict((p * q).terms) == product_oracle(p, q)
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    if not p.is_zero() and not q.is_zero():
        assert not (p * q).is_zero()
        assert (p * q).lowest() == tuple(a + b for a, b in zip(p.lowest(), q.lowest()))


def test_mismatched_parents():
    with pytest.raises(IncompatibleParents):
        HahnPoly.one(T) + HahnPoly.one(Chain(("a",)))


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        FieldElement(HahnPoly.one(T), HahnPoly(T))


# valuation


def test_valuation_examples():
    assert valuation(mono(0, 1, 0)) == LexVector(T, (0, 1, 0))
    s = mono(1, 0, 0) + mono(0, 1, 0)
    assert valuation(s) == LexVector(T, (0, 1, 0))
    assert valuation(FieldElement.zero(T)) is INFINITY


@given(elements, elements)
def test_axioms_on_generated_pairs(x, y):
    vx, vy = valuation(x), valuation(y)
    if x.is_zero() or y.is_zero():
        assert valuation(x * y) is INFINITY
        return
    assert valuation(x * y) == vx + vy
    s = x + y
    if not s.is_zero():
        lo = min(vx.coords, vy.coords)
        assert valuation(s).coords >= lo
        if vx != vy:
            assert valuation(s).coords == lo


@given(elements, nonzero_polys)
def test_representative_independence(x, r):
    other = FieldElement(x.num * r, x.den * r)
    assert other == x
    assert valuation(other) == valuation(x)


def test_axioms_check_small():
    for name, c in axioms_check(Chain.of_size(2), samples=150).items():
        assert c, name


# membership


def test_membership_examples():
    e = mono(0, 1, 0)
    assert in_t_prime(e, "b") and not in_t_prime(e, "a") and in_t_prime(e, "c")
    one = FieldElement.one(T)
    assert in_valuation_ring(one) and not any(in_t_prime(one, t) for t in T)
    q = mono(0, 1, 0) / mono(1, 0, 0)
    assert valuation(q) == LexVector(T, (-1, 1, 0)) and not in_valuation_ring(q)
    with pytest.raises(DomainError):
        in_t_prime(q, "a")


def test_zero_in_every_prime():
    z = FieldElement.zero(T)
    assert all(z in mu(c) for c in cuts(T))


# psi and mu


def test_psi_examples():
    rng = random.Random(3)
    ring = [random_ring_element(T, rng) for _ in range(300)] + [mono(0, 1, 0), mono(1, 0, 0), mono(0, 0, 2)]
    zero_ideal = psi_predicate(IsolatedSubgroup.whole(T))
    assert not any(zero_ideal(a) for a in ring)
    maximal = psi_predicate(IsolatedSubgroup.zero(T))
    assert all(maximal(a) == (valuation(a).coords > (0, 0, 0)) for a in ring)
    assert all(maximal(a) == in_t_prime(a, "c") for a in ring)
    pb = psi_predicate(IsolatedSubgroup.h(T, "b"))
    assert all(pb(a) == in_t_prime(a, "a") for a in ring)


def test_mu_routes():
    for c in cuts(T):
        assert mu(c) == psi(subgroup_of_cut(c))
    for t in T:
        p = mu(phi1(T, t))
        assert p.name() == f"P_{t}"
    # phi2(t) lands one step lower: psi(H_t)
    assert mu(phi2(T, "b")) == mu(phi1(T, "a"))
    assert mu(Cut(T, 2)).name() == "P_b"


# spectrum


def test_spectrum_three_chain():
    model, report = spectrum(T, samples=120)
    assert [p.name() for p in model.primes] == ["0", "P_a", "P_b", "P_c"]
    assert model.primes[-1].is_maximal() and report.ok
    assert set(model.pred_points) == {mu(phi2(T, t)) for t in T}


def test_spectrum_of_field():
    model, report = spectrum(Chain(()), samples=20)
    assert len(model.primes) == 1 and report.ok


@pytest.mark.parametrize("n, succ, cuts_", [(3, 3, 4), (1, 1, 2), (0, 0, 1)])
def test_spectrum_is_a_cut_space(n, succ, cuts_):
    model, _ = spectrum(Chain.of_size(n), samples=40)
    r = spectrum_as_cut_space(model, samples=60)
    assert r.ok and r.succ_points == succ and r.cut_points == cuts_


def test_spectrum_json_lists_generators():
    doc = spectrum(T, samples=10)[0].to_json()
    rows = doc["primes"]
    assert rows[2]["generator_exponent"] == {"b": 1}
    assert [r["principal"] for r in rows[1:]] == [False, False, True]


# principal generators


def test_principality_examples():
    b = LexVector.unit(T, "b")
    for exp, expected in [((0, 2, 0), True), ((1, 0, 0), True), ((0, 0, 1), False)]:
        e = mono(*exp)
        assert (valuation(e).coords >= b.coords) == expected
        assert in_t_prime(e, "b") == expected


def test_top_prime_is_principal():
    r = principality_check(T, "c", samples=300)
    assert r.is_max and r.equals_monomial_ideal and r.equals_radical


def test_lower_primes_equal_radical_of_monomial_ideal():
    for t in ("a", "b"):
        r = principality_check(T, t, samples=300)
        assert r.equals_radical
        # x^(e_t - 4 e_s) for s just above t is in P_t but not a multiple of x^{e_t}
        assert not r.equals_monomial_ideal


def test_field_element_json_round_trip():
    x = FieldElement(HahnPoly.build(T, [((0, 1, 0), Fraction(3, 2))]), HahnPoly.build(T, [((0, 0, 0), 1), ((1, 0, 0), -1)]))
    doc = x.to_json()
    assert doc["num"][0]["coef"] == "3/2"
    assert FieldElement.from_json(T, doc) == x
