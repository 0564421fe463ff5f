import itertools
import random

import pytest
from hypothesis import given, strategies as st

from dedekind.lexgroup import (
    DegenerateInput,
    IncompatibleParents,
    IsolatedSubgroup,
    LexVector,
    box,
    box_elements,
    check_complete,
    check_isolated,
    check_smallest,
    check_tags,
    discrete_quotient_check,
    enumerate_isolated,
    final_set_decomposition,
    isolated_bijection,
    lex_compare,
    smallest_isolated_containing,
)
from dedekind.orders import Chain

T = Chain(("a", "b", "c"))


def V(*coords):
    return LexVector(T, coords)


vectors = st.tuples(*[st.integers(-5, 5)] * 3).map(lambda c: LexVector(T, c))


def first_difference_oracle(f, g):
    for t in T:
        if f[t] != g[t]:
            return -1 if f[t] < g[t] else 1
    return 0


# comparison


def test_compare_examples():
    assert lex_compare(V(0, 2, -1), V(0, 1, 5)) == 1
    assert lex_compare(V(1, 0, 0), V(0, 9, 9)) == 1
    assert lex_compare(V(1, 2, 3), V(1, 2, 3)) == 0


def test_compare_mismatched_parents():
    with pytest.raises(IncompatibleParents):
        lex_compare(V(0, 0, 0), LexVector(Chain(("a",)), (0,)))


@given(vectors, vectors, vectors)
def test_total_order_laws(f, g, h):
    assert lex_compare(f, g) == first_difference_oracle(f, g)
    assert lex_compare(f, g) == -lex_compare(g, f)
    if lex_compare(f, g) <= 0 and lex_compare(g, h) <= 0:
        assert lex_compare(f, h) <= 0
    if lex_compare(f, g) < 0:
        assert lex_compare(f + h, g + h) < 0


def test_sorted_box_is_consistent():
    elems = sorted(box(T, 1))
    assert all(lex_compare(x, y) < 0 for x, y in zip(elems, elems[1:]))


def test_json_is_zero_suppressed():
    assert V(0, 2, -1).to_json() == {"b": 2, "c": -1}
    assert LexVector.from_mapping(T, {"b": 2, "c": -1}) == V(0, 2, -1)


# smallest isolated subgroups


def test_smallest_examples():
    assert smallest_isolated_containing(V(0, 2, -1)) == IsolatedSubgroup.h(T, "b")
    assert smallest_isolated_containing(V(0, 2, -1)).boundary.right == ("b", "c")
    assert smallest_isolated_containing(V(5, 0, 0)) == IsolatedSubgroup.whole(T)
    assert smallest_isolated_containing(V(0, 0, -3)) == IsolatedSubgroup.h(T, "c")
    with pytest.raises(DegenerateInput):
        smallest_isolated_containing(V(0, 0, 0))


@given(vectors.filter(lambda f: not f.is_zero()))
def test_smallest_contains_f_and_is_least(f):
    h = smallest_isolated_containing(f)
    assert f in h
    for tg in enumerate_isolated(T):
        if f in tg.subgroup:
            assert h <= tg.subgroup


def test_check_smallest_on_box():
    elems = list(box(T, 2))
    for f in [V(0, 1, 0), V(0, 0, -2), V(1, -2, 2)]:
        assert check_smallest(f, elems)


def test_isolated_subgroup_closure_properties():
    rng = random.Random(0)
    elems = list(box(T, 3))
    for tg in enumerate_isolated(T):
        assert check_isolated(tg.subgroup, elems, 300, rng)


def test_non_convex_subset_detected():
    # 2ℤ x ℤ x ℤ is a subgroup but not convex: (1,0,0) lies between 0 and (2,0,0)
    class Even(IsolatedSubgroup):
        def __contains__(self, f):
            return f.coords[0] % 2 == 0

    fake = Even(T, IsolatedSubgroup.whole(T).boundary)
    rng = random.Random(1)
    assert not check_isolated(fake, list(box(T, 2)), 2000, rng)


# enumeration and tags


def test_enumeration_three_chain():
    tags = enumerate_isolated(T)
    names = [tg.subgroup.name() for tg in tags]
    assert names == ["{0}", "H_c", "H_b", "H_a"]
    assert [tg.in_is for tg in tags] == [False, True, True, True]
    assert [tg.in_ip for tg in tags] == [True, True, True, False]
    assert tags[0].subgroup == IsolatedSubgroup.dh(T, "c")
    assert tags[1].subgroup == IsolatedSubgroup.dh(T, "b")
    assert tags[2].subgroup == IsolatedSubgroup.dh(T, "a")


def test_enumeration_small_chains():
    (only,) = enumerate_isolated(Chain(()))
    assert only.subgroup.is_zero() and only.subgroup == IsolatedSubgroup.whole(Chain(()))
    assert len(enumerate_isolated(Chain(("a",)))) == 2


@pytest.mark.parametrize("n", range(0, 7))
def test_tags_and_completeness(n):
    chain = Chain.of_size(n)
    elems = box_elements(chain, radius=2, exhaustive_up_to=4, samples=600)
    assert check_tags(chain, elems)
    assert check_complete(chain, elems)


def test_containment_is_reverse_of_boundary():
    for a, b in itertools.product(enumerate_isolated(T), repeat=2):
        ga, gb = a.subgroup, b.subgroup
        assert (ga <= gb) == (set(ga.boundary.right) <= set(gb.boundary.right))


# bijection t -> H_t


def test_bijection_three_chain():
    r = isolated_bijection(T, list(box(T, 2)))
    assert r.ok
    assert r.mapping["a"] == IsolatedSubgroup.whole(T)
    assert r.mapping["b"] < r.mapping["a"] and r.mapping["c"] < r.mapping["b"]


def test_bijection_singleton():
    one = Chain(("a",))
    assert isolated_bijection(one).mapping["a"] == IsolatedSubgroup.whole(one)


# final-set decomposition


def test_final_set_examples():
    j, ok = final_set_decomposition(IsolatedSubgroup.h(T, "b"), box(T, 2))
    assert j == ("b", "c") and ok
    assert final_set_decomposition(IsolatedSubgroup.whole(T))[0] == ("a", "b", "c")
    with pytest.raises(DegenerateInput):
        final_set_decomposition(IsolatedSubgroup.zero(T))


# ℤ quotients


def test_quotient_examples():
    f = V(0, 2, -1)
    assert f["b"] == 2 and V(0, 0, 7)["b"] == 0
    r = discrete_quotient_check(T, "b")
    assert r.ok and r.lower == IsolatedSubgroup.h(T, "c")
    top = discrete_quotient_check(T, "c")
    assert top.ok and top.lower.is_zero()


def test_quotient_unknown_element():
    with pytest.raises(KeyError):
        discrete_quotient_check(T, "z")
