import itertools

import pytest
from hypothesis import given, strategies as st

from dedekind.orders import (
    Chain,
    Cut,
    ElementNotFound,
    InvalidOrder,
    Poset,
    cut_plus,
    cut_poset,
    cuts,
    hasse_dot,
    is_pred_is_succ,
    k1,
    k2,
    load,
    phi1,
    phi2,
)

from conftest import chains

ABC = Chain(("a", "b", "c"))


def _diamond():
    return Poset.from_pairs(["bot", "x", "y", "top"], [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])


def _brute_covers(p):
    return {(a, b) for a in p.elements for b in p.elements if p.lt(a, b) and not any(p.lt(a, c) and p.lt(c, b) for c in p.elements)}


# cuts


def test_empty_chain_has_one_cut():
    (only,) = cuts(Chain(()))
    assert only.left == () and only.right == ()


def test_three_chain_cut_sizes():
    assert [c.size for c in cuts(ABC)] == [0, 1, 2, 3]
    assert cuts(ABC)[0].left == () and cuts(ABC)[-1].right == ()


def test_singleton_cuts():
    lo, hi = cuts(Chain(("a",)))
    assert lo.left == () and hi.left == ("a",) and lo < hi


@given(chains())
def test_cut_count_and_order(t):
    ds = cuts(t)
    assert len(ds) == len(t) + 1
    for a, b in itertools.combinations(ds, 2):
        assert (set(a.left) <= set(b.left)) == (a <= b)
        assert all(t.lt(x, y) for x in a.left for y in a.right)


def test_cut_size_out_of_range():
    with pytest.raises(ValueError):
        Cut(ABC, 4)


# phi1 / phi2


def test_phi_examples():
    assert phi1(ABC, "b").left == ("a", "b")
    assert phi2(ABC, "b").left == ("a",)
    one = Chain(("a",))
    assert phi1(one, "a").left == ("a",) and phi2(one, "a").left == ()


def test_phi_unknown_label():
    with pytest.raises(ElementNotFound):
        phi1(ABC, "z")
    with pytest.raises(ElementNotFound):
        phi2(ABC, "z")


@given(chains(max_size=7))
def test_phi_strictly_monotone_and_adjacent(t):
    for x, y in itertools.combinations(t.labels, 2):
        assert phi1(t, x) < phi1(t, y) and phi2(t, x) < phi2(t, y)
    covers = set(cut_poset(t).covers())
    for x in t:
        assert (phi2(t, x), phi1(t, x)) in covers


# cut_plus


def test_cut_plus_examples():
    assert cut_plus(ABC, []) == Cut(ABC, 0)
    assert cut_plus(ABC, ["a", "c"]).left == ("a", "b", "c")
    assert cut_plus(ABC, ["b"]) == phi1(ABC, "b")


@given(chains(), st.data())
def test_cut_plus_is_least_cut_containing(t, data):
    s = data.draw(st.sets(st.sampled_from(t.labels))) if len(t) else set()
    oracle = min(c for c in cuts(t) if s <= set(c.left))
    assert cut_plus(t, s) == oracle


@given(chains())
def test_cut_plus_recovers_cut(t):
    for c in cuts(t):
        assert cut_plus(t, c.left) == c


# IS / IP


def test_is_ip_of_cut_space_matches_phi_images():
    succ, pred = is_pred_is_succ(cut_poset(ABC))
    assert succ == [phi1(ABC, t) for t in ABC]
    assert pred == [phi2(ABC, t) for t in ABC]


def test_is_ip_antichain_empty():
    p = Poset.from_pairs(["x", "y"], [])
    assert is_pred_is_succ(p) == ([], [])


def test_is_ip_diamond():
    succ, pred = is_pred_is_succ(_diamond())
    assert set(succ) == {"x", "y", "top"} and set(pred) == {"bot", "x", "y"}
    assert set(_diamond().covers()) == _brute_covers(_diamond())


# K1 / K2


@given(chains())
def test_finite_chain_k1_k2(t):
    assert k1(t.poset()) and k2(t.poset())
    assert k1(cut_poset(t)).vacuous


def test_k1_antichain():
    assert k1(Poset.from_pairs(["x", "y"], [])).holds


@st.composite
def posets(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    # random DAG on 0..n-1 with edges i<j; closure is a partial order
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())]
    return Poset.from_pairs(list(range(n)), pairs)


@given(posets())
def test_every_finite_poset_has_k2(p):
    r = k2(p)
    assert r.holds and r.vacuous


@given(posets(max_size=5))
def test_k1_agrees_with_naive_enumeration(p):
    naive = all(
        p.infimum(c) is not None and p.supremum(c) is not None
        for r in range(1, len(p.elements) + 1)
        for c in itertools.combinations(p.elements, r)
        if p.is_chain(c)
    )
    assert k1(p).holds == naive


def test_k1_counts_chains_of_a_chain():
    assert k1(Chain.of_size(5).poset()).instances == 2**5 - 1


# Poset validation and IO


def test_poset_rejects_non_orders():
    with pytest.raises(InvalidOrder):
        Poset(("a", "b"), frozenset({("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")}))
    with pytest.raises(InvalidOrder):
        Poset(("a",), frozenset())
    with pytest.raises(InvalidOrder):
        Poset(("a", "b", "c"), frozenset({("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")}))
    with pytest.raises(InvalidOrder):
        Chain(("a", "a"))


def test_load_chain_and_poset():
    assert load('{"chain": ["a", "b"]}') == Chain(("a", "b"))
    p = load({"poset": {"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]}})
    assert p.le("a", "c")
    with pytest.raises(ValueError):
        load({"nothing": 1})


def test_labels_are_strings_without_coercion():
    t = load({"chain": ["1", "01"]})
    assert t.index("01") == 1
    with pytest.raises(ElementNotFound):
        t.index("2")


def test_hasse_dot_lists_covers_only():
    dot = hasse_dot(Chain.of_size(3).poset())
    assert '"t0" -> "t1"' in dot and '"t0" -> "t2"' not in dot
    assert dot.startswith("digraph")


def test_cut_json():
    assert phi1(ABC, "a").to_json() == {"left": ["a"], "right": ["b", "c"], "left_size": 1}
