import itertools

import pytest
from hypothesis import given, strategies as st

from dedekind.orders import Poset
from dedekind.topology import (
    FiniteTopology,
    PreconditionError,
    cop_and_separation,
    cop_topology,
    ip_closed_correspondence,
    density,
    is_sober,
    is_t0,
    final_subsets_check,
    zariski,
)

sizes = st.integers(1, 8)


def pts(n):
    return [f"p{i}" for i in range(n)]


def test_zariski_examples():
    assert len(zariski(pts(4)).closed_sets) == 5
    assert zariski(pts(1)).closed_sets == {frozenset(), frozenset({"p0"})}
    top = zariski(pts(4))
    assert top.closure(["p1"]) == frozenset({"p1", "p2", "p3"})


@given(sizes)
def test_closed_sets_form_a_chain(n):
    top = zariski(pts(n))
    closed = list(top.closed_sets)
    assert len(closed) == n + 1
    assert all(a <= b or b <= a for a, b in itertools.combinations(closed, 2))
    assert frozenset(pts(n)).intersection(*closed) in top.closed_sets


def test_topology_validation():
    with pytest.raises(ValueError):
        FiniteTopology(("a", "b"), frozenset({frozenset(), frozenset({"a"}), frozenset({"b"})}))


def test_final_subsets_examples():
    r4 = final_subsets_check(pts(4))
    assert r4.ok and r4.pred.subset == ["p0", "p1", "p2"] and r4.pred.final_count == 4
    r1 = final_subsets_check(pts(1))
    assert r1.ok and r1.pred.subset == [] and r1.pred.closed_count == 1
    r2 = final_subsets_check(pts(2))
    assert r2.ok and r2.pred.subset == ["p0"] and r2.pred.closed_count == 2


@given(sizes)
def test_final_subsets_and_correspondence(n):
    assert final_subsets_check(pts(n)).ok
    c = ip_closed_correspondence(pts(n))
    assert c.ok and c.closed_subsets_of_ip == n


def test_correspondence_examples():
    assert ip_closed_correspondence(pts(4)).closed_subsets_of_ip == 4
    assert ip_closed_correspondence(pts(1)).closed_subsets_of_ip == 1


def test_density():
    d = density(pts(4))
    assert d.ip_dense and not d.is_dense and d.consistent
    with pytest.raises(PreconditionError):
        density(pts(1))


@given(sizes)
def test_cop_and_separation(n):
    s = cop_and_separation(pts(n))
    assert s.cop_equal and s.t0 and s.sober and s.compact and s.compact_vacuous


def test_sobriety_fails_on_indiscrete_space():
    top = FiniteTopology(("a", "b"), frozenset({frozenset(), frozenset({"a", "b"})}))
    assert not is_sober(top) and not is_t0(top)


def test_cop_topology_of_antichain_is_discrete():
    p = Poset.from_pairs(["a", "b"], [])
    assert len(cop_topology(p).closed_sets) == 4
