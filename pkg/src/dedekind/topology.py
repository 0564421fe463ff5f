"""Zariski topology on a finite totally ordered spectrum.

Points are listed bottom-up (the minimal prime first). Closed sets are ∅
and the up-sets [P, ∞). Everything here is brute force over explicit
collections of closed sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .orders import Poset, is_pred_is_succ


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteTopology:
    points: tuple
    closed_sets: frozenset = field(repr=False)

    def __post_init__(self):
        pts = frozenset(self.points)
        closed = frozenset(frozenset(c) for c in self.closed_sets)
        object.__setattr__(self, "closed_sets", closed)
        if frozenset() not in closed or pts not in closed:
            raise ValueError("closed sets must include ∅ and the whole space")
        for a, b in itertools.combinations(closed, 2):
            if a | b not in closed or a & b not in closed:
                raise ValueError("closed sets not stable under finite unions/intersections")
        if any(not c <= pts for c in closed):
            raise ValueError("closed set leaves the space")

    def closure(self, subset: Iterable) -> frozenset:
        s = frozenset(subset)
        return frozenset(self.points).intersection(*[c for c in self.closed_sets if s <= c])

    def is_dense(self, subset: Iterable) -> bool:
        return self.closure(subset) == frozenset(self.points)

    def subspace(self, subset: Iterable) -> "FiniteTopology":
        keep = [p for p in self.points if p in set(subset)]
        ks = frozenset(keep)
        return FiniteTopology(tuple(keep), frozenset(c & ks for c in self.closed_sets))

    def sorted_closed(self) -> list[list]:
        order = {p: i for i, p in enumerate(self.points)}
        return sorted(
            (sorted(c, key=order.__getitem__) for c in self.closed_sets),
            key=lambda c: (len(c), [order[p] for p in c]),
        )


def zariski(points: Sequence[Hashable]) -> FiniteTopology:
    """Closed sets: ∅ and every [P, ∞) on the chain ``points`` (ascending)."""
    pts = tuple(points)
    closed = {frozenset()} | {frozenset(pts[i:]) for i in range(len(pts))}
    return FiniteTopology(pts, frozenset(closed))


def chain_poset(points: Sequence[Hashable]) -> Poset:
    pts = tuple(points)
    return Poset.from_order(pts, lambda a, b: pts.index(a) <= pts.index(b))


def final_subsets(points: Sequence[Hashable]) -> set[frozenset]:
    """Final subsets of a chain listed ascending: its suffixes (∅ included)."""
    pts = tuple(points)
    return {frozenset(pts[i:]) for i in range(len(pts) + 1)}


@dataclass
class SubspaceReport:
    subset: list
    closed_equals_final: bool
    witnesses_ok: bool
    closed_count: int
    final_count: int


@dataclass
class FinalSubsetReport:
    pred: SubspaceReport
    succ: SubspaceReport

    @property
    def ok(self) -> bool:
        return all(
            [
                self.pred.closed_equals_final,
                self.pred.witnesses_ok,
                self.succ.closed_equals_final,
                self.succ.witnesses_ok,
            ]
        )

    def to_json(self) -> dict:
        def one(r: SubspaceReport):
            return {
                "points": [str(p) for p in r.subset],
                "closed_equals_final": r.closed_equals_final,
                "witnesses_ok": r.witnesses_ok,
                "closed_sets": r.closed_count,
                "final_subsets": r.final_count,
            }

        return {"IP": one(self.pred), "IS": one(self.succ), "ok": self.ok}


def _subspace_report(top: FiniteTopology, subset: list) -> SubspaceReport:
    sub = top.subspace(subset)
    finals = final_subsets(subset)
    closed = set(sub.closed_sets)
    order = {p: i for i, p in enumerate(top.points)}
    ok = True
    for j in finals:
        if not j:
            continue
        # [∩J, ∞) ∩ subset = J; on a finite chain of primes ∩J is min J
        low = min(j, key=order.__getitem__)
        ok = ok and frozenset(p for p in subset if order[p] >= order[low]) == j
    return SubspaceReport(list(subset), closed == finals, ok, len(closed), len(finals))


def final_subsets_check(points: Sequence[Hashable]) -> FinalSubsetReport:
    """Closed subsets of the IP (and IS) subspace are exactly its final subsets."""
    top = zariski(points)
    succ, pred = is_pred_is_succ(chain_poset(points))
    return FinalSubsetReport(_subspace_report(top, pred), _subspace_report(top, succ))


@dataclass
class CorrespondenceReport:
    points: int
    closed_subsets_of_ip: int
    bijection: list[tuple]
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.points == self.closed_subsets_of_ip

    def to_json(self) -> dict:
        return {
            "points": self.points,
            "closed_subsets_of_IP": self.closed_subsets_of_ip,
            "bijection": [[str(p), [str(q) for q in c]] for p, c in self.bijection],
            "ok": self.ok,
        }


def ip_closed_correspondence(points: Sequence[Hashable]) -> CorrespondenceReport:
    """Points of the space ↔ closed subsets of IP, via P ↦ [P, ∞) ∩ IP.

    Reading the space as the cuts of IP, this sends a cut to its right part.
    """
    pts = list(points)
    top = zariski(pts)
    _, pred = is_pred_is_succ(chain_poset(pts))
    sub = top.subspace(pred)
    order = {p: i for i, p in enumerate(pts)}
    pairs = [(p, [q for q in pred if order[q] >= order[p]]) for p in pts]
    images = [frozenset(c) for _, c in pairs]
    bijective = len(set(images)) == len(pts) and set(images) == set(sub.closed_sets)
    return CorrespondenceReport(len(pts), len(sub.closed_sets), pairs, bijective)


@dataclass
class DensityReport:
    ip_dense: bool
    is_dense: bool
    criterion: bool  # minimal point is not an immediate predecessor
    consistent: bool

    def to_json(self) -> dict:
        return {
            "ip_dense": self.ip_dense,
            "is_dense": self.is_dense,
            "criterion_min_not_immediate_predecessor": self.criterion,
            "consistent": self.consistent,
        }


def density(points: Sequence[Hashable]) -> DensityReport:
    pts = list(points)
    if len(pts) < 2:
        raise PreconditionError("density needs a space with more than one point")
    top = zariski(pts)
    poset = chain_poset(pts)
    succ, pred = is_pred_is_succ(poset)
    bottom = pts[0]
    criterion = not any(a == bottom for a, _ in poset.covers())
    is_dense = top.is_dense(succ)
    return DensityReport(top.is_dense(pred), is_dense, criterion, is_dense == criterion)


def cop_topology(poset: Poset) -> FiniteTopology:
    """Closed sets generated by the subbasis {x : x >= s}."""
    sub = [frozenset(x for x in poset.elements if poset.le(s, x)) for s in poset.elements]
    basis = {frozenset(poset.elements)}
    for r in range(1, len(sub) + 1):
        for combo in itertools.combinations(sub, r):
            basis.add(frozenset.intersection(*combo))
    closed = {frozenset()}
    basis = list(basis)
    frontier = set(basis)
    closed |= frontier
    while frontier:
        new = set()
        for a in frontier:
            for b in basis:
                u = a | b
                if u not in closed:
                    new.add(u)
        closed |= new
        frontier = new
    return FiniteTopology(poset.elements, frozenset(closed))


def is_t0(top: FiniteTopology) -> bool:
    return all(top.closure([a]) != top.closure([b]) for a, b in itertools.combinations(top.points, 2))


def is_sober(top: FiniteTopology) -> bool:
    """Every nonempty irreducible closed set is the closure of exactly one point."""
    for c in top.closed_sets:
        if not c:
            continue
        proper = [d for d in top.closed_sets if d < c]
        irreducible = not any(a | b == c for a in proper for b in proper)
        if irreducible:
            generic = [p for p in c if top.closure([p]) == c]
            if len(generic) != 1:
                return False
    return True


def is_compact(top: FiniteTopology) -> bool:
    # every open cover of a finite space is already finite
    return isinstance(top.points, tuple)


@dataclass
class SeparationReport:
    cop_equal: bool
    t0: bool
    sober: bool
    compact: bool
    compact_vacuous: bool = True

    @property
    def ok(self) -> bool:
        return self.cop_equal and self.t0 and self.sober and self.compact

    def to_json(self) -> dict:
        return {
            "cop_equal": self.cop_equal,
            "t0": self.t0,
            "sober": self.sober,
            "compact": self.compact,
            "compact_vacuous": self.compact_vacuous,
        }


def cop_and_separation(points: Sequence[Hashable]) -> SeparationReport:
    top = zariski(points)
    cop = cop_topology(chain_poset(points))
    return SeparationReport(cop.closed_sets == top.closed_sets, is_t0(top), is_sober(top), is_compact(top))


def specialization_dot(points: Sequence[Hashable], name: str = "spec") -> str:
    """Specialization order (P -> Q when Q is in the closure of P) as DOT covers."""
    from .orders import hasse_dot

    return hasse_dot(chain_poset(points), name=name)
