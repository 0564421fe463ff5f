"""Families of subsets of a finite universe, ordered by inclusion.

Covers the immediate-neighbour machinery: maximal chains between two
members, the neighbour witness built from a maximal chain, the union /
intersection decompositions over IS(B) and IP(B), and the isomorphism of a
chain family with the cut space of its immediate successors.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .orders import Chain, Cut, Poset, cuts


class PreconditionError(ValueError):
    """An operation was called outside its hypotheses."""


Member = frozenset


@dataclass(frozen=True)
class SetFamily:
    universe: tuple[str, ...]
    members: tuple[frozenset, ...]
    _member_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        universe = tuple(self.universe)
        if len(set(universe)) != len(universe):
            raise ValueError("duplicate universe elements")
        object.__setattr__(self, "universe", universe)
        ms = [frozenset(m) for m in self.members]
        if len(set(ms)) != len(ms):
            raise ValueError("duplicate members in family")
        u = set(universe)
        for m in ms:
            if not m <= u:
                raise ValueError(f"member {sorted(m)} is not a subset of the universe")
        object.__setattr__(self, "members", tuple(sorted(ms, key=self.key)))
        object.__setattr__(self, "_member_set", frozenset(ms))

    @classmethod
    def of(cls, universe: Iterable, members: Iterable[Iterable]) -> "SetFamily":
        return cls(tuple(str(u) for u in universe), tuple(frozenset(str(x) for x in m) for m in members))

    def key(self, s: frozenset) -> tuple:
        """Canonical sort key: size first, then positions in the universe."""
        return (len(s), tuple(sorted(self.universe.index(x) for x in s)))

    def fmt(self, s: frozenset) -> str:
        return "{" + ",".join(sorted(s, key=self.universe.index)) + "}"

    def __contains__(self, s) -> bool:
        return frozenset(s) in self._member_set

    def __len__(self) -> int:
        return len(self.members)

    def poset(self) -> Poset:
        return Poset.from_order(self.members, lambda a, b: a <= b)

    def covers(self) -> list[tuple[frozenset, frozenset]]:
        ms = self.members
        out = []
        for a in ms:
            for b in ms:
                if a < b and not any(a < c < b for c in ms):
                    out.append((a, b))
        return out

    def is_chain(self) -> bool:
        return all(a <= b or b <= a for a, b in itertools.combinations(self.members, 2))

    def minimal(self) -> list[frozenset]:
        return [a for a in self.members if not any(b < a for b in self.members)]

    def maximal(self) -> list[frozenset]:
        return [a for a in self.members if not any(a < b for b in self.members)]

    def to_json(self) -> dict:
        return {
            "universe": list(self.universe),
            "sets": [sorted(m, key=self.universe.index) for m in self.members],
        }


def load_family(doc: dict | str) -> SetFamily:
    """Read ``{"family": {"universe": [...], "sets": [[...], ...]}}``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    body = doc.get("family") if isinstance(doc, dict) else None
    if not isinstance(body, dict):
        raise ValueError("expected a 'family' object")
    return SetFamily.of(body.get("universe", []), body.get("sets", []))


def all_families(universe: Sequence[str]) -> Iterable[SetFamily]:
    """Every family of subsets of ``universe``, the empty family included."""
    subsets = [
        frozenset(c) for r in range(len(universe) + 1) for c in itertools.combinations(universe, r)
    ]
    for mask in range(1 << len(subsets)):
        yield SetFamily(tuple(universe), tuple(s for i, s in enumerate(subsets) if mask >> i & 1))


def is_pred_is_succ_family(fam: SetFamily) -> tuple[list[frozenset], list[frozenset]]:
    cov = fam.covers()
    has_pred = {b for _, b in cov}
    has_succ = {a for a, _ in cov}
    return [m for m in fam.members if m in has_pred], [m for m in fam.members if m in has_succ]


def _require_member(fam: SetFamily, x) -> frozenset:
    x = frozenset(x)
    if x not in fam:
        raise PreconditionError(f"{fam.fmt(x)} is not a member of the family")
    return x


def _require_proper(fam: SetFamily, x1, x2) -> tuple[frozenset, frozenset]:
    x1, x2 = _require_member(fam, x1), _require_member(fam, x2)
    if not x1 < x2:
        raise PreconditionError(f"need {fam.fmt(x1)} strictly inside {fam.fmt(x2)}")
    return x1, x2


def _chains_along_covers(sets: Sequence[frozenset], start: frozenset, stop: frozenset | None):
    """Covering paths inside ``sets`` from ``start``; to ``stop`` or to any maximal set."""
    succ = {
        a: [b for b in sets if a < b and not any(a < c < b for c in sets)] for a in sets
    }
    out = []

    def walk(path):
        last = path[-1]
        if stop is not None and last == stop:
            out.append(tuple(path))
            return
        nxt = succ[last]
        if not nxt and stop is None:
            out.append(tuple(path))
        for b in nxt:
            walk(path + [b])

    walk([start])
    return out


def maximal_chains_between(fam: SetFamily, x1, x2) -> list[tuple[frozenset, ...]]:
    """All maximal chains of the family running from ``x1`` up to ``x2``.

    On a finite family these are exactly the covering paths inside the
    interval [x1, x2]. Chains are returned in canonical order.
    """
    x1, x2 = _require_proper(fam, x1, x2)
    interval = [m for m in fam.members if x1 <= m <= x2]
    chains = _chains_along_covers(interval, x1, x2)
    return sorted(chains, key=lambda c: [fam.key(m) for m in c])


def maximal_chains(sets: Sequence[frozenset]) -> list[tuple[frozenset, ...]]:
    """Maximal chains of a finite collection of sets under inclusion."""
    sets = list(sets)
    mins = [a for a in sets if not any(b < a for b in sets)]
    out = []
    for m in mins:
        out.extend(_chains_along_covers(sets, m, None))
    return out


def are_immediate_neighbors(fam: SetFamily, y1, y2) -> bool:
    y1, y2 = frozenset(y1), frozenset(y2)
    return y1 in fam and y2 in fam and y1 < y2 and not any(y1 < c < y2 for c in fam.members)


def neighbors_exist_between(fam: SetFamily, x1, x2) -> bool:
    """Brute force: is there a covering pair Y1 < Y2 with x1 <= Y1 and Y2 <= x2?"""
    x1, x2 = frozenset(x1), frozenset(x2)
    inside = [m for m in fam.members if x1 <= m <= x2]
    return any(are_immediate_neighbors(fam, a, b) for a in inside for b in inside)


@dataclass(frozen=True)
class NeighborWitness:
    y: str
    chain: tuple[frozenset, ...]
    lower: frozenset
    upper: frozenset

    def to_json(self, fam: SetFamily) -> dict:
        return {
            "y": self.y,
            "chain": [fam.fmt(m) for m in self.chain],
            "lower": fam.fmt(self.lower),
            "upper": fam.fmt(self.upper),
        }


def _union(sets: Iterable[frozenset]) -> frozenset:
    return frozenset().union(*sets)


def _intersection(sets: Sequence[frozenset], universe: Iterable) -> frozenset:
    return frozenset(universe).intersection(*sets)


def witness_candidates(fam: SetFamily, x1, x2):
    """Yield ``(y, chain, lower, upper)`` for every y in x2 - x1 and maximal chain."""
    x1, x2 = _require_proper(fam, x1, x2)
    chains = maximal_chains_between(fam, x1, x2)
    for y in sorted(x2 - x1, key=fam.universe.index):
        for c in chains:
            lower = _union(m for m in c if y not in m)
            upper = _intersection([m for m in c if y in m], fam.universe)
            yield y, c, lower, upper


def neighbor_witness(fam: SetFamily, x1, x2) -> NeighborWitness | None:
    """First (y, maximal chain) whose split lands in the family, or None.

    The union of the chain members avoiding ``y`` and the intersection of
    those containing it are immediate neighbours between ``x1`` and ``x2``.
    """
    for y, c, lower, upper in witness_candidates(fam, x1, x2):
        if lower in fam and upper in fam:
            return NeighborWitness(y, c, lower, upper)
    return None


@dataclass(frozen=True)
class ClosureFlags:
    chain_union_closed: bool
    chain_intersection_closed: bool
    vacuous: bool = True
    chains_checked: int = 0


def nonempty_chains(sets: Sequence[frozenset]) -> Iterable[tuple[frozenset, ...]]:
    """Every nonempty chain of ``sets``, listed bottom-up."""
    ordered = sorted(sets, key=lambda s: (len(s), sorted(s)))

    def grow(chain, start):
        yield chain
        for i in range(start, len(ordered)):
            if chain[-1] < ordered[i]:
                yield from grow(chain + (ordered[i],), i + 1)

    for i, s in enumerate(ordered):
        yield from grow((s,), i + 1)


def closure_flags(fam: SetFamily) -> ClosureFlags:
    """Is the family closed under unions / intersections of nonempty chains?

    For finite families both hold trivially (the union of a finite chain is
    its top), hence ``vacuous=True``; the check still runs.
    """
    unions = inters = True
    n = 0
    for c in nonempty_chains(fam.members):
        n += 1
        unions = unions and _union(c) in fam
        inters = inters and _intersection(c, fam.universe) in fam
    return ClosureFlags(unions, inters, True, n)


def _down_closure(poset_sets: Sequence[frozenset], seed: Iterable[frozenset]) -> set[frozenset]:
    seed = list(seed)
    return {a for a in poset_sets if any(a <= s for s in seed)}


def _up_closure(poset_sets: Sequence[frozenset], seed: Iterable[frozenset]) -> set[frozenset]:
    seed = list(seed)
    return {a for a in poset_sets if any(s <= a for s in seed)}


@dataclass
class Decomposition:
    """Generators of a member X drawn from IS(B) (union) or IP(B) (intersection)."""

    x: frozenset
    generators: list[frozenset]
    combines_to_x: bool
    is_initial: bool  # final, for the intersection variant
    is_maximal: bool
    chains_checked: int
    every_maximal_chain_ok: bool
    hypotheses: ClosureFlags | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.combines_to_x
            and self.is_initial
            and self.is_maximal
            and self.every_maximal_chain_ok
            and bool(self.generators)
        )


def union_decomposition(fam: SetFamily, x) -> Decomposition:
    """I = {Y in IS(B) : Y <= X}, with the checks that X = ∪I is forced.

    Verifies that I is initial in IS(B), that no strictly larger initial
    subset of IS(B) still has union X, and that every maximal chain of I
    already has union X.
    """
    x = _require_member(fam, x)
    if not any(m < x for m in fam.members):
        raise PreconditionError(f"{fam.fmt(x)} is minimal in the family")
    succ_set, _ = is_pred_is_succ_family(fam)
    gens = [y for y in succ_set if y <= x]
    initial = _down_closure(succ_set, gens) == set(gens)
    maximal = all(_union(_down_closure(succ_set, gens + [y])) != x for y in succ_set if y not in gens)
    chains = maximal_chains(gens)
    chains_ok = all(_union(c) == x for c in chains)
    return Decomposition(
        x, gens, _union(gens) == x, initial, maximal, len(chains), chains_ok, closure_flags(fam)
    )


def intersection_decomposition(fam: SetFamily, x) -> Decomposition:
    """J = {Y in IP(B) : Y >= X}; the dual of :func:`union_decomposition`."""
    x = _require_member(fam, x)
    if not any(x < m for m in fam.members):
        raise PreconditionError(f"{fam.fmt(x)} is maximal in the family")
    _, pred_set = is_pred_is_succ_family(fam)
    gens = [y for y in pred_set if x <= y]
    final = _up_closure(pred_set, gens) == set(gens)
    maximal = all(
        _intersection(list(_up_closure(pred_set, gens + [y])), fam.universe) != x
        for y in pred_set
        if y not in gens
    )
    # maximal chains of J, read top-down: reuse the bottom-up enumerator on complements
    comp = {frozenset(fam.universe) - y: y for y in gens}
    chains = [tuple(comp[c] for c in ch) for ch in maximal_chains(list(comp))]
    chains_ok = all(_intersection(c, fam.universe) == x for c in chains)
    return Decomposition(
        x,
        gens,
        _intersection(gens, fam.universe) == x,
        final,
        maximal,
        len(chains),
        chains_ok,
        closure_flags(fam),
    )


def generator_uniqueness(fam: SetFamily, x, union: bool = True) -> tuple[bool, int]:
    """Exhaustive: every J within IS(B) with ∪J = X lies inside the union generators.

    With ``union=False`` the dual statement for IP(B) and intersections.
    Returns (holds, number of subsets examined).
    """
    dec = union_decomposition(fam, x) if union else intersection_decomposition(fam, x)
    succ_set, pred_set = is_pred_is_succ_family(fam)
    pool = succ_set if union else pred_set
    gens = set(dec.generators)
    n = 0
    for r in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, r):
            n += 1
            combined = _union(combo) if union else _intersection(combo, fam.universe)
            if combined == dec.x and not set(combo) <= gens:
                return False, n
    return True, n


def strict_gap(fam: SetFamily) -> bool:
    """On a chain family: each X in IS(B) strictly contains ∪{Y in IS(B) : Y < X},
    and each X in IP(B) is strictly inside ∩{Y in IP(B) : Y > X}."""
    if not fam.is_chain():
        raise PreconditionError("family is not a chain")
    succ_set, pred_set = is_pred_is_succ_family(fam)
    up = all(_union(y for y in succ_set if y < x) < x for x in succ_set)
    down = all(x < _intersection([y for y in pred_set if y > x], fam.universe) for x in pred_set)
    return up and down


@dataclass
class ChainIsomorphism:
    """B ≅ D(IS(B)) and B ≅ D(IP(B)) for a chain family B."""

    succ_chain: Chain
    pred_chain: Chain
    forward: list[tuple[Cut, frozenset]]
    via_pred: list[tuple[Cut, frozenset]]
    bijective: bool
    order_preserving: bool
    pred_bijective: bool
    pred_order_preserving: bool
    pred_direct_agrees: bool
    no_smallest_variant: bool = False
    vacuous_variant: bool = True

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and self.order_preserving
            and self.pred_bijective
            and self.pred_order_preserving
            and self.pred_direct_agrees
        )

    def image(self, cut: Cut) -> frozenset:
        return dict(self.forward)[cut]


def chain_cut_isomorphism(fam: SetFamily) -> ChainIsomorphism:
    """The order isomorphism D(IS(B)) -> B of a chain family.

    The bottom cut goes to the smallest member and any other cut to the
    union of its left part. The companion map from D(IP(B)) goes through
    the bijection sending each element of IP(B) to its immediate successor;
    it is also checked against the direct formula (intersection of the right
    part, top cut to the greatest member).
    """
    if not fam.is_chain():
        raise PreconditionError("family is not a chain under inclusion")
    if not fam.members:
        raise PreconditionError("family is empty")
    ms = list(fam.members)  # ascending: a chain is sorted by size
    succ_set, pred_set = is_pred_is_succ_family(fam)
    succ_chain = Chain(tuple(fam.fmt(y) for y in succ_set))
    pred_chain = Chain(tuple(fam.fmt(y) for y in pred_set))
    by_label = {fam.fmt(m): m for m in ms}

    def phi(c: Cut) -> frozenset:
        if c.size == 0:
            return ms[0]
        return _union(by_label[lab] for lab in c.left)

    forward = [(c, phi(c)) for c in cuts(succ_chain)]
    images = [m for _, m in forward]
    bijective = sorted(images, key=fam.key) == ms and len(set(images)) == len(images)
    order_ok = all(
        (a.size <= b.size) == (fa <= fb) for a, fa in forward for b, fb in forward
    )

    # IP(B) -> IS(B): each element to its immediate successor
    nxt = {ms[i]: ms[i + 1] for i in range(len(ms) - 1)}
    to_succ = {fam.fmt(y): fam.fmt(nxt[y]) for y in pred_set}
    via = []
    for c in cuts(pred_chain):
        image_cut = Cut(succ_chain, succ_chain.index(to_succ[c.left[-1]]) + 1) if c.size else Cut(succ_chain, 0)
        via.append((c, phi(image_cut)))
    vimages = [m for _, m in via]
    pred_bij = sorted(vimages, key=fam.key) == ms and len(set(vimages)) == len(vimages)
    pred_ord = all((a.size <= b.size) == (fa <= fb) for a, fa in via for b, fb in via)

    def direct(c: Cut) -> frozenset:
        if c.size == len(pred_chain):
            return ms[-1]
        return _intersection([by_label[lab] for lab in c.right], fam.universe)

    agrees = all(direct(c) == m for c, m in via)
    return ChainIsomorphism(
        succ_chain, pred_chain, forward, via, bijective, order_ok, pred_bij, pred_ord, agrees
    )
