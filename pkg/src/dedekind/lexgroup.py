"""The lexicographic group Γ = ℤ^T of a finite chain and its isolated subgroups.

Vectors are stored densely in chain order. An isolated subgroup is stored
by a boundary cut A and stands for {f : supp(f) ⊆ A^R}; every extensional
statement about subgroups is checked on a finite box of vectors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Mapping

from .orders import Chain, Cut, PropertyCheck, Poset, cuts, is_pred_is_succ, phi1, phi2


class IncompatibleParents(ValueError):
    pass


class DegenerateInput(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class LexVector:
    chain: Chain
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != len(self.chain):
            raise ValueError(f"expected {len(self.chain)} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, chain: Chain) -> "LexVector":
        return cls(chain, (0,) * len(chain))

    @classmethod
    def unit(cls, chain: Chain, t: str, k: int = 1) -> "LexVector":
        c = [0] * len(chain)
        c[chain.index(t)] = k
        return cls(chain, tuple(c))

    @classmethod
    def from_mapping(cls, chain: Chain, mapping: Mapping[str, int]) -> "LexVector":
        c = [0] * len(chain)
        for t, k in mapping.items():
            c[chain.index(t)] = int(k)
        return cls(chain, tuple(c))

    def to_json(self) -> dict[str, int]:
        return {t: k for t, k in zip(self.chain.labels, self.coords) if k}

    def __getitem__(self, t: str) -> int:
        return self.coords[self.chain.index(t)]

    def support(self) -> tuple[str, ...]:
        return tuple(t for t, k in zip(self.chain.labels, self.coords) if k)

    def min_support_index(self) -> int | None:
        for i, k in enumerate(self.coords):
            if k:
                return i
        return None

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: "LexVector"):
        if not isinstance(other, LexVector):
            return False
        if other.chain != self.chain:
            raise IncompatibleParents("vectors over different chains")
        return True

    def __add__(self, other: "LexVector") -> "LexVector":
        if not self._check(other):
            return NotImplemented
        return LexVector(self.chain, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LexVector":
        return LexVector(self.chain, tuple(-a for a in self.coords))

    def __sub__(self, other: "LexVector") -> "LexVector":
        return self + (-other)

    def scale(self, n: int) -> "LexVector":
        return LexVector(self.chain, tuple(n * a for a in self.coords))

    def __lt__(self, other: "LexVector") -> bool:
        if not self._check(other):
            return NotImplemented
        return lex_compare(self, other) < 0

    def __repr__(self) -> str:
        return f"LexVector{self.coords}"


def lex_compare(f: LexVector, g: LexVector) -> int:
    """-1, 0 or 1, decided at the first coordinate where f and g differ."""
    if f.chain != g.chain:
        raise IncompatibleParents("vectors over different chains")
    for a, b in zip(f.coords, g.coords):
        if a != b:
            return -1 if a < b else 1
    return 0


@dataclass(frozen=True)
class IsolatedSubgroup:
    """{f in Γ : supp(f) ⊆ boundary^R}."""

    chain: Chain
    boundary: Cut

    def __post_init__(self):
        if self.boundary.chain != self.chain:
            raise IncompatibleParents("boundary cut belongs to another chain")

    @classmethod
    def h(cls, chain: Chain, t: str) -> "IsolatedSubgroup":
        """H_t: vectors vanishing strictly below t."""
        return cls(chain, phi2(chain, t))

    @classmethod
    def dh(cls, chain: Chain, t: str) -> "IsolatedSubgroup":
        """dH_t: vectors vanishing at and below t."""
        return cls(chain, phi1(chain, t))

    @classmethod
    def zero(cls, chain: Chain) -> "IsolatedSubgroup":
        return cls(chain, Cut(chain, len(chain)))

    @classmethod
    def whole(cls, chain: Chain) -> "IsolatedSubgroup":
        return cls(chain, Cut(chain, 0))

    def __contains__(self, f: LexVector) -> bool:
        if f.chain != self.chain:
            raise IncompatibleParents("vector over another chain")
        return not any(f.coords[: self.boundary.size])

    def is_zero(self) -> bool:
        return self.boundary.size == len(self.chain)

    def __le__(self, other: "IsolatedSubgroup") -> bool:
        # smaller boundary^R means smaller subgroup
        return self.boundary.size >= other.boundary.size

    def __lt__(self, other: "IsolatedSubgroup") -> bool:
        return self.boundary.size > other.boundary.size

    def name(self) -> str:
        n = len(self.chain)
        k = self.boundary.size
        if k == n:
            return "{0}"
        return f"H_{self.chain.labels[k]}"

    def to_json(self) -> dict:
        return {"boundary_left_size": self.boundary.size}


def smallest_isolated_containing(f: LexVector) -> IsolatedSubgroup:
    """H_{t0} with t0 the least element of supp(f)."""
    i = f.min_support_index()
    if i is None:
        raise DegenerateInput("the zero vector lies in every isolated subgroup")
    return IsolatedSubgroup(f.chain, Cut(f.chain, i))


@dataclass(frozen=True)
class TaggedSubgroup:
    subgroup: IsolatedSubgroup
    succ_of: str | None  # t with subgroup == H_t
    pred_of: str | None  # t with subgroup == dH_t

    @property
    def in_is(self) -> bool:
        return self.succ_of is not None

    @property
    def in_ip(self) -> bool:
        return self.pred_of is not None

    def to_json(self) -> dict:
        d = self.subgroup.to_json()
        d.update(
            name=self.subgroup.name(),
            IS=self.in_is,
            IP=self.in_ip,
            equals_H=self.succ_of,
            equals_dH=self.pred_of,
        )
        return d


def enumerate_isolated(chain: Chain) -> list[TaggedSubgroup]:
    """All |T|+1 isolated subgroups, from {0} up to Γ.

    Tagged IS when the subgroup is some H_t (boundary^R = [t, ∞)) and IP
    when it is some dH_t (boundary^R = (t, ∞)).
    """
    n = len(chain)
    out = []
    for c in reversed(cuts(chain)):
        k = c.size
        out.append(
            TaggedSubgroup(
                IsolatedSubgroup(chain, c),
                chain.labels[k] if k < n else None,
                chain.labels[k - 1] if k > 0 else None,
            )
        )
    return out


# --- finite boxes of Γ ------------------------------------------------------


def box(chain: Chain, radius: int = 3) -> Iterator[LexVector]:
    for coords in itertools.product(range(-radius, radius + 1), repeat=len(chain)):
        yield LexVector(chain, coords)


def sample_box(chain: Chain, radius: int, count: int, rng: random.Random) -> list[LexVector]:
    return [
        LexVector(chain, tuple(rng.randint(-radius, radius) for _ in chain)) for _ in range(count)
    ]


def box_elements(
    chain: Chain, radius: int = 3, exhaustive_up_to: int = 4, samples: int = 2000, seed: int = 0
) -> list[LexVector]:
    """The whole box when |T| is small, a seeded sample of it otherwise.

    Unit vectors and their negatives are always included so that strictness
    witnesses are present.
    """
    if len(chain) <= exhaustive_up_to:
        return list(box(chain, radius))
    rng = random.Random(seed)
    units = [LexVector.unit(chain, t, s) for t in chain for s in (1, -1)]
    return units + [LexVector.zero(chain)] + sample_box(chain, radius, samples, rng)


def in_convex_hull_of(f: LexVector, g: LexVector, n_max: int) -> bool:
    """Is -n|f| <= g <= n|f| for some 1 <= n <= n_max?"""
    # dense coordinates in chain order: tuple comparison is the lex order
    fc = f.coords
    if fc < (0,) * len(fc):
        fc = tuple(-a for a in fc)
    gc = g.coords
    for n in range(1, n_max + 1):
        b = tuple(n * a for a in fc)
        if tuple(-a for a in b) <= gc <= b:
            return True
    return False


def check_isolated(h: IsolatedSubgroup, elems: list[LexVector], pairs: int, rng: random.Random) -> PropertyCheck:
    """Subgroup closure and convexity of ``h`` on random pairs from ``elems``."""
    zero = LexVector.zero(h.chain)
    inside = [f for f in elems if f in h]
    if zero not in h:
        return PropertyCheck(False, instances=0, counterexample=("zero missing",))
    for i in range(pairs):
        f, g = rng.choice(elems), rng.choice(elems)
        if f in h and (-f not in h or (g in h and f + g not in h)):
            return PropertyCheck(False, instances=i, counterexample=("not a subgroup", f, g))
        # convexity: 0 <= g <= hh with hh in H forces g in H
        hh = rng.choice(inside)
        if lex_compare(zero, g) <= 0 <= lex_compare(hh, g) and g not in h:
            return PropertyCheck(False, instances=i, counterexample=("not convex", g, hh))
    return PropertyCheck(True, instances=pairs)


def check_smallest(f: LexVector, elems: list[LexVector]) -> PropertyCheck:
    """The subgroup returned for f contains f and lies in every isolated subgroup
    containing f; it is also the convex subgroup generated by f on ``elems``."""
    h = smallest_isolated_containing(f)
    if f not in h:
        return PropertyCheck(False, counterexample=("f not in its subgroup", f))
    for tg in enumerate_isolated(f.chain):
        if f in tg.subgroup and not h <= tg.subgroup:
            return PropertyCheck(False, counterexample=("not smallest", f, tg.subgroup.name()))
    radius = max((abs(c) for e in elems for c in e.coords), default=0)
    n_max = 2 * radius + 1
    for g in elems:
        if (g in h) != in_convex_hull_of(f, g, n_max):
            return PropertyCheck(False, counterexample=("convex hull mismatch", f, g))
    return PropertyCheck(True, instances=len(elems))


def extensional_poset(chain: Chain, elems: list[LexVector]) -> tuple[Poset, PropertyCheck]:
    """Containment among the enumerated subgroups read off the element sample.

    Strict containments need a separating element in the sample; the
    returned check fails if representation and sample disagree.
    """
    groups = [tg.subgroup for tg in enumerate_isolated(chain)]
    members = {g.boundary.size: frozenset(i for i, f in enumerate(elems) if f in g) for g in groups}
    for a in groups:
        for b in groups:
            ext = members[a.boundary.size] <= members[b.boundary.size]
            if ext != (a <= b):
                return Poset((), frozenset()), PropertyCheck(
                    False, counterexample=("containment mismatch", a.name(), b.name())
                )
    poset = Poset.from_order(groups, lambda a, b: members[a.boundary.size] <= members[b.boundary.size])
    return poset, PropertyCheck(True, instances=len(groups) ** 2)


def check_tags(chain: Chain, elems: list[LexVector]) -> PropertyCheck:
    """IS(isolated(Γ)) = {H_t} and IP(isolated(Γ)) = {dH_t}, structurally."""
    poset, ok = extensional_poset(chain, elems)
    if not ok:
        return ok
    succ, pred = is_pred_is_succ(poset)
    h_ts = {IsolatedSubgroup.h(chain, t) for t in chain}
    dh_ts = {IsolatedSubgroup.dh(chain, t) for t in chain}
    tags = enumerate_isolated(chain)
    if set(succ) != h_ts or {tg.subgroup for tg in tags if tg.in_is} != h_ts:
        return PropertyCheck(False, counterexample=("IS mismatch", [g.name() for g in succ]))
    if set(pred) != dh_ts or {tg.subgroup for tg in tags if tg.in_ip} != dh_ts:
        return PropertyCheck(False, counterexample=("IP mismatch", [g.name() for g in pred]))
    return PropertyCheck(True, instances=len(tags))


def check_complete(chain: Chain, elems: list[LexVector], generators: int = 40, seed: int = 0) -> PropertyCheck:
    """No isolated subgroups beyond the enumerated ones.

    Every isolated subgroup is the union of the convex subgroups generated
    by its elements. On the sample, each nonzero generator f must generate
    exactly one enumerated subgroup (some H_t); a union of a chain of H_t's
    is again enumerated.
    """
    radius = max((abs(c) for e in elems for c in e.coords), default=0)
    n_max = radius + 1
    hs = [tg.subgroup for tg in enumerate_isolated(chain) if tg.in_is]
    in_h = {h: frozenset(i for i, g in enumerate(elems) if g in h) for h in hs}
    nonzero = [f for f in elems if not f.is_zero()]
    rng = random.Random(seed)
    pool = nonzero if len(nonzero) <= generators else rng.sample(nonzero, generators)
    pool += [LexVector.unit(chain, t) for t in chain]
    for k, f in enumerate(pool):
        generated = frozenset(i for i, g in enumerate(elems) if in_convex_hull_of(f, g, n_max))
        if sum(generated == s for s in in_h.values()) != 1:
            return PropertyCheck(False, instances=k, counterexample=f)
    return PropertyCheck(True, instances=len(pool))


@dataclass
class BijectionReport:
    mapping: dict[str, IsolatedSubgroup]
    injective: bool
    onto_is: bool
    order_reversing: bool

    @property
    def ok(self) -> bool:
        return self.injective and self.onto_is and self.order_reversing


def isolated_bijection(chain: Chain, elems: list[LexVector] | None = None) -> BijectionReport:
    """t -> H_t: a bijection onto the IS-tagged subgroups, reversing order.

    Order reversal is checked on the representation and, when ``elems`` is
    given, extensionally with the unit vector e_s separating H_s from H_t.
    """
    mapping = {t: IsolatedSubgroup.h(chain, t) for t in chain}
    injective = len(set(mapping.values())) == len(mapping)
    onto = set(mapping.values()) == {tg.subgroup for tg in enumerate_isolated(chain) if tg.in_is}
    reversing = True
    for s, t in itertools.combinations(chain.labels, 2):  # s < t
        hs, ht = mapping[s], mapping[t]
        reversing = reversing and ht < hs
        e_s = LexVector.unit(chain, s)
        reversing = reversing and e_s in hs and e_s not in ht
        if elems is not None:
            reversing = reversing and all(f in hs for f in elems if f in ht)
    return BijectionReport(mapping, injective, onto, reversing)


def final_set_decomposition(h: IsolatedSubgroup, elems: Iterable[LexVector] = ()) -> tuple[tuple[str, ...], PropertyCheck]:
    """A nonempty final subset J of T with H = ∪_{t in J} H_t.

    Returns ``(J, check)`` where the check re-verifies the union on ``elems``.
    """
    if h.is_zero():
        raise DegenerateInput("the zero subgroup has no such decomposition")
    j = h.boundary.right
    parts = [IsolatedSubgroup.h(h.chain, t) for t in j]
    n = 0
    for f in elems:
        n += 1
        if (f in h) != any(f in p for p in parts):
            return j, PropertyCheck(False, instances=n, counterexample=f)
    return j, PropertyCheck(True, instances=n)


@dataclass
class QuotientReport:
    t: str
    lower: IsolatedSubgroup
    upper: IsolatedSubgroup
    neighbors: bool
    additive: bool
    surjective: bool
    kernel_exact: bool
    samples: int
    counterexample: object = None

    @property
    def ok(self) -> bool:
        return self.neighbors and self.additive and self.surjective and self.kernel_exact

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "lower": self.lower.name() if not self.lower.is_zero() else "{0}",
            "upper": self.upper.name(),
            "neighbors": self.neighbors,
            "additive": self.additive,
            "surjective": self.surjective,
            "kernel_exact": self.kernel_exact,
            "samples": self.samples,
        }


def discrete_quotient_check(
    chain: Chain, t: str, samples: int = 100, radius: int = 3, seed: int = 0
) -> QuotientReport:
    """dH_t ⊂ H_t are neighbours and f -> f(t) identifies H_t / dH_t with ℤ.

    Checks additivity on random pairs of H_t, hits every integer in
    [-radius, radius] and that the kernel on the sample is exactly dH_t.
    """
    idx = chain.index(t)
    upper, lower = IsolatedSubgroup.h(chain, t), IsolatedSubgroup.dh(chain, t)
    tags = enumerate_isolated(chain)
    pos = [tg.subgroup for tg in tags]
    neighbors = pos.index(upper) == pos.index(lower) + 1
    rng = random.Random(seed)

    def draw() -> LexVector:
        c = [0] * len(chain)
        for i in range(idx, len(chain)):
            c[i] = rng.randint(-radius, radius)
        return LexVector(chain, tuple(c))

    additive = kernel = True
    bad = None
    for _ in range(samples):
        f, g = draw(), draw()
        if f not in upper or (f + g)[t] != f[t] + g[t]:
            additive, bad = False, (f, g)
            break
        if (f[t] == 0) != (f in lower):
            kernel, bad = False, f
            break
    surjective = all(
        LexVector.unit(chain, t, z) in upper and LexVector.unit(chain, t, z)[t] == z
        for z in range(-radius, radius + 1)
    )
    return QuotientReport(t, lower, upper, neighbors, additive, surjective, kernel, samples, bad)
