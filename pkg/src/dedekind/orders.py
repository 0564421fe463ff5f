"""Finite chains, finite posets and the cut space D(T) of a chain.

A cut of a finite chain is determined by its left part, which is always a
prefix, so a :class:`Cut` stores only the prefix length.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Any, Callable, Hashable, Iterable, Sequence


class ElementNotFound(KeyError):
    """A label that is not an element of the chain was requested."""


class InvalidOrder(ValueError):
    """Relation handed to :class:`Poset` is not a partial order."""


@dataclass(frozen=True)
class Chain:
    """A finite totally ordered set; ``labels`` is listed in ascending order."""

    labels: tuple[str, ...] = ()

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise InvalidOrder(f"duplicate labels in chain: {labels}")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self.labels

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ElementNotFound(label) from None

    def lt(self, a: str, b: str) -> bool:
        return self.index(a) < self.index(b)

    def poset(self) -> "Poset":
        return Poset.from_order(self.labels, lambda a, b: self.index(a) <= self.index(b))

    @classmethod
    def of_size(cls, n: int) -> "Chain":
        """The chain ``t0 < t1 < ... < t(n-1)``."""
        return cls(tuple(f"t{i}" for i in range(n)))


@total_ordering
@dataclass(frozen=True)
class Cut:
    """The cut of ``chain`` whose left part is the first ``size`` labels."""

    chain: Chain
    size: int

    def __post_init__(self):
        if not 0 <= self.size <= len(self.chain):
            raise ValueError(f"cut size {self.size} outside 0..{len(self.chain)}")

    @property
    def left(self) -> tuple[str, ...]:
        return self.chain.labels[: self.size]

    @property
    def right(self) -> tuple[str, ...]:
        return self.chain.labels[self.size :]

    def __lt__(self, other: "Cut") -> bool:
        if not isinstance(other, Cut):
            return NotImplemented
        if other.chain != self.chain:
            raise ValueError("cuts of different chains are incomparable")
        return self.size < other.size

    def __repr__(self) -> str:
        return f"Cut(L={list(self.left)}, R={list(self.right)})"

    def to_json(self) -> dict:
        return {"left": list(self.left), "right": list(self.right), "left_size": self.size}


def cuts(chain: Chain) -> list[Cut]:
    """All cuts of ``chain`` in ascending order, from (∅, T) to (T, ∅)."""
    return [Cut(chain, k) for k in range(len(chain) + 1)]


def phi1(chain: Chain, label: str) -> Cut:
    """((-inf, label], (label, inf))"""
    return Cut(chain, chain.index(label) + 1)


def phi2(chain: Chain, label: str) -> Cut:
    """((-inf, label), [label, inf))"""
    return Cut(chain, chain.index(label))


def cut_plus(chain: Chain, subset: Iterable[str]) -> Cut:
    """The smallest cut whose left part contains ``subset``."""
    positions = [chain.index(s) for s in subset]
    return Cut(chain, max(positions) + 1 if positions else 0)


@dataclass(frozen=True)
class Poset:
    """A finite poset given extensionally.

    ``leq`` holds every pair ``(a, b)`` with ``a <= b``; use :meth:`from_pairs`
    to close a generating relation or :meth:`from_order` to tabulate a
    comparison function.
    """

    elements: tuple
    leq: frozenset = field(repr=False)

    def __post_init__(self):
        elems = tuple(self.elements)
        if len(set(elems)) != len(elems):
            raise InvalidOrder("duplicate poset elements")
        object.__setattr__(self, "elements", elems)
        rel = frozenset(self.leq)
        object.__setattr__(self, "leq", rel)
        carrier = set(elems)
        for a, b in rel:
            if a not in carrier or b not in carrier:
                raise InvalidOrder(f"pair ({a!r}, {b!r}) leaves the carrier")
        for a in elems:
            if (a, a) not in rel:
                raise InvalidOrder(f"not reflexive at {a!r}")
        for a, b in rel:
            if a != b and (b, a) in rel:
                raise InvalidOrder(f"not antisymmetric: {a!r}, {b!r}")
        for a, b in rel:
            for c in elems:
                if (b, c) in rel and (a, c) not in rel:
                    raise InvalidOrder(f"not transitive: {a!r} <= {b!r} <= {c!r}")

    @classmethod
    def from_pairs(cls, elements: Sequence[Hashable], pairs: Iterable[tuple]) -> "Poset":
        """Reflexive-transitive closure of the generating ``pairs``."""
        elements = tuple(elements)
        rel = {(a, a) for a in elements} | {tuple(p) for p in pairs}
        for k in elements:
            for i in elements:
                if (i, k) not in rel:
                    continue
                for j in elements:
                    if (k, j) in rel:
                        rel.add((i, j))
        return cls(elements, frozenset(rel))

    @classmethod
    def from_order(cls, elements: Sequence[Hashable], le: Callable[[Any, Any], bool]) -> "Poset":
        elements = tuple(elements)
        return cls(elements, frozenset((a, b) for a in elements for b in elements if le(a, b)))

    def le(self, a, b) -> bool:
        return (a, b) in self.leq

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.leq

    def comparable(self, a, b) -> bool:
        return self.le(a, b) or self.le(b, a)

    def covers(self) -> list[tuple]:
        """Covering pairs ``(a, b)``: a < b with nothing strictly between."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(
                    self.lt(a, c) and self.lt(c, b) for c in self.elements
                ):
                    out.append((a, b))
        return out

    def is_chain(self, subset: Iterable | None = None) -> bool:
        items = self.elements if subset is None else tuple(subset)
        return all(self.comparable(a, b) for a, b in itertools.combinations(items, 2))

    def minimal(self) -> list:
        return [a for a in self.elements if not any(self.lt(b, a) for b in self.elements)]

    def maximal(self) -> list:
        return [a for a in self.elements if not any(self.lt(a, b) for b in self.elements)]

    def infimum(self, subset: Iterable):
        """Greatest lower bound of ``subset`` in the poset, or None."""
        subset = tuple(subset)
        lower = [x for x in self.elements if all(self.le(x, s) for s in subset)]
        best = [x for x in lower if all(self.le(y, x) for y in lower)]
        return best[0] if best else None

    def supremum(self, subset: Iterable):
        subset = tuple(subset)
        upper = [x for x in self.elements if all(self.le(s, x) for s in subset)]
        best = [x for x in upper if all(self.le(x, y) for y in upper)]
        return best[0] if best else None

    def is_initial(self, subset: Iterable) -> bool:
        s = set(subset)
        return all(a in s for b in s for a in self.elements if self.le(a, b))

    def is_final(self, subset: Iterable) -> bool:
        s = set(subset)
        return all(a in s for b in s for a in self.elements if self.le(b, a))

    def restrict(self, subset: Iterable) -> "Poset":
        keep = [x for x in self.elements if x in set(subset)]
        ks = set(keep)
        return Poset(tuple(keep), frozenset((a, b) for a, b in self.leq if a in ks and b in ks))


def cut_poset(chain: Chain) -> Poset:
    """D(T) as a poset on :class:`Cut` objects."""
    return Poset.from_order(cuts(chain), lambda a, b: a.size <= b.size)


def is_pred_is_succ(poset: Poset) -> tuple[list, list]:
    """Return ``(IS, IP)``.

    IS holds the elements having an immediate predecessor, IP those having an
    immediate successor; both listed in the poset's element order.
    """
    cov = poset.covers()
    has_pred = {b for _, b in cov}
    has_succ = {a for a, _ in cov}
    return (
        [x for x in poset.elements if x in has_pred],
        [x for x in poset.elements if x in has_succ],
    )


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of an exhaustive property check.

    ``vacuous`` marks properties that hold for every finite input, so the
    check cannot fail on the objects this module accepts.
    """

    holds: bool
    vacuous: bool = False
    instances: int = 0
    counterexample: Any = None

    def __bool__(self) -> bool:
        return self.holds


def k1(poset: Poset) -> PropertyCheck:
    """Every nonempty chain has an infimum and a supremum.

    Chains are enumerated depth-first with bitmasks; the bound sets of a chain
    are intersections of principal down/up sets, and whether a bound set has
    a greatest (least) element is memoized per mask.
    """
    elems = poset.elements
    n = len(elems)
    down = [sum(1 << j for j in range(n) if poset.le(elems[j], elems[i])) for i in range(n)]
    up = [sum(1 << j for j in range(n) if poset.le(elems[i], elems[j])) for i in range(n)]
    comp = [down[i] | up[i] for i in range(n)]
    full = (1 << n) - 1
    greatest: dict[int, bool] = {}
    least: dict[int, bool] = {}

    def has_greatest(mask: int) -> bool:
        if mask not in greatest:
            greatest[mask] = any(mask >> i & 1 and mask & down[i] == mask for i in range(n))
        return greatest[mask]

    def has_least(mask: int) -> bool:
        if mask not in least:
            least[mask] = any(mask >> i & 1 and mask & up[i] == mask for i in range(n))
        return least[mask]

    count = 0
    stack = [(0, full, full, full, ())]
    while stack:
        start, lo, hi, ok, path = stack.pop()
        for i in range(n - 1, start - 1, -1):
            if not ok >> i & 1:
                continue
            lo2, hi2 = lo & down[i], hi & up[i]
            chain = path + (elems[i],)
            count += 1
            if not (has_greatest(lo2) and has_least(hi2)):
                return PropertyCheck(False, True, count, chain)
            stack.append((i + 1, lo2, hi2, ok & comp[i], chain))
    return PropertyCheck(True, True, count)


def k2(poset: Poset) -> PropertyCheck:
    """Between any a < b sit immediate neighbours c < d with a <= c, d <= b."""
    cov = poset.covers()
    count = 0
    for a in poset.elements:
        for b in poset.elements:
            if not poset.lt(a, b):
                continue
            count += 1
            if not any(poset.le(a, c) and poset.le(d, b) for c, d in cov):
                return PropertyCheck(False, True, count, (a, b))
    return PropertyCheck(True, True, count)


def _dot_id(x) -> str:
    return json.dumps(str(x))


def hasse_dot(poset: Poset, name: str = "hasse", label: Callable[[Any], str] = str) -> str:
    """Hasse diagram in DOT; edges run upward from each element to its covers."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in poset.elements:
        lines.append(f"  {_dot_id(label(x))};")
    for a, b in poset.covers():
        lines.append(f"  {_dot_id(label(a))} -> {_dot_id(label(b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load(doc: dict | str):
    """Read ``{"chain": [...]}`` or ``{"poset": {"elements": ..., "leq": ...}}``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("expected a JSON object")
    if "chain" in doc:
        labels = doc["chain"]
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ValueError("'chain' must be a list of strings")
        return Chain(tuple(labels))
    if "poset" in doc:
        body = doc["poset"]
        elements = body.get("elements", [])
        pairs = body.get("leq", [])
        if not all(isinstance(x, str) for x in elements):
            raise ValueError("poset elements must be strings")
        for p in pairs:
            if len(p) != 2 or p[0] not in elements or p[1] not in elements:
                raise ValueError(f"bad leq pair {p!r}")
        return Poset.from_pairs(elements, [tuple(p) for p in pairs])
    raise ValueError("expected a 'chain' or 'poset' key")
