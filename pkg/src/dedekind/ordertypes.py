"""Symbolic linear order types: finite sums of Fin(n), ω, ω*, ζ and η.

Expressions are written ``w*+3+w`` (``w`` = ω, ``w*`` = ω*, ``z`` = ζ,
``q`` = η, integers = finite chains). Normal forms come from a small
rewrite system whose rules are order isomorphisms; two expressions are
declared isomorphic when their normal forms coincide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence


class OrderTypeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnsupportedExpression(ValueError):
    """D, IS and IP leave the primitive set once η is involved."""


@dataclass(frozen=True)
class Prim:
    kind: str  # "fin", "omega", "omega*", "zeta", "eta"
    n: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown primitive {self.kind!r}")
        if self.kind != "fin" and self.n:
            raise ValueError("only Fin carries a size")
        if self.n < 0:
            raise ValueError("Fin size must be >= 0")

    def __str__(self) -> str:
        return str(self.n) if self.kind == "fin" else _SYMBOL[self.kind]

    @property
    def has_min(self) -> bool:
        return self.n > 0 if self.kind == "fin" else self.kind == "omega"

    @property
    def has_max(self) -> bool:
        return self.n > 0 if self.kind == "fin" else self.kind == "omega*"


_KINDS = ("fin", "omega", "omega*", "zeta", "eta")
_SYMBOL = {"omega": "w", "omega*": "w*", "zeta": "z", "eta": "q"}

OMEGA, OMEGA_STAR, ZETA, ETA = Prim("omega"), Prim("omega*"), Prim("zeta"), Prim("eta")


def Fin(n: int) -> Prim:
    return Prim("fin", n)


@dataclass(frozen=True)
class OrderType:
    summands: tuple[Prim, ...]

    def __post_init__(self):
        if not self.summands:
            raise ValueError("an order type needs at least one summand")
        object.__setattr__(self, "summands", tuple(self.summands))

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.summands)

    def __add__(self, other: "OrderType") -> "OrderType":
        return OrderType(self.summands + other.summands)

    @property
    def has_eta(self) -> bool:
        return ETA in self.summands

    @property
    def is_finite(self) -> bool:
        return all(p.kind == "fin" for p in self.summands)


def expr(*summands: Prim) -> OrderType:
    return OrderType(tuple(summands))


_TOKEN = re.compile(r"\s*(?:(\d+)|(w\s*\*)|(w)|(z)|(q)|(\+))")


def parse(text: str) -> OrderType:
    """Parse ``term ('+' term)*`` with terms INT | w | w* | z | q."""
    pos = 0
    out: list[Prim] = []
    expect_term = True
    last_plus = -1
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise OrderTypeSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(6):
            if expect_term:
                raise OrderTypeSyntaxError("expected a term before '+'", start)
            expect_term = True
            last_plus = start
        else:
            if not expect_term:
                raise OrderTypeSyntaxError("expected '+' between terms", start)
            if m.group(1):
                out.append(Fin(int(m.group(1))))
            elif m.group(2):
                out.append(OMEGA_STAR)
            elif m.group(3):
                out.append(OMEGA)
            elif m.group(4):
                out.append(ZETA)
            else:
                out.append(ETA)
            expect_term = False
        pos = m.end()
    if expect_term:
        if out:
            raise OrderTypeSyntaxError("trailing '+'", last_plus)
        raise OrderTypeSyntaxError("expected a term", pos)
    return OrderType(tuple(out))


def _rewrite_once(ps: list[Prim]) -> list[Prim] | None:
    for i, p in enumerate(ps):
        if p == Fin(0) and len(ps) > 1:
            return ps[:i] + ps[i + 1 :]
    for i in range(len(ps) - 1):
        a, b = ps[i], ps[i + 1]
        rep = None
        if a.kind == "fin" and b.kind == "fin":
            rep = [Fin(a.n + b.n)]
        elif a.kind == "fin" and b == OMEGA:
            rep = [OMEGA]
        elif a == OMEGA_STAR and b.kind == "fin":
            rep = [OMEGA_STAR]
        elif a == OMEGA_STAR and b == OMEGA:
            rep = [ZETA]
        elif a == ETA and b == ETA:
            rep = [ETA]
        if rep is not None:
            return ps[:i] + rep + ps[i + 2 :]
    for i in range(len(ps) - 2):
        if ps[i] == ETA and ps[i + 1] == Fin(1) and ps[i + 2] == ETA:
            return ps[:i] + [ETA] + ps[i + 3 :]
    return None


def normalize(e: OrderType) -> OrderType:
    """Rewrite to the fixed point of the isomorphism rules.

    Fin(0) vanishes (an all-empty sum stays Fin(0)); Fin(m)+Fin(n) → Fin(m+n);
    Fin(n)+ω → ω; ω*+Fin(n) → ω*; ω*+ω → ζ; η+η → η; η+1+η → η.
    """
    ps = list(e.summands)
    while True:
        nxt = _rewrite_once(ps)
        if nxt is None:
            return OrderType(tuple(ps))
        ps = nxt


def _norm(e: OrderType) -> tuple[Prim, ...]:
    ps = normalize(e).summands
    return () if ps == (Fin(0),) else ps


@dataclass(frozen=True)
class Attributes:
    empty: bool
    has_min: bool
    has_max: bool
    k1: bool
    k2: bool
    dense: bool

    def to_json(self) -> dict:
        return {
            "empty": self.empty,
            "has_min": self.has_min,
            "has_max": self.has_max,
            "k1": self.k1,
            "k2": self.k2,
            "dense": self.dense,
        }


def attributes(e: OrderType) -> Attributes:
    """Endpoint, (K1), (K2) and density flags read off the normal form."""
    ps = _norm(e)
    if not ps:
        return Attributes(True, False, False, True, True, True)
    k = len(ps)
    no_eta = ETA not in ps
    k1 = no_eta
    for i, p in enumerate(ps):
        if p.kind in ("omega", "zeta") and not (i < k - 1 and ps[i + 1].has_min):
            k1 = False
        if p.kind in ("omega*", "zeta") and not (i > 0 and ps[i - 1].has_max):
            k1 = False
    # no immediate neighbours anywhere: only η and single points, never two points adjacent
    dense = all(p == ETA or p == Fin(1) for p in ps) and not any(
        ps[i] == Fin(1) and ps[i + 1] == Fin(1) for i in range(k - 1)
    )
    return Attributes(False, ps[0].has_min, ps[-1].has_max, k1, no_eta, dense)


def _require_eta_free(e: OrderType, what: str):
    if e.has_eta:
        raise UnsupportedExpression(f"{what} of an expression containing η is not a finite sum of primitives")


_D = {
    "omega": (OMEGA, Fin(1)),
    "omega*": (Fin(1), OMEGA_STAR),
    "zeta": (Fin(1), ZETA, Fin(1)),
}
_D_NO_MIN = {
    "omega": (OMEGA, Fin(1)),
    "omega*": (OMEGA_STAR,),
    "zeta": (ZETA, Fin(1)),
}


def dedekind_completion(e: OrderType) -> OrderType:
    """D(e): the order type of the cuts of e.

    D(p1+...+pk) = D(p1) + D⁻(p2) + ... + D⁻(pk), where D⁻ drops the bottom
    cut (it coincides with the top cut of the previous summand).
    """
    _require_eta_free(e, "D")
    ps = _norm(e)
    if not ps:
        return OrderType((Fin(1),))
    out: list[Prim] = []
    for i, p in enumerate(ps):
        if p.kind == "fin":
            out.append(Fin(p.n + 1) if i == 0 else p)
        else:
            out.extend(_D[p.kind] if i == 0 else _D_NO_MIN[p.kind])
    return normalize(OrderType(tuple(out)))


def _succ_within(p: Prim) -> Prim:
    # elements of p with an immediate predecessor inside p
    return Fin(max(p.n - 1, 0)) if p.kind == "fin" else p


def is_expr(e: OrderType) -> OrderType:
    """IS(e): the elements having an immediate predecessor."""
    _require_eta_free(e, "IS")
    ps = _norm(e)
    out = []
    for i, p in enumerate(ps):
        if p.has_min and i > 0 and ps[i - 1].has_max:
            out.append(p)
        else:
            out.append(_succ_within(p))
    return normalize(OrderType(tuple(out) or (Fin(0),)))


def ip_expr(e: OrderType) -> OrderType:
    """IP(e): the elements having an immediate successor."""
    _require_eta_free(e, "IP")
    ps = _norm(e)
    out = []
    for i, p in enumerate(ps):
        if p.has_max and i < len(ps) - 1 and ps[i + 1].has_min:
            out.append(p)
        else:
            out.append(_succ_within(p))
    return normalize(OrderType(tuple(out) or (Fin(0),)))


def min_is_immediate_predecessor(e: OrderType) -> bool:
    """Does the least element of e exist and have an immediate successor?"""
    ps = _norm(e)
    if not ps or not ps[0].has_min:
        return False
    p = ps[0]
    if p.kind == "omega" or (p.kind == "fin" and p.n >= 2):
        return True
    return len(ps) > 1 and ps[1].has_min


@dataclass(frozen=True)
class DedekindVerdict:
    dedekind: bool
    witness: OrderType | None
    witness_verified: bool

    def to_json(self) -> dict:
        return {
            "dedekind": self.dedekind,
            "witness": str(self.witness) if self.witness is not None else None,
            "witness_verified": self.witness_verified,
            "isomorphism": "by normal form",
        }


def is_dedekind(e: OrderType) -> DedekindVerdict:
    """Is e ≅ D(u) for some order u?  Decided as (K1) ∧ (K2) on a nonempty order.

    For η-free e the witness u = IS(e) is returned and D(u) is compared
    with e by normal form.
    """
    a = attributes(e)
    verdict = a.k1 and a.k2 and not a.empty
    if not verdict or e.has_eta:
        return DedekindVerdict(verdict, None, False)
    u = is_expr(e)
    return DedekindVerdict(True, u, normalize(dedekind_completion(u)) == normalize(e))


@dataclass(frozen=True)
class SymbolicDensity:
    succ_image_dense: bool  # φ1(T) = IS(D(T)) dense in D(T)
    pred_image_dense: bool  # φ2(T) = IP(D(T)) dense in D(T)
    criterion_no_min: bool  # T has no least element
    agrees: bool


def symbolic_density(e: OrderType) -> SymbolicDensity:
    """Zariski density of φ1(T) and φ2(T) in D(T), read off D(e).

    Closed sets of D(T) are the up-sets [C, ∞), so a subset is dense iff
    its infimum is the least cut. D(T) satisfies (K2), hence the immediate
    predecessors accumulate at the bottom whenever D(T) has two points,
    while the immediate successors do so iff the least cut has no
    immediate successor.
    """
    _require_eta_free(e, "density")
    d = dedekind_completion(e)
    nonempty = bool(_norm(e))
    succ_dense = nonempty and not min_is_immediate_predecessor(d)
    pred_dense = nonempty and (min_is_immediate_predecessor(d) or attributes(d).k2)
    no_min = not attributes(e).has_min
    return SymbolicDensity(
        succ_dense, pred_dense, no_min, succ_dense == (nonempty and no_min) and pred_dense == nonempty
    )


def evaluate(e: OrderType) -> dict:
    """Everything the ``ordertype eval`` command reports."""
    out = {"input": str(e), "normal_form": str(normalize(e)), "attributes": attributes(e).to_json()}
    if e.has_eta:
        out.update(D=None, IS=None, IP=None, note="D, IS and IP are not expressible when η occurs")
    else:
        out.update(D=str(dedekind_completion(e)), IS=str(is_expr(e)), IP=str(ip_expr(e)))
    out["dedekind"] = is_dedekind(e).to_json()
    return out


def all_eta_free(max_summands: int = 4, max_fin: int = 4, eta: bool = False) -> list[OrderType]:
    """Every expression with 1..max_summands summands and Fin sizes <= max_fin."""
    import itertools

    prims: list[Prim] = [Fin(n) for n in range(max_fin + 1)] + [OMEGA, OMEGA_STAR, ZETA]
    if eta:
        prims.append(ETA)
    out = []
    for k in range(1, max_summands + 1):
        for combo in itertools.product(prims, repeat=k):
            out.append(OrderType(combo))
    return out


def summands_str(ps: Sequence[Prim]) -> str:
    return "+".join(str(p) for p in ps) or "0"
