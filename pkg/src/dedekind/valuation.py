"""A desk-scale discrete valuation domain with value group Γ = ℤ^T.

Elements of the field are quotients of finite sums of monomials x^γ
(γ in Γ) with rational coefficients. The valuation of a nonzero sum is its
lex-least exponent, extended to quotients by subtraction. The valuation
ring O_v is {v >= 0} ∪ {0} and its primes are indexed by the cuts of T.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .families import SetFamily, chain_cut_isomorphism
from .lexgroup import IncompatibleParents, IsolatedSubgroup, LexVector
from .orders import Chain, Cut, PropertyCheck, cuts, is_pred_is_succ, phi1, phi2, Poset


class DomainError(ValueError):
    """Element lies outside the valuation ring."""


class _Infinity:
    """Valuation of zero; above every vector."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("inf")


INFINITY = _Infinity()

Exponent = tuple  # dense coordinates in chain order; tuple order is the lex order


@dataclass(frozen=True)
class HahnPoly:
    """A finite sum of monomials c·x^γ, terms sorted by ascending exponent."""

    chain: Chain
    terms: tuple[tuple[Exponent, Fraction], ...] = ()

    @classmethod
    def build(cls, chain: Chain, terms: Mapping | Iterable) -> "HahnPoly":
        acc: dict[tuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            if isinstance(exp, LexVector):
                if exp.chain != chain:
                    raise IncompatibleParents("exponent over another chain")
                exp = exp.coords
            exp = tuple(int(x) for x in exp)
            if len(exp) != len(chain):
                raise ValueError("exponent length does not match the chain")
            if not isinstance(coef, (int, Fraction)):
                coef = Fraction(coef)
            acc[exp] = acc.get(exp, 0) + coef
        return cls(chain, tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def monomial(cls, chain: Chain, exp, coef=1) -> "HahnPoly":
        return cls.build(chain, [(exp, coef)])

    @classmethod
    def one(cls, chain: Chain) -> "HahnPoly":
        return cls.monomial(chain, (0,) * len(chain))

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: "HahnPoly"):
        if other.chain != self.chain:
            raise IncompatibleParents("polynomials over different chains")

    def __add__(self, other: "HahnPoly") -> "HahnPoly":
        self._same(other)
        return HahnPoly.build(self.chain, list(self.terms) + list(other.terms))

    def __neg__(self) -> "HahnPoly":
        return HahnPoly(self.chain, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "HahnPoly") -> "HahnPoly":
        return self + (-other)

    def __mul__(self, other: "HahnPoly") -> "HahnPoly":
        self._same(other)
        prod = [
            (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            for e1, c1 in self.terms
            for e2, c2 in other.terms
        ]
        return HahnPoly.build(self.chain, prod)

    def shift(self, exp: Exponent) -> "HahnPoly":
        """Multiply by x^exp."""
        return HahnPoly(
            self.chain, tuple((tuple(a + b for a, b in zip(e, exp)), c) for e, c in self.terms)
        )

    def scale(self, c: Fraction) -> "HahnPoly":
        if c == 1:
            return self
        return HahnPoly.build(self.chain, [(e, k * c) for e, k in self.terms])

    def lowest(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no lowest term")
        return self.terms[0][0]

    def to_json(self) -> list[dict]:
        return [
            {"exp": LexVector(self.chain, e).to_json(), "coef": str(c)} for e, c in self.terms
        ]

    @classmethod
    def from_json(cls, chain: Chain, items: list[dict]) -> "HahnPoly":
        out = []
        for item in items:
            out.append((LexVector.from_mapping(chain, item.get("exp", {})), Fraction(item["coef"])))
        return cls.build(chain, out)


@dataclass(frozen=True, eq=False)
class FieldElement:
    """num / den, divided through by x^{v(den)} so the denominator has valuation 0."""

    num: HahnPoly
    den: HahnPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num._same(self.den)
        lo = self.den.terms[0][0]
        if any(lo):
            neg = tuple(-a for a in lo)
            object.__setattr__(self, "num", self.num.shift(neg))
            object.__setattr__(self, "den", self.den.shift(neg))

    @property
    def chain(self) -> Chain:
        return self.num.chain

    @classmethod
    def of(cls, num: HahnPoly, den: HahnPoly | None = None) -> "FieldElement":
        return cls(num, den if den is not None else HahnPoly.one(num.chain))

    @classmethod
    def monomial(cls, chain: Chain, exp, coef=1) -> "FieldElement":
        return cls.of(HahnPoly.monomial(chain, exp, coef))

    @classmethod
    def zero(cls, chain: Chain) -> "FieldElement":
        return cls.of(HahnPoly(chain))

    @classmethod
    def one(cls, chain: Chain) -> "FieldElement":
        return cls.of(HahnPoly.one(chain))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.num, self.den)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.num * other.num, self.den * other.den)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.den, self.num)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, chain: Chain, doc: dict) -> "FieldElement":
        num = HahnPoly.from_json(chain, doc.get("num", []))
        den = HahnPoly.from_json(chain, doc["den"]) if doc.get("den") else HahnPoly.one(chain)
        return cls(num, den)


def valuation(e: FieldElement):
    """v(num) - v(den) as a LexVector, or INFINITY for zero."""
    if e.is_zero():
        return INFINITY
    a, b = e.num.lowest(), e.den.lowest()
    return LexVector(e.chain, tuple(x - y for x, y in zip(a, b)))


def in_valuation_ring(e: FieldElement) -> bool:
    v = valuation(e)
    return v is INFINITY or v.coords >= (0,) * len(v.coords)


def in_t_prime(e: FieldElement, t: str) -> bool:
    """Is some coordinate v(e)(k) with k <= t nonzero?"""
    if not in_valuation_ring(e):
        raise DomainError("element is not in the valuation ring")
    v = valuation(e)
    if v is INFINITY:
        return True
    i = v.min_support_index()
    return i is not None and i <= e.chain.index(t)


@dataclass(frozen=True)
class PrimeIdeal:
    """The prime attached to the cut A: nonzero a belongs iff min supp(v(a)) ∈ A^L."""

    chain: Chain
    cut: Cut

    def __contains__(self, e: FieldElement) -> bool:
        if not in_valuation_ring(e):
            raise DomainError("element is not in the valuation ring")
        v = valuation(e)
        if v is INFINITY:
            return True
        i = v.min_support_index()
        return i is not None and i < self.cut.size

    def name(self) -> str:
        if self.cut.size == 0:
            return "0"
        return f"P_{self.cut.left[-1]}"

    def is_maximal(self) -> bool:
        return self.cut.size == len(self.chain)


def subgroup_of_cut(cut: Cut) -> IsolatedSubgroup:
    """∪_{t ∈ A^R} H_t, and {0} for the top cut."""
    return IsolatedSubgroup(cut.chain, cut)


def psi_predicate(h: IsolatedSubgroup) -> Callable[[FieldElement], bool]:
    """a -> (a = 0 or v(a) ∉ H), read literally."""

    def member(a: FieldElement) -> bool:
        if not in_valuation_ring(a):
            raise DomainError("element is not in the valuation ring")
        v = valuation(a)
        return v is INFINITY or v not in h

    return member


def psi(h: IsolatedSubgroup) -> PrimeIdeal:
    """The prime {a ∈ O_v : v(a) ∉ H}; it is indexed by H's boundary cut."""
    return PrimeIdeal(h.chain, h.boundary)


def mu(cut: Cut) -> PrimeIdeal:
    """D(T) -> Spec(O_v), composed through the isolated subgroups."""
    return psi(subgroup_of_cut(cut))


# --- sampling -----------------------------------------------------------------


@dataclass(frozen=True)
class SampleConfig:
    max_terms: int = 4
    radius: int = 3
    coef_range: int = 3


def random_poly(chain: Chain, rng: random.Random, cfg: SampleConfig = SampleConfig()) -> HahnPoly:
    """A nonzero polynomial with 1..max_terms terms and exponents in the box."""
    while True:
        k = rng.randint(1, cfg.max_terms)
        terms = []
        for _ in range(k):
            exp = tuple(rng.randint(-cfg.radius, cfg.radius) for _ in chain)
            num = rng.choice([i for i in range(-cfg.coef_range, cfg.coef_range + 1) if i])
            den = rng.randint(1, cfg.coef_range)
            terms.append((exp, Fraction(num, den)))
        p = HahnPoly.build(chain, terms)
        if not p.is_zero():
            return p


def random_element(chain: Chain, rng: random.Random, cfg: SampleConfig = SampleConfig()) -> FieldElement:
    """A nonzero field element; the denominator is a monomial a third of the time."""
    num = random_poly(chain, rng, cfg)
    if rng.random() < 1 / 3:
        exp = tuple(rng.randint(-cfg.radius, cfg.radius) for _ in chain)
        den = HahnPoly.monomial(chain, exp)
    else:
        den = random_poly(chain, rng, cfg)
    return FieldElement(num, den)


def random_ring_element(chain: Chain, rng: random.Random, cfg: SampleConfig = SampleConfig()) -> FieldElement:
    """A nonzero element of O_v (a random element, inverted if its value is negative)."""
    e = random_element(chain, rng, cfg)
    return e if in_valuation_ring(e) else e.inverse()


def random_in_ideal(p: PrimeIdeal, rng: random.Random, cfg: SampleConfig = SampleConfig()) -> FieldElement:
    """r·x^{e_t} with t drawn from the left part of the prime's cut."""
    if p.cut.size == 0:
        return FieldElement.zero(p.chain)
    t = rng.choice(p.cut.left)
    gen = FieldElement.monomial(p.chain, LexVector.unit(p.chain, t))
    return random_ring_element(p.chain, rng, cfg) * gen


# --- checks -------------------------------------------------------------------


def _vadd(a, b):
    if a is INFINITY or b is INFINITY:
        return INFINITY
    return a + b


def _vle(a, b) -> bool:
    if b is INFINITY:
        return True
    if a is INFINITY:
        return False
    return a.coords <= b.coords


def _vmin(a, b):
    return a if _vle(a, b) else b


def axioms_check(chain: Chain, samples: int = 1000, seed: int = 0, cfg: SampleConfig = SampleConfig()) -> dict[str, PropertyCheck]:
    """A1, A2, A3 and representative independence of v on random elements.

    A2 is an equality; A3 is checked with equality whenever v(x) != v(y).
    """
    rng = random.Random(seed)
    zero = FieldElement.zero(chain)
    out = {}

    def run(name, body):
        for i in range(samples):
            bad = body()
            if bad is not None:
                out[name] = PropertyCheck(False, instances=i + 1, counterexample=bad)
                return
        out[name] = PropertyCheck(True, instances=samples)

    def a1():
        x = random_element(chain, rng, cfg)
        if valuation(x) is INFINITY or valuation(x - x) is not INFINITY:
            return x.to_json()
        if valuation(zero) is not INFINITY:
            return "zero"
        return None

    def a2():
        x, y = random_element(chain, rng, cfg), random_element(chain, rng, cfg)
        if rng.random() < 0.05:
            y = zero
        if valuation(x * y) != _vadd(valuation(x), valuation(y)):
            return [x.to_json(), y.to_json()]
        return None

    def a3():
        x, y = random_element(chain, rng, cfg), random_element(chain, rng, cfg)
        if rng.random() < 0.2:
            y = y - x  # force cancellation in x + y
        vx, vy, vs = valuation(x), valuation(y), valuation(x + y)
        lo = _vmin(vx, vy)
        if not _vle(lo, vs) or (vx != vy and vs != lo):
            return [x.to_json(), y.to_json()]
        return None

    def rep():
        x = random_element(chain, rng, cfg)
        r = random_poly(chain, rng, cfg)
        other = FieldElement(x.num * r, x.den * r)
        if other != x or valuation(other) != valuation(x):
            return [x.to_json(), r.to_json()]
        return None

    def triple():
        x, y, z = (random_element(chain, rng, cfg) for _ in range(3))
        s = x + y + z
        lo = _vmin(_vmin(valuation(x), valuation(y)), valuation(z))
        if not _vle(lo, valuation(s)):
            return [x.to_json(), y.to_json(), z.to_json()]
        return None

    run("A1", a1)
    run("A2", a2)
    run("A3", a3)
    run("A3-triple", triple)
    run("representative-independence", rep)
    return out


@dataclass
class SpectrumModel:
    chain: Chain
    primes: list[PrimeIdeal]
    succ_points: list[PrimeIdeal] = field(default_factory=list)
    pred_points: list[PrimeIdeal] = field(default_factory=list)

    def to_json(self) -> dict:
        n = len(self.chain)
        rows = []
        for p in self.primes:
            k = p.cut.size
            row = {
                "cut": p.cut.to_json(),
                "prime": p.name(),
                "IS": p in self.succ_points,
                "IP": p in self.pred_points,
                "maximal": p.is_maximal(),
            }
            if k:
                t = p.cut.left[-1]
                row["generator_exponent"] = {t: 1}
                row["principal"] = k == n
                row["radical_of_generator"] = True
            rows.append(row)
        return {"chain": list(self.chain.labels), "primes": rows}


@dataclass
class SpectrumReport:
    bijective: bool
    order_preserving: bool
    ideal_axioms: PropertyCheck
    prime: PropertyCheck
    psi_routes_agree: PropertyCheck
    pred_image_is_ip: bool
    phi1_gives_t_primes: PropertyCheck

    @property
    def ok(self) -> bool:
        return all(
            [
                self.bijective,
                self.order_preserving,
                self.ideal_axioms,
                self.prime,
                self.psi_routes_agree,
                self.pred_image_is_ip,
                self.phi1_gives_t_primes,
            ]
        )


def _ring_sample(chain: Chain, rng: random.Random, count: int, cfg: SampleConfig) -> list[FieldElement]:
    out = [FieldElement.zero(chain), FieldElement.one(chain)]
    out += [FieldElement.monomial(chain, LexVector.unit(chain, t)) for t in chain]
    out += [random_ring_element(chain, rng, cfg) for _ in range(count)]
    return out


def spectrum(chain: Chain, samples: int = 200, seed: int = 0, cfg: SampleConfig = SampleConfig()) -> tuple[SpectrumModel, SpectrumReport]:
    """Spec(O_v) as μ(D(T)) together with its sampled verification."""
    rng = random.Random(seed)
    ds = cuts(chain)
    primes = [mu(c) for c in ds]
    ring = _ring_sample(chain, rng, samples, cfg)
    membership = {p.cut.size: frozenset(i for i, a in enumerate(ring) if a in p) for p in primes}

    bijective = len(set(membership.values())) == len(primes)
    order_ok = all(
        (a.cut.size <= b.cut.size) == (membership[a.cut.size] <= membership[b.cut.size])
        for a in primes
        for b in primes
    )

    # ideal axioms and primality on random pairs
    ideal_ok = prime_ok = PropertyCheck(True, instances=samples)
    for i in range(samples):
        p = rng.choice(primes)
        a, b = random_in_ideal(p, rng, cfg), random_in_ideal(p, rng, cfg)
        r = random_ring_element(chain, rng, cfg)
        if not (a + b in p and r * a in p and -a in p):
            ideal_ok = PropertyCheck(False, instances=i + 1, counterexample=(p.name(), a.to_json(), b.to_json()))
            break
    for i in range(samples):
        p = rng.choice(primes)
        x, y = random_ring_element(chain, rng, cfg), random_ring_element(chain, rng, cfg)
        if (x * y in p) and not (x in p or y in p):
            prime_ok = PropertyCheck(False, instances=i + 1, counterexample=(p.name(), x.to_json(), y.to_json()))
            break
        if FieldElement.one(chain) in p and p.cut.size:
            prime_ok = PropertyCheck(False, instances=i + 1, counterexample=(p.name(), "contains 1"))
            break

    # ψ read literally, the cut form, and the union of T-primes over A^L agree
    routes = PropertyCheck(True, instances=len(ring) * len(primes))
    for c, p in zip(ds, primes):
        literal = psi_predicate(subgroup_of_cut(c))
        for a in ring:
            by_union = a.is_zero() or any(in_t_prime(a, t) for t in c.left)
            if not (literal(a) == (a in p) == by_union):
                routes = PropertyCheck(False, counterexample=(p.name(), a.to_json()))
                break
        if not routes:
            break

    poset = Poset.from_order(primes, lambda a, b: membership[a.cut.size] <= membership[b.cut.size])
    succ, pred = is_pred_is_succ(poset)
    image2 = [mu(phi2(chain, t)) for t in chain]
    pred_ok = set(image2) == set(pred) and len(set(image2)) == len(chain)

    phi1_ok = PropertyCheck(True, instances=len(ring) * len(chain))
    for t in chain:
        p = mu(phi1(chain, t))
        if any((a in p) != in_t_prime(a, t) for a in ring):
            phi1_ok = PropertyCheck(False, counterexample=t)
            break

    model = SpectrumModel(chain, primes, succ, pred)
    return model, SpectrumReport(bijective, order_ok, ideal_ok, prime_ok, routes, pred_ok, phi1_ok)


def spectrum_family(model: SpectrumModel, samples: int = 100, seed: int = 0, cfg: SampleConfig = SampleConfig()) -> SetFamily:
    """The primes as a family of sets: each prime by the sampled ring elements it holds."""
    rng = random.Random(seed)
    ring = _ring_sample(model.chain, rng, samples, cfg)
    universe = tuple(str(i) for i in range(len(ring)))
    members = [frozenset(str(i) for i, a in enumerate(ring) if a in p) for p in model.primes]
    return SetFamily(universe, tuple(members))


@dataclass
class DedekindSpectrumReport:
    points: int
    succ_points: int
    pred_points: int
    cut_points: int
    isomorphic_via_succ: bool
    isomorphic_via_pred: bool

    @property
    def ok(self) -> bool:
        return self.isomorphic_via_succ and self.isomorphic_via_pred and self.cut_points == self.points


def spectrum_as_cut_space(model: SpectrumModel, samples: int = 100, seed: int = 0) -> DedekindSpectrumReport:
    """Spec ≅ D(IS(Spec)) ≅ D(IP(Spec)), via the chain-family isomorphism."""
    fam = spectrum_family(model, samples, seed)
    iso = chain_cut_isomorphism(fam)
    order_matches = [m for _, m in iso.forward] == list(fam.members)
    return DedekindSpectrumReport(
        len(model.primes),
        len(iso.succ_chain),
        len(iso.pred_chain),
        len(iso.forward),
        iso.bijective and iso.order_preserving and order_matches,
        iso.pred_bijective and iso.pred_order_preserving and iso.pred_direct_agrees,
    )


@dataclass
class PrincipalityReport:
    t: str
    is_max: bool
    equals_monomial_ideal: PropertyCheck
    equals_radical: PropertyCheck
    samples: int

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "t_is_max": self.is_max,
            "equals_monomial_ideal": self.equals_monomial_ideal.holds,
            "monomial_counterexample": self.equals_monomial_ideal.counterexample,
            "equals_radical_of_monomial_ideal": self.equals_radical.holds,
            "samples": self.samples,
        }


def principality_check(chain: Chain, t: str, samples: int = 500, seed: int = 0, cfg: SampleConfig = SampleConfig()) -> PrincipalityReport:
    """Compare P_t with the monomial ideal (x^{e_t}) = {a : v(a) >= e_t}.

    Membership is compared both ways on random elements of O_v. The same
    sample is also compared with the radical of (x^{e_t}),
    {a : n·v(a) >= e_t for some n >= 1}.
    """
    chain.index(t)
    rng = random.Random(seed)
    e_t = LexVector.unit(chain, t)
    gen = FieldElement.monomial(chain, e_t)
    literal = radical = None
    for i in range(samples):
        a = random_ring_element(chain, rng, cfg)
        in_p = in_t_prime(a, t)
        v = valuation(a)
        in_monomial = v.coords >= e_t.coords
        in_quot = in_valuation_ring(a / gen)
        if literal is None and not (in_p == in_monomial == in_quot):
            literal = PropertyCheck(
                False, instances=i + 1, counterexample={"element": a.to_json(), "v": v.to_json(), "in_P_t": in_p}
            )
        in_rad = any(v.scale(n).coords >= e_t.coords for n in (1, 2, 3))
        if radical is None and in_p != in_rad:
            radical = PropertyCheck(False, instances=i + 1, counterexample={"element": a.to_json()})
    if literal is None:
        literal = PropertyCheck(True, instances=samples)
    if radical is None:
        radical = PropertyCheck(True, instances=samples)
    return PrincipalityReport(t, chain.index(t) == len(chain) - 1, literal, radical, samples)
