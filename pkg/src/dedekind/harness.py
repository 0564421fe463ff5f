"""Verification suites over desk-scale instances, keyed by selector strings."""

from __future__ import annotations

import functools
import itertools
import json
import random
import time
from dataclasses import dataclass, field, fields
from typing import Callable, Iterator

from . import families as fm
from . import lexgroup as lg
from . import ordertypes as ot
from . import topology as tp
from . import valuation as va
from .orders import Chain, Cut, PropertyCheck, cut_poset, cuts, is_pred_is_succ, k1, k2, phi1, phi2

SUITES = (
    "remark-1.9",
    "lemma-2.1",
    "theorem-2.3",
    "theorem-2.4",
    "theorem-2.7",
    "theorem-3.1",
    "lemma-3.4",
    "lemma-3.5",
    "theorem-3.6",
    "prop-3.7",
    "cor-3.8",
    "cor-3.10",
    "remark-3.12",
    "prop-3.13",
    "cor-3.14",
    "axioms-A1-A3",
)


class UnknownSuite(ValueError):
    pass


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    max_chain: int = 8
    max_universe: int = 3
    sampled_universe: int = 4
    sampled_families: int = 500
    samples: int = 200
    axiom_samples: int = 1000
    axiom_chain: int = 3
    principal_samples: int = 500
    radius: int = 3
    seed: int = 0

    _LIMITS = {
        "max_chain": (0, 10),
        "max_universe": (0, 3),
        "sampled_universe": (0, 5),
        "sampled_families": (0, 100_000),
        "samples": (1, 100_000),
        "axiom_samples": (1, 100_000),
        "axiom_chain": (1, 6),
        "principal_samples": (1, 100_000),
        "radius": (1, 6),
        "seed": (0, 2**63 - 1),
    }

    def __post_init__(self):
        for f in fields(self):
            lo, hi = self._LIMITS[f.name]
            val = getattr(self, f.name)
            if not isinstance(val, int) or not lo <= val <= hi:
                raise BoundsError(f"{f.name}={val!r} outside supported range [{lo}, {hi}]")

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class VerificationReport:
    suite: str
    check: str
    instances: int
    status: str  # pass | fail | vacuous
    counterexample: object = None
    seed: int = 0
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in ("pass", "fail", "vacuous"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("a failing report needs a counterexample and only a failing one")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "check": self.check,
            "status": self.status,
            "instances": self.instances,
            "seed": self.seed,
            "counterexample": jsonable(self.counterexample),
            "details": jsonable(self.details),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 4)
        return out

    def line(self) -> str:
        return f"{self.status.upper():7} {self.suite:13} {self.check:32} n={self.instances}"


def jsonable(x):
    """Turn report payloads into plain JSON values, deterministically."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted((jsonable(v) for v in x), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, Cut):
        return x.to_json()
    if isinstance(x, PropertyCheck):
        return {"holds": x.holds, "instances": x.instances, "counterexample": jsonable(x.counterexample)}
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    if hasattr(x, "name") and callable(x.name):
        return x.name()
    return str(x)


class _Tally:
    """Counts instances and keeps the first failure."""

    def __init__(self):
        self.n = 0
        self.bad = None

    def add(self, holds: bool, instance: Callable[[], object]):
        self.n += 1
        if not holds and self.bad is None:
            self.bad = instance()

    def report(self, suite: str, check: str, bounds: Bounds, vacuous: bool = False, **details) -> VerificationReport:
        if self.bad is not None:
            status = "fail"
        elif vacuous or self.n == 0:
            status = "vacuous"
        else:
            status = "pass"
        return VerificationReport(suite, check, self.n, status, self.bad, bounds.seed, details=details)


def _chains(b: Bounds, start: int = 0) -> Iterator[Chain]:
    for n in range(start, b.max_chain + 1):
        yield Chain.of_size(n)


def _universe(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def _exhaustive_families(b: Bounds) -> Iterator[fm.SetFamily]:
    yield from fm.all_families(_universe(b.max_universe))


def _sampled_families(b: Bounds) -> Iterator[fm.SetFamily]:
    if not b.sampled_universe or not b.sampled_families:
        return
    u = _universe(b.sampled_universe)
    subsets = [frozenset(c) for r in range(len(u) + 1) for c in itertools.combinations(u, r)]
    rng = random.Random(b.seed)
    for _ in range(b.sampled_families):
        yield fm.SetFamily(u, tuple(s for s in subsets if rng.random() < 0.5))


def _pairs(fam: fm.SetFamily):
    for a in fam.members:
        for c in fam.members:
            if a < c:
                yield a, c


# --- suites -------------------------------------------------------------------


def _cut_tags(b: Bounds) -> list[VerificationReport]:
    tags, dk = _Tally(), _Tally()
    # |T| from 1: the empty chain has one cut and nothing to tag
    for chain in _chains(b, start=1):
        p = cut_poset(chain)
        succ, pred = is_pred_is_succ(p)
        ok = set(succ) == {phi1(chain, t) for t in chain} and set(pred) == {phi2(chain, t) for t in chain}
        ok = ok and all(phi2(chain, t).size + 1 == phi1(chain, t).size for t in chain)
        tags.add(ok, lambda: {"chain": list(chain.labels), "IS": succ, "IP": pred})
        dk.add(bool(k1(p)) and bool(k2(p)), lambda: {"chain": list(chain.labels)})
    return [
        tags.report("remark-1.9", "IS=phi1(T), IP=phi2(T)", b),
        dk.report("remark-1.9", "D(T) satisfies K1 and K2", b, vacuous=True, note="finite posets"),
    ]


def _neighbour_witnesses(b: Bounds) -> list[VerificationReport]:
    out = []
    for label, source in (("exhaustive", _exhaustive_families), ("sampled", _sampled_families)):
        wit, bic, flags = _Tally(), _Tally(), _Tally()
        fams = 0
        for fam in source(b):
            fams += 1
            cf = fm.closure_flags(fam)
            flags.add(cf.chain_union_closed and cf.chain_intersection_closed, lambda: fam.to_json())
            for x1, x2 in _pairs(fam):
                w = fm.neighbor_witness(fam, x1, x2)
                exists = fm.neighbors_exist_between(fam, x1, x2)
                bic.add((w is not None) == exists, lambda: {"family": fam.to_json(), "x1": fam.fmt(x1), "x2": fam.fmt(x2)})
                good = (
                    w is not None
                    and x1 <= w.lower < w.upper <= x2
                    and fm.are_immediate_neighbors(fam, w.lower, w.upper)
                    and w.lower == frozenset().union(*[m for m in w.chain if w.y not in m])
                    and w.upper == frozenset(fam.universe).intersection(*[m for m in w.chain if w.y in m])
                )
                wit.add(good, lambda: {"family": fam.to_json(), "x1": fam.fmt(x1), "x2": fam.fmt(x2)})
        u = b.max_universe if label == "exhaustive" else b.sampled_universe
        out += [
            wit.report("lemma-2.1", f"witness ({label})", b, families=fams, universe=u),
            bic.report("lemma-2.1", f"witness iff neighbours ({label})", b, families=fams, universe=u),
            flags.report("lemma-2.1", f"chain closure flags ({label})", b, vacuous=True, families=fams),
        ]
    return out


def _decomposition_suite(b: Bounds, union: bool) -> list[VerificationReport]:
    key = "theorem-2.3" if union else "theorem-2.4"
    dec_t, uniq_t, chain_t, err_t = _Tally(), _Tally(), _Tally(), _Tally()
    for fam in _exhaustive_families(b):
        for x in fam.members:
            extreme = not any((m < x) if union else (x < m) for m in fam.members)
            if extreme:
                try:
                    (fm.union_decomposition if union else fm.intersection_decomposition)(fam, x)
                    err_t.add(False, lambda: {"family": fam.to_json(), "x": fam.fmt(x)})
                except fm.PreconditionError:
                    err_t.add(True, lambda: None)
                continue
            d = (fm.union_decomposition if union else fm.intersection_decomposition)(fam, x)
            inst = lambda: {"family": fam.to_json(), "x": fam.fmt(x)}  # noqa: E731
            dec_t.add(d.combines_to_x and d.is_initial and d.is_maximal and bool(d.generators), inst)
            chain_t.add(d.every_maximal_chain_ok, inst)
            uniq_t.add(fm.generator_uniqueness(fam, x, union)[0], inst)
    side = "initial in IS(B)" if union else "final in IP(B)"
    return [
        dec_t.report(key, f"decomposition, {side}, maximal", b),
        uniq_t.report(key, "uniqueness of generators", b),
        chain_t.report(key, "every maximal chain generates X", b),
        err_t.report(key, "precondition on extreme members", b),
    ]


def _chain_families(b: Bounds) -> list[VerificationReport]:
    iso_t, gap_t, err_t = _Tally(), _Tally(), _Tally()
    for fam in _exhaustive_families(b):
        if not fam.members:
            continue
        if not fam.is_chain():
            try:
                fm.chain_cut_isomorphism(fam)
                err_t.add(False, lambda: fam.to_json())
            except fm.PreconditionError:
                err_t.add(True, lambda: None)
            continue
        iso = fm.chain_cut_isomorphism(fam)
        iso_t.add(iso.ok, lambda: fam.to_json())
        gap_t.add(fm.strict_gap(fam), lambda: fam.to_json())
    # prefix families of every chain: B = {A^L : A in D(T)}
    for chain in _chains(b):
        fam = fm.SetFamily.of(chain.labels, [c.left for c in cuts(chain)])
        iso = fm.chain_cut_isomorphism(fam)
        iso_t.add(iso.ok and len(iso.succ_chain) == len(chain), lambda: {"chain": list(chain.labels)})
    return [
        iso_t.report("theorem-2.7", "B = D(IS(B)) = D(IP(B))", b),
        gap_t.report("theorem-2.7", "strict gap on IS/IP (chain families)", b),
        err_t.report("theorem-2.7", "non-chain families rejected", b),
    ]


def _spectrum_cut_space(b: Bounds) -> list[VerificationReport]:
    t = _Tally()
    for chain in _chains(b):
        model, _ = va.spectrum(chain, samples=b.samples, seed=b.seed)
        r = va.spectrum_as_cut_space(model, samples=b.samples, seed=b.seed)
        t.add(r.ok and r.points == len(chain) + 1, lambda: {"chain": list(chain.labels), "report": vars(r)})
    return [t.report("theorem-3.1", "Spec = D(IS(Spec)) = D(IP(Spec))", b)]


def _spectrum_map(b: Bounds) -> list[VerificationReport]:
    bij, ideal, routes, ip = _Tally(), _Tally(), _Tally(), _Tally()
    for chain in _chains(b):
        _, r = va.spectrum(chain, samples=b.samples, seed=b.seed)
        inst = lambda: {"chain": list(chain.labels), "report": jsonable(vars(r))}  # noqa: E731
        bij.add(r.bijective and r.order_preserving, inst)
        ideal.add(bool(r.ideal_axioms) and bool(r.prime), inst)
        routes.add(bool(r.psi_routes_agree) and bool(r.phi1_gives_t_primes), inst)
        ip.add(r.pred_image_is_ip, inst)
    return [
        bij.report("cor-3.8", "mu: D(T) -> Spec order bijection", b),
        ideal.report("cor-3.8", "sampled ideal and prime axioms", b),
        routes.report("cor-3.8", "psi literal = cut form = union of P_t", b),
        ip.report("cor-3.8", "mu(phi2(T)) = IP(Spec)", b),
    ]


def _box(chain: Chain, b: Bounds) -> list[lg.LexVector]:
    return lg.box_elements(chain, radius=b.radius, seed=b.seed, samples=max(b.samples, 500))


def _smallest_subgroups(b: Bounds) -> list[VerificationReport]:
    small, iso = _Tally(), _Tally()
    rng = random.Random(b.seed)
    for chain in _chains(b):
        elems = _box(chain, b)
        nonzero = [f for f in elems if not f.is_zero()]
        picks = nonzero if len(nonzero) <= 20 else rng.sample(nonzero, 20)
        picks += [lg.LexVector.unit(chain, t) for t in chain]
        for f in picks:
            c = lg.check_smallest(f, elems)
            small.add(bool(c), lambda: c.counterexample)
        for tg in lg.enumerate_isolated(chain):
            c = lg.check_isolated(tg.subgroup, elems, b.samples, rng)
            iso.add(bool(c), lambda: c.counterexample)
    return [
        small.report("lemma-3.4", "smallest isolated subgroup is H_{min supp}", b),
        iso.report("lemma-3.4", "enumerated subgroups are isolated", b),
    ]


def _subgroup_tags(b: Bounds) -> list[VerificationReport]:
    count, tags, complete = _Tally(), _Tally(), _Tally()
    for chain in _chains(b):
        elems = _box(chain, b)
        groups = lg.enumerate_isolated(chain)
        count.add(len(groups) == len(chain) + 1, lambda: {"chain": list(chain.labels)})
        c = lg.check_tags(chain, elems)
        tags.add(bool(c), lambda: c.counterexample)
        c2 = lg.check_complete(chain, elems, seed=b.seed)
        complete.add(bool(c2), lambda: c2.counterexample)
    return [
        count.report("lemma-3.5", "|T|+1 isolated subgroups", b),
        tags.report("lemma-3.5", "IS-tags = {H_t}, IP-tags = {dH_t}", b),
        complete.report("lemma-3.5", "no other isolated subgroups (sampled)", b),
    ]


def _subgroup_bijection(b: Bounds) -> list[VerificationReport]:
    t = _Tally()
    for chain in _chains(b):
        r = lg.isolated_bijection(chain, _box(chain, b))
        t.add(r.ok, lambda: {"chain": list(chain.labels), "injective": r.injective, "onto": r.onto_is})
    return [t.report("theorem-3.6", "t -> H_t order-reversing bijection", b)]


def _final_set_unions(b: Bounds) -> list[VerificationReport]:
    dec, err = _Tally(), _Tally()
    for chain in _chains(b):
        elems = _box(chain, b)
        for tg in lg.enumerate_isolated(chain):
            h = tg.subgroup
            if h.is_zero():
                try:
                    lg.final_set_decomposition(h)
                    err.add(False, lambda: {"chain": list(chain.labels)})
                except lg.DegenerateInput:
                    err.add(True, lambda: None)
                continue
            j, c = lg.final_set_decomposition(h, elems)
            final = bool(j) and tuple(chain.labels[len(chain) - len(j):]) == j
            dec.add(final and bool(c), lambda: {"subgroup": h.name(), "J": list(j), "bad": c.counterexample})
    return [
        dec.report("prop-3.7", "H = union of H_t over final J", b),
        err.report("prop-3.7", "{0} rejected", b),
    ]


def _order_types(b: Bounds) -> list[VerificationReport]:
    d_t, wit_t, eta_t, fin_t, norm_t = _Tally(), _Tally(), _Tally(), _Tally(), _Tally()
    for e in ot.all_eta_free(4, 4):
        d = ot.dedekind_completion(e)
        a = ot.attributes(d)
        d_t.add(a.k1 and a.k2 and a.has_min and a.has_max, lambda: str(e))
        ae = ot.attributes(e)
        norm_t.add(ae == ot.attributes(ot.normalize(e)), lambda: str(e))
        v = ot.is_dedekind(e)
        if ae.k1 and ae.k2 and not ae.empty:
            ok = v.dedekind and v.witness is not None and ot.normalize(ot.dedekind_completion(v.witness)) == ot.normalize(e)
            wit_t.add(ok, lambda: str(e))
        else:
            wit_t.add(not v.dedekind, lambda: str(e))
        if e.is_finite:
            fin_t.add(_finite_agrees(e), lambda: str(e))
    for e in ot.all_eta_free(3, 2, eta=True):
        if e.has_eta:
            eta_t.add(not ot.attributes(e).k2, lambda: str(e))
    return [
        d_t.report("cor-3.10", "D(e) satisfies K1, K2, endpoints", b),
        wit_t.report("cor-3.10", "K1 and K2 iff D(IS(e)) = e", b),
        eta_t.report("cor-3.10", "K2 fails whenever eta occurs", b),
        fin_t.report("cor-3.10", "symbolic = brute force on finite e", b),
        norm_t.report("cor-3.10", "normalization preserves attributes", b),
    ]


@functools.lru_cache(maxsize=None)
def _brute_chain(n: int) -> tuple:
    """(k1, k2, has_min, has_max, |D|, |IS|, |IP|) of the concrete n-chain."""
    chain = Chain.of_size(n)
    p = chain.poset()
    succ, pred = is_pred_is_succ(p)
    return (bool(k1(p)), bool(k2(p)), bool(p.minimal()), bool(p.maximal()), len(cuts(chain)), len(succ), len(pred))


def _finite_agrees(e: ot.OrderType) -> bool:
    a = ot.attributes(e)
    fin = lambda k: ot.normalize(ot.expr(ot.Fin(k)))  # noqa: E731
    bk1, bk2, bmin, bmax, nd, ns, np_ = _brute_chain(sum(p.n for p in e.summands))
    return (
        (a.k1, a.k2, a.has_min, a.has_max) == (bk1, bk2, bmin, bmax)
        and ot.normalize(ot.dedekind_completion(e)) == fin(nd)
        and ot.normalize(ot.is_expr(e)) == fin(ns)
        and ot.normalize(ot.ip_expr(e)) == fin(np_)
    )


def _principal_primes(b: Bounds) -> list[VerificationReport]:
    lit, rad, quot = _Tally(), _Tally(), _Tally()
    for n in range(1, b.axiom_chain + 1):
        chain = Chain.of_size(n)
        for t in chain:
            r = va.principality_check(chain, t, samples=b.principal_samples, seed=b.seed)
            lit.add(bool(r.equals_monomial_ideal), lambda: {"chain": list(chain.labels), **r.to_json()})
            rad.add(bool(r.equals_radical), lambda: {"chain": list(chain.labels), **r.to_json()})
    for chain in _chains(b, start=1):
        for t in chain:
            q = lg.discrete_quotient_check(chain, t, samples=b.samples, radius=b.radius, seed=b.seed)
            quot.add(q.ok, lambda: {"chain": list(chain.labels), **q.to_json()})
    return [
        lit.report("remark-3.12", "P_t = (x^e_t)", b, samples=b.principal_samples),
        rad.report("remark-3.12", "P_t = rad (x^e_t)", b, samples=b.principal_samples),
        quot.report("remark-3.12", "H_t / dH_t = Z via f -> f(t)", b),
    ]


def _zariski_subspaces(b: Bounds) -> list[VerificationReport]:
    prop, dens, cop, models = _Tally(), _Tally(), _Tally(), _Tally()
    for n in range(1, b.max_chain + 1):
        pts = [f"p{i}" for i in range(n)]
        r = tp.final_subsets_check(pts)
        prop.add(r.ok, lambda: r.to_json())
        if n >= 2:
            d = tp.density(pts)
            dens.add(d.ip_dense and not d.is_dense and d.consistent, lambda: d.to_json())
        s = tp.cop_and_separation(pts)
        cop.add(s.ok, lambda: s.to_json())
    for chain in _chains(b, start=1):
        model, _ = va.spectrum(chain, samples=20, seed=b.seed)
        r2 = tp.final_subsets_check([p.name() for p in model.primes])
        models.add(r2.ok, lambda: r2.to_json())
    return [
        prop.report("prop-3.13", "closed subsets of IP/IS = final subsets", b),
        models.report("prop-3.13", "same on spectrum models", b),
        dens.report("prop-3.13", "IP dense, IS not dense", b),
        cop.report("prop-3.13", "cop = Zariski, T0, sober, compact", b),
    ]


def _ip_correspondence(b: Bounds) -> list[VerificationReport]:
    t = _Tally()
    for n in range(1, b.max_chain + 1):
        r = tp.ip_closed_correspondence([f"p{i}" for i in range(n)])
        t.add(r.ok, lambda: r.to_json())
    return [t.report("cor-3.14", "points <-> closed subsets of IP", b)]


def _valuation_axioms(b: Bounds) -> list[VerificationReport]:
    out = []
    for n in range(1, b.axiom_chain + 1):
        chain = Chain.of_size(n)
        for name, c in va.axioms_check(chain, samples=b.axiom_samples, seed=b.seed).items():
            r = _Tally()
            r.n = c.instances
            r.bad = None if c.holds else {"chain": list(chain.labels), "counterexample": c.counterexample}
            out.append(r.report("axioms-A1-A3", f"{name} |T|={n}", b))
    return out


_RUNNERS: dict[str, Callable[[Bounds], list[VerificationReport]]] = {
    "remark-1.9": _cut_tags,
    "lemma-2.1": _neighbour_witnesses,
    "theorem-2.3": lambda b: _decomposition_suite(b, True),
    "theorem-2.4": lambda b: _decomposition_suite(b, False),
    "theorem-2.7": _chain_families,
    "theorem-3.1": _spectrum_cut_space,
    "lemma-3.4": _smallest_subgroups,
    "lemma-3.5": _subgroup_tags,
    "theorem-3.6": _subgroup_bijection,
    "prop-3.7": _final_set_unions,
    "cor-3.8": _spectrum_map,
    "cor-3.10": _order_types,
    "remark-3.12": _principal_primes,
    "prop-3.13": _zariski_subspaces,
    "cor-3.14": _ip_correspondence,
    "axioms-A1-A3": _valuation_axioms,
}


def run_suite(selector: str, bounds: Bounds | None = None) -> list[VerificationReport]:
    """Run one suite, or every suite with ``all``; reports sorted by (suite, check)."""
    bounds = bounds or Bounds()
    if selector == "all":
        names = list(SUITES)
    elif selector in _RUNNERS:
        names = [selector]
    else:
        raise UnknownSuite(f"unknown suite {selector!r}; choose from all, {', '.join(SUITES)}")
    reports = []
    for name in names:
        start = time.perf_counter()
        batch = _RUNNERS[name](bounds)
        spent = time.perf_counter() - start
        for r in batch:
            r.elapsed = spent
        reports += batch
    order = {s: i for i, s in enumerate(SUITES)}
    return sorted(reports, key=lambda r: (order[r.suite], r.check))


def exit_status(reports: list[VerificationReport]) -> int:
    return 0 if all(r.ok for r in reports) else 1
