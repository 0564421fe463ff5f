"""Acceptance criteria, one test each, at the stated bounds and time limits.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and when this file is run as a script.
"""

import sys
import time

import pytest

from dedekind.harness import Bounds, exit_status, run_suite
from dedekind.orders import Chain
from dedekind.valuation import spectrum, spectrum_as_cut_space

RESULTS: dict[int, str] = {}


def _criterion(number: int, title: str, limit: float, body):
    start = time.perf_counter()
    ok, detail = body()
    spent = time.perf_counter() - start
    within = spent < limit
    verdict = "PASS" if ok and within else "FAIL"
    RESULTS[number] = f"[{verdict}] criterion {number:2}: {title} ({spent:.2f}s / limit {limit:g}s){'' if ok else ' ' + detail}"
    assert ok, detail
    assert within, f"took {spent:.2f}s, limit {limit}s"


def _suites(*names, bounds=None):
    def body():
        reports = [r for n in names for r in run_suite(n, bounds or Bounds())]
        bad = [r.to_json() for r in reports if not r.ok]
        return not bad, f"failing checks: {bad[:1]}"

    return body


def test_criterion_01_cut_space_tags():
    def body():
        reports = run_suite("remark-1.9", Bounds(max_chain=8))
        tags = [r for r in reports if r.check.startswith("IS=")][0]
        return tags.status == "pass" and tags.instances == 8 and exit_status(reports) == 0, str(tags.to_json())

    _criterion(1, "IS(D(T)) = phi1(T), IP(D(T)) = phi2(T) for |T| <= 8", 1, body)


def test_criterion_02_neighbour_witness():
    def body():
        reports = run_suite("lemma-2.1")
        fams = {r.check: r.details.get("families") for r in reports}
        ok = exit_status(reports) == 0 and fams["witness (exhaustive)"] == 256 and fams["witness (sampled)"] >= 500
        return ok, str(fams)

    _criterion(2, "neighbour witness and biconditional, 256 families + 500 sampled", 30, body)


def test_criterion_03_decompositions():
    _criterion(3, "union/intersection decompositions on every family over 3 points", 30, _suites("theorem-2.3", "theorem-2.4"))


def test_criterion_04_spectrum_is_cut_space():
    def body():
        for n in range(0, 9):
            chain = Chain.of_size(n)
            model, r = spectrum(chain)
            d = spectrum_as_cut_space(model)
            if not (r.bijective and r.order_preserving and r.pred_image_is_ip and d.ok):
                return False, f"|T|={n}"
        ok, detail = _suites("theorem-2.7")()
        return ok, detail

    _criterion(4, "mu: D(T) -> Spec bijective, Spec = D(IS) = D(IP) for |T| <= 8", 5, body)


def test_criterion_05_valuation_axioms():
    _criterion(5, "A1-A3 and representative independence, 1000 samples, |T| <= 3", 10, _suites("axioms-A1-A3"))


def test_criterion_06_isolated_subgroups():
    _criterion(
        6,
        "isolated subgroups: enumeration, tags, t -> H_t, final-set decomposition",
        30,
        _suites("lemma-3.4", "lemma-3.5", "theorem-3.6", "prop-3.7"),
    )


def test_criterion_07_principal_primes_and_z_quotients():
    _criterion(7, "P_t = (x^e_t) on 500 samples and H_t/dH_t = Z", 10, _suites("remark-3.12"))


def test_criterion_08_topology():
    _criterion(8, "subspace closed = final, correspondence, density, cop, T0, sober", 5, _suites("prop-3.13", "cor-3.14"))


def test_criterion_09_symbolic_order_types():
    _criterion(9, "symbolic D, K1/K2 and witnesses over eta-free sums", 10, _suites("cor-3.10"))


def test_criterion_10_full_suite():
    def body():
        reports = run_suite("all")
        bad = sorted({f"{r.suite}: {r.check}" for r in reports if not r.ok})
        return exit_status(reports) == 0, f"failing: {bad}"

    _criterion(10, "run_suite all exits 0", 120, body)


def summary_lines() -> list[str]:
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
