"""Executable order theory around Dedekind cuts, lexicographic value groups and spectra."""

from .orders import Chain, Cut, Poset, PropertyCheck, cut_plus, cuts, is_pred_is_succ, k1, k2, phi1, phi2
from .families import SetFamily
from .lexgroup import IsolatedSubgroup, LexVector, lex_compare
from .valuation import FieldElement, HahnPoly, PrimeIdeal, spectrum
from .ordertypes import OrderType, parse, normalize, attributes, dedekind_completion, is_dedekind
from .topology import FiniteTopology, zariski
from .harness import Bounds, VerificationReport, run_suite

__all__ = [
    "Bounds", "Chain", "Cut", "FieldElement", "FiniteTopology", "HahnPoly", "IsolatedSubgroup",
    "LexVector", "OrderType", "Poset", "PrimeIdeal", "PropertyCheck", "SetFamily",
    "VerificationReport", "attributes", "cut_plus", "cuts", "dedekind_completion", "is_dedekind",
    "is_pred_is_succ", "k1", "k2", "lex_compare", "normalize", "parse", "phi1", "phi2",
    "run_suite", "spectrum", "zariski",
]
