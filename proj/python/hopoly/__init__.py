"""Exact Heckman-Opdam polynomials, characters and weight multiplicities.

Weights are sequences of integers in fundamental-weight coordinates.
Rational results are returned as ``fractions.Fraction``; polynomials in the
parameters are canonical strings such as ``"1 + k_s"``.
"""

from fractions import Fraction

from . import _hopoly
from ._hopoly import (
    ConstructionError,
    DomainError,
    HopolyError,
    ParseError,
    ResourceError,
    SingularParameterError,
    character,
    freudenthal,
    multiplicity,
    positivity,
    reduce,
    root_system_info,
    run_cli,
    verify,
    weyl_dimension,
)

__all__ = [
    "ConstructionError",
    "DomainError",
    "HopolyError",
    "ParseError",
    "ResourceError",
    "SingularParameterError",
    "character",
    "epoly",
    "freudenthal",
    "heckman_opdam",
    "multiplicity",
    "positivity",
    "reduce",
    "root_system_info",
    "run_cli",
    "subset_sum",
    "verify",
    "weyl_dimension",
]


def _k_text(k):
    if isinstance(k, tuple):
        return str(Fraction(k[0])), str(Fraction(k[1]))
    return str(Fraction(k)), ""


def epoly(type, highest, k=1):
    """E_lambda at numeric k; ``k`` is a number or a (short, long) pair."""
    k_short, k_long = _k_text(k)
    raw = _hopoly.epoly(type, list(highest), k_short, k_long)
    return {w: Fraction(c) for w, c in raw.items()}


def heckman_opdam(type, highest, k=1, threads=1):
    """P_lambda at numeric k for dominant ``highest``."""
    k_short, k_long = _k_text(k)
    raw = _hopoly.heckman_opdam(type, list(highest), k_short, k_long, threads)
    return {w: Fraction(c) for w, c in raw.items()}


def subset_sum(type, highest, weight):
    """Multiplicity as an orbit ratio times a sum of subset products c_J."""
    raw = _hopoly.subset_sum(type, list(highest), list(weight))
    return {
        "value": Fraction(raw["value"]),
        "orbit_ratio": Fraction(raw["orbit_ratio"]),
        "subset_total": Fraction(raw["subset_total"]),
        "terms": [(tuple(j), Fraction(c)) for j, c in raw["terms"]],
    }
