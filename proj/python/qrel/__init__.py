"""Exact q-expansions, indefinite theta series and class number relation checks.

Coefficients come back from the extension as strings; this wrapper turns
rationals into fractions.Fraction and real quadratic values into QuadValue.
"""
import json
from dataclasses import dataclass
from fractions import Fraction

from . import _core

__all__ = [
    "QuadValue",
    "bracket",
    "delta_indef",
    "ec_ap",
    "hurwitz",
    "kappa",
    "lambda_indef",
    "lambda_k",
    "pell_orbit",
    "relation_ids",
    "series",
    "sigma_k",
    "verify",
    "verify_all",
]


@dataclass(frozen=True)
class QuadValue:
    """a + b*sqrt(D), all scaled by sqrt(outer)."""

    a: Fraction
    b: Fraction
    D: int
    outer: int = 1

    def __float__(self):
        return (float(self.a) + float(self.b) * self.D ** 0.5) * self.outer ** 0.5


def hurwitz(n):
    return Fraction(_core.hurwitz(n))


def sigma_k(n, k):
    return int(_core.sigma_k(n, k))


def lambda_k(n, k):
    return Fraction(_core.lambda_k(n, k))


ec_ap = _core.ec_ap
relation_ids = _core.relation_ids


def series(name, terms):
    """Coefficients 0..terms of a catalog series; None where undefined (g7)."""
    return [None if c is None else Fraction(c) for c in _core.series(name, terms)]


def bracket(f, g, k, l, nu, terms):
    return [Fraction(c) for c in _core.bracket(f, g, str(k), str(l), nu, terms)]


def kappa(k, l, nu):
    """kappa(k, l, nu) as (rational, e) meaning rational * pi**(e/2)."""
    r, e = _core.kappa(str(k), str(l), nu)
    return Fraction(r), e


def _quad(outer, coeffs):
    return [QuadValue(Fraction(a), Fraction(b), D, outer) for a, b, D in coeffs]


def lambda_indef(s, t, chi, psi, nu, terms):
    return _quad(*_core.lambda_indef(s, t, str(chi), str(psi), nu, terms))


def delta_indef(s, t, chi, psi, nu, terms):
    return _quad(*_core.delta_indef(s, t, str(chi), str(psi), nu, terms))


def pell_orbit(s, t, r):
    d = _core.pell_orbit(s, t, r)
    d["x"], d["y"] = int(d["x"]), int(d["y"])
    d["representatives"] = [tuple(p) for p in d["representatives"]]
    return d


def verify(relation, max_n=None):
    """One relation report as a dict (schema of the CLI's --json output)."""
    return json.loads(_core.verify(relation, max_n))


def verify_all(max_n=None):
    return json.loads(_core.verify_all(max_n))
