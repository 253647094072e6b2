"""Canonical string and JSON forms for polynomials, maps and points.

Polynomial strings default to descending exponent order, "^" powers and no
spaces: integer coefficients signed over ZZ/QQ, canonical representatives in
[0, p) over GF(p).  Identical values always render to identical bytes, which
the CLI relies on for deterministic output.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import Poly
from .projline import ProjPoint, RationalMap


def _term(coeff_str: str, exp: int, var: str) -> str:
    if exp == 0:
        return coeff_str
    xpart = var if exp == 1 else f"{var}^{exp}"
    if coeff_str == "1":
        return xpart
    if coeff_str == "-1":
        return f"-{xpart}"
    return f"{coeff_str}{xpart}"


def poly_str(p: Poly, *, descending: bool = True, var: str = "x") -> str:
    """Render a polynomial canonically; the zero polynomial is "0"."""
    if p.is_zero:
        return "0"
    terms = []
    indexed = list(enumerate(p.coeffs))
    if descending:
        indexed.reverse()
    for exp, c in indexed:
        if not c:
            continue
        if isinstance(c, Fraction) and c.denominator != 1:
            coeff_str = f"({c})"
        else:
            coeff_str = str(int(c) if isinstance(c, Fraction) else c)
        terms.append(_term(coeff_str, exp, var))
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def map_str(f: RationalMap, *, descending: bool = True, var: str = "x") -> str:
    """num/den with the denominator omitted when it is the constant 1."""
    num = poly_str(f.num, descending=descending, var=var)
    if f.den.degree == 0 and f.den.leading == f.ring.coerce(1):
        return num
    den = poly_str(f.den, descending=descending, var=var)
    return f"({num})/({den})"


def fraction_json(value: Fraction | int) -> dict[str, str]:
    """Exact decimal-string numerator/denominator pair."""
    f = Fraction(value)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def point_json(pt: ProjPoint):
    """A point as a num/den pair, or the string "inf"."""
    if pt.is_infinity:
        return "inf"
    return fraction_json(pt.value)


def point_str(pt: ProjPoint) -> str:
    return "inf" if pt.is_infinity else str(pt.value)
