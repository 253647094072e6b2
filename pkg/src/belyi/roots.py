"""Rational roots of integer polynomials via the rational root theorem.

Candidates are +-r/s with r a divisor of the constant term (after stripping
the power of x) and s a divisor of the leading coefficient, gcd(r, s) = 1.
Each candidate is screened with a single modular evaluation and the few
survivors are confirmed exactly, so every returned root satisfies p(root) = 0
as an identity of integers.  Failure to factor a coefficient raises rather
than returning a possibly incomplete set.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import ZZ
from .intfactor import divisors
from .polys import Poly

# Screening modulus: a Mersenne prime comfortably above every divisor that
# the 10**12 factoring fallback can produce, so candidates are never
# congruent to 0 by accident of the modulus.
_SCREEN_MOD = (1 << 61) - 1


def _homogeneous_eval_mod(coeffs_desc, r: int, s: int, mod: int) -> int:
    acc = 0
    spow = 1
    for c in coeffs_desc:
        acc = (acc * r + c * spow) % mod
        spow = spow * s % mod
    return acc


def _homogeneous_eval(coeffs_desc, r: int, s: int) -> int:
    acc = 0
    spow = 1
    for c in coeffs_desc:
        acc = acc * r + c * spow
        spow *= s
    return acc


def rational_roots(p: Poly, bound: int | None = None) -> set[Fraction]:
    """All rational roots of a nonzero integer polynomial.

    Raises FactorizationError when the constant or leading coefficient cannot
    be factored within the configured bound.
    """
    if p.ring != ZZ:
        raise TypeError("rational_roots expects an integer polynomial")
    if p.is_zero:
        raise ValueError("the zero polynomial has every root")

    roots: set[Fraction] = set()
    coeffs = list(p.coeffs)
    # strip the power of x first; it contributes the root 0
    shift = 0
    while not coeffs[0]:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(Fraction(0))
    if len(coeffs) == 1:
        return roots

    const, lead = coeffs[0], coeffs[-1]
    desc = list(reversed(coeffs))
    r_divs = divisors(const, bound)
    s_divs = divisors(lead, bound)
    for s in s_divs:
        for r in r_divs:
            if math.gcd(r, s) != 1:
                continue
            for r_signed in (r, -r):
                if _homogeneous_eval_mod(desc, r_signed, s, _SCREEN_MOD):
                    continue
                if _homogeneous_eval(desc, r_signed, s) == 0:
                    roots.add(Fraction(r_signed, s))
    return roots
