"""Points of the projective line and rational maps acting on it.

A ProjPoint is either an affine coordinate value (Fraction over QQ, int over
GF(p)) or the point at infinity.  A RationalMap is a pair of polynomials
num/den over a common ring; over a field the constructor can cancel their
gcd, so the stored pair is coprime and projective evaluation never meets 0/0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polys import Poly, poly_gcd, wronskian


@dataclass(frozen=True, order=False)
class ProjPoint:
    """A point of P^1: an affine value, or infinity (value None)."""

    value: object | None = None

    @classmethod
    def affine(cls, v) -> "ProjPoint":
        if v is None:
            raise ValueError("affine point needs a value")
        return cls(v)

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def sort_key(self):
        """Deterministic order: affine points ascending, infinity last."""
        if self.is_infinity:
            return (1, 0)
        return (0, self.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinity else str(self.value)


INF = ProjPoint.infinity()


def as_point(x) -> ProjPoint:
    return x if isinstance(x, ProjPoint) else ProjPoint(x)


class RationalMap:
    """num/den with coprime parts; den nonzero.

    Equality is literal on the stored pair (used for canonical-form
    comparisons such as "the reduction equals x^d"); use same_function()
    to compare as maps.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, *, reduce: bool = False):
        num._check_ring(den)
        if den.is_zero:
            raise ZeroDivisionError("rational map with zero denominator")
        if reduce:
            if not num.ring.is_field:
                raise TypeError("gcd cancellation needs field coefficients")
            g = poly_gcd(num, den)
            if g.degree and g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMap is immutable")

    @property
    def ring(self):
        return self.num.ring

    @property
    def degree(self) -> int:
        """max(deg num, deg den); the constant-0 map has degree 0."""
        dn = self.num.degree
        dd = self.den.degree
        if dn is None:
            return dd if dd is not None else 0
        return max(dn, dd)

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def monic_denominator(self) -> "RationalMap":
        """Scale num and den by 1/lc(den); canonical form over a field."""
        lead = self.den.leading
        if lead == self.ring.coerce(1):
            return self
        inv = self.ring.inv(lead)
        return RationalMap(self.num.scale(inv), self.den.scale(inv))

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def same_function(self, other: "RationalMap") -> bool:
        return self.num * other.den == other.num * self.den

    def wronskian(self) -> Poly:
        return wronskian(self.num, self.den)

    def derivative_at(self, a):
        """(num/den)'(a) for affine non-pole a."""
        d = self.den(a)
        if not d:
            raise ZeroDivisionError("derivative at a pole")
        w = self.wronskian()(a)
        return self.ring.div(w, self.ring.canon(d * d))

    def __repr__(self):
        from .render import map_str

        return f"RationalMap({self.ring}, {map_str(self)})"


def eval_map(f: RationalMap, x) -> ProjPoint:
    """Projective evaluation over a field; never 0/0 thanks to coprimality."""
    if not f.ring.is_field:
        raise TypeError("projective evaluation needs field coefficients")
    pt = as_point(x)
    if pt.is_infinity:
        dn = f.num.degree
        dd = f.den.degree
        if dn is None:
            return ProjPoint(f.ring.coerce(0))
        if dn > (dd if dd is not None else -1):
            return INF
        if dd is not None and dn < dd:
            return ProjPoint(f.ring.coerce(0))
        return ProjPoint(f.ring.div(f.num.leading, f.den.leading))
    top = f.num(pt.value)
    bottom = f.den(pt.value)
    if not bottom:
        if not top:
            raise ArithmeticError("0/0: parts were not coprime")
        return INF
    return ProjPoint(f.ring.div(top, bottom))


def compose(f: RationalMap, g: RationalMap) -> RationalMap:
    """f o g as a rational map, with the common gcd cancelled."""
    if f.ring != g.ring:
        raise ValueError("mixed coefficient rings in composition")
    ring = f.ring
    d = f.degree
    gn, gd = g.num, g.den
    num = Poly.zero(ring)
    den = Poly.zero(ring)
    gn_pow = [Poly.one(ring)]
    gd_pow = [Poly.one(ring)]
    for i in range(1, d + 1):
        gn_pow.append(gn_pow[-1] * gn)
        gd_pow.append(gd_pow[-1] * gd)
    for i in range(d + 1):
        ci = f.num.coefficient(i)
        if ci:
            num = num + (gn_pow[i] * gd_pow[d - i]).scale(ci)
        di = f.den.coefficient(i)
        if di:
            den = den + (gn_pow[i] * gd_pow[d - i]).scale(di)
    return RationalMap(num, den, reduce=True)


def map_over_qq(num: Poly, den: Poly) -> RationalMap:
    """Convenience: view integer polynomials as a map over QQ and reduce."""
    from .polys import lift_to_qq

    return RationalMap(lift_to_qq(num), lift_to_qq(den), reduce=True)


def qq_point(numerator: int, denominator: int = 1) -> ProjPoint:
    return ProjPoint(Fraction(numerator, denominator))
