"""Explicit normalized Belyi maps for the two closed-form families.

Both families are built with exact rational coefficients and certified
symbolically: the polynomial family (d; d-k, k+1, d) through two independent
coefficient formulas whose agreement is asserted on every build, and the
symmetric family (d; d-k, 2k+1, d-k) through its coefficient product formula
plus the reversal symmetry between numerator and denominator.  verify()
checks the normalization f(0)=0, f(1)=1, f(inf)=inf and reads the
ramification off the wronskian factor shape by exact division, with no root
finding and no numerics anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .combinatorics import (
    CombinatorialType,
    Family,
    TypeClass,
    classify_type,
    validate,
)
from .errors import ConstructionError, UnsupportedTypeError
from .fields import QQ, ZZ
from .polys import (
    Poly,
    content,
    lift_to_qq,
    ord_at,
    poly_gcd,
    rational_content,
    wronskian,
)
from .projline import INF, ProjPoint, RationalMap, compose, eval_map


@dataclass(frozen=True)
class BelyiMap:
    """A normalized genus-0 single-cycle Belyi map with its integer model.

    map is the exact rational function (f(1) = 1 on the nose); model_num and
    model_den are the content-1 integer polynomials with
    map = scale * model_num / model_den, and scale = 1 for every map this
    module constructs.
    """

    ctype: CombinatorialType
    map: RationalMap
    model_num: Poly
    model_den: Poly
    scale: Fraction

    @property
    def d(self) -> int:
        return self.ctype.d

    @property
    def integer_model(self) -> tuple[Poly, Poly]:
        return (self.model_num, self.model_den)

    def __str__(self) -> str:
        from .render import map_str

        return f"BelyiMap{self.ctype} {map_str(self.map)}"


def normalize_integer_model(f: RationalMap) -> tuple[Poly, Poly, Fraction]:
    """Split a map over QQ into primitive integer parts and a positive scale.

    Returns (num, den, c) with num, den content-1 integer polynomials and
    f = c * num / den.
    """
    if f.ring != QQ:
        raise TypeError("normalize_integer_model expects a map over QQ")
    c1, num = rational_content(f.num)
    c2, den = rational_content(f.den)
    return num, den, c1 / c2


def _model(ctype, num_q: Poly, den_q: Poly) -> BelyiMap:
    f = RationalMap(num_q, den_q)
    num, den, scale = normalize_integer_model(f)
    if scale != 1:
        # Every normalized map here has scale 1; anything else is a bug.
        raise ConstructionError(f"integer model of {ctype} has scale {scale} != 1")
    return BelyiMap(ctype, f, num, den, scale)


def build_polynomial(d: int, k: int) -> BelyiMap:
    """The unique normalized map of type (d; d-k, k+1, d), 1 <= k <= d-2.

    Coefficients come from the closed form
        f = c x^(d-k) (a_0 x^k + ... + a_k),
        a_i = (-1)^(k-i)/(d-i) * C(k,i),  c = (1/k!) prod_{j=0..k} (d-j)
    and independently from the recursion form
        f = x^(d-k) sum_i c_i (x-1)^i,    c_i = (-1)^i C(d-k+i-1, i);
    the two expansions must agree coefficient by coefficient.
    """
    if not 1 <= k <= d - 2:
        raise ValueError(f"(d, k) = ({d}, {k}) outside the range 1 <= k <= d-2")
    c = Fraction(prod(range(d - k, d + 1)), factorial(k))
    coeffs = [Fraction(0)] * (d + 1)
    for i in range(k + 1):
        a_i = Fraction((-1) ** (k - i) * comb(k, i), d - i)
        coeffs[d - i] = c * a_i
    num_q = Poly(QQ, coeffs)

    alt = Poly.zero(ZZ)
    x_minus_1 = Poly(ZZ, (-1, 1))
    power = Poly.one(ZZ)
    for i in range(k + 1):
        c_i = (-1) ** i * comb(d - k + i - 1, i)
        alt = alt + power.scale(c_i)
        power = power * x_minus_1
    alt = alt.shift(d - k)
    if lift_to_qq(alt) != num_q:
        raise ConstructionError(
            f"coefficient formulas disagree for (d, k) = ({d}, {k})"
        )

    ctype = validate(d, d - k, k + 1, d)
    return _model(ctype, num_q, Poly.one(QQ))


def build_symmetric(d: int, k: int) -> BelyiMap:
    """The unique normalized map of type (d; d-k, 2k+1, d-k), 2k+1 <= d.

    a_i = C(k,i) prod_{k+i+1<=j<=2k} (d-j) * prod_{0<=j<=i-1} (d-j)
        = k! C(d,i) C(d-k-i-1, k-i),
    numerator x^(d-k) (a_0 x^k - a_1 x^(k-1) + ... + (-1)^k a_k) and
    denominator the reversal (-1)^k a_k x^k + ... - a_1 x + a_0.
    """
    if k < 1 or 2 * k + 1 > d:
        raise ValueError(f"(d, k) = ({d}, {k}) outside the range k >= 1, 2k+1 <= d")
    a = []
    for i in range(k + 1):
        via_products = (
            comb(k, i)
            * prod(d - j for j in range(k + i + 1, 2 * k + 1))
            * prod(d - j for j in range(i))
        )
        via_binomials = factorial(k) * comb(d, i) * comb(d - k - i - 1, k - i)
        if via_products != via_binomials:
            raise ConstructionError(
                f"coefficient formulas disagree for (d, k) = ({d}, {k}) at i = {i}"
            )
        a.append(via_products)

    bracket = Poly(ZZ, [(-1) ** (k - i) * a[k - i] for i in range(k + 1)])
    num = bracket.shift(d - k)
    den = Poly(ZZ, [(-1) ** j * a[j] for j in range(k + 1)])
    if den != bracket.reversed(k):
        raise ConstructionError(
            f"denominator is not the numerator reversal for (d, k) = ({d}, {k})"
        )

    ctype = validate(d, d - k, 2 * k + 1, d - k)
    return _model(ctype, lift_to_qq(num), lift_to_qq(den))


def build(t: CombinatorialType) -> BelyiMap:
    """Dispatch a valid type to its family formula.

    The map is built for the classified pattern arrangement; when the input
    arrangement differs, the returned map is the conjugate representative
    (see classify_type for the permutation, conjugate() to apply it).
    """
    cls = classify_type(t)
    if cls.family is Family.POLYNOMIAL:
        return build_polynomial(cls.pattern.d, cls.k)
    if cls.family is Family.SYMMETRIC:
        return build_symmetric(cls.pattern.d, cls.k)
    raise UnsupportedTypeError(
        f"no closed form in scope for type {tuple(t)}: neither polynomial "
        "nor symmetric pattern"
    )


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    ctype: CombinatorialType
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        lines = [f"certificate for {self.ctype}: {status}"]
        for c in self.checks:
            mark = "ok " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def verify(m: BelyiMap) -> Certificate:
    """Certify normalization, coprimality, degree, ramification and the
    integer model of a claimed Belyi map against its claimed type.

    Ramification is certified without root finding: the wronskian of the
    integer model must be a nonzero constant times x^(e1-1) (x-1)^(e2-1)
    once deg den = d - e3, which pins the index at infinity by degree count.
    """
    checks: list[Check] = []
    t = m.ctype
    d, e1, e2, e3 = t.d, t.e1, t.e2, t.e3
    f = m.map

    value0 = eval_map(f, ProjPoint(Fraction(0)))
    checks.append(Check("fixes 0", value0 == ProjPoint(Fraction(0)), f"f(0) = {value0}"))
    value1 = eval_map(f, ProjPoint(Fraction(1)))
    checks.append(Check("fixes 1", value1 == ProjPoint(Fraction(1)), f"f(1) = {value1}"))
    valueinf = eval_map(f, INF)
    checks.append(Check("fixes infinity", valueinf == INF, f"f(inf) = {valueinf}"))

    deg_ok = f.num.degree == d and (f.den.degree is not None and f.den.degree < d)
    checks.append(
        Check("degree", deg_ok, f"deg num = {f.num.degree}, deg den = {f.den.degree}")
    )

    g = poly_gcd(f.num, f.den)
    checks.append(Check("coprime parts", g.degree == 0, f"gcd degree {g.degree}"))

    den_deg_ok = m.model_den.degree == d - e3
    checks.append(
        Check(
            "denominator degree matches e3",
            den_deg_ok,
            f"deg den = {m.model_den.degree}, d - e3 = {d - e3}",
        )
    )

    w = wronskian(m.model_num, m.model_den)
    shape = Poly.x(ZZ) ** (e1 - 1) * Poly(ZZ, (-1, 1)) ** (e2 - 1)
    if w.is_zero:
        checks.append(Check("ramification shape", False, "wronskian is zero"))
    else:
        quo, rem = divmod(lift_to_qq(w), lift_to_qq(shape))
        shape_ok = rem.is_zero and quo.degree == 0 and not quo.is_zero
        detail = (
            f"wronskian = {quo.coefficient(0)} * x^{e1 - 1} * (x-1)^{e2 - 1}"
            if shape_ok
            else "wronskian does not factor as c * x^(e1-1) * (x-1)^(e2-1)"
        )
        checks.append(Check("ramification shape", shape_ok, detail))

    model_ok = (
        content(m.model_num) == 1
        and content(m.model_den) == 1
        and m.scale == 1
        and f.num * lift_to_qq(m.model_den)
        == lift_to_qq(m.model_num).scale(m.scale) * f.den
    )
    checks.append(Check("primitive integer model with scale 1", model_ok))

    return Certificate(t, tuple(checks))


# -- coordinate permutations ---------------------------------------------------

# The Moebius transformations permuting {0, 1, inf}, keyed by the images
# (phi(0), phi(1), phi(inf)) as positions 0 = 0, 1 = 1, 2 = inf.
_MOEBIUS: dict[tuple[int, int, int], tuple[tuple[int, ...], tuple[int, ...]]] = {
    (0, 1, 2): ((0, 1), (1,)),        # x
    (1, 0, 2): ((1, -1), (1,)),       # 1 - x
    (2, 1, 0): ((1,), (0, 1)),        # 1/x
    (0, 2, 1): ((0, 1), (-1, 1)),     # x/(x-1)
    (1, 2, 0): ((1,), (1, -1)),       # 1/(1-x)
    (2, 0, 1): ((-1, 1), (0, 1)),     # (x-1)/x
}


def moebius_permuting(images: tuple[int, int, int]) -> RationalMap:
    """The Moebius map phi over QQ with phi(P_i) = P_images[i], where
    (P_0, P_1, P_2) = (0, 1, inf)."""
    num, den = _MOEBIUS[images]
    return RationalMap(Poly(QQ, num), Poly(QQ, den))


def conjugate(m: BelyiMap, cls: TypeClass) -> RationalMap:
    """phi^-1 o f o phi moving the pattern map onto the requested arrangement.

    cls must be the classification of the requested type; the result fixes
    0, 1, inf with ramification indices in the requested order, but is no
    longer normalized in the same coordinates as the pattern map.
    """
    if cls.permutation is None:
        raise UnsupportedTypeError("general types have no pattern map to conjugate")
    sigma = cls.permutation
    # With pattern[i] = t[sigma[i]], the conjugate g = phi^-1 o f o phi has
    # index t[j] at P_j exactly when phi(P_j) = P_{sigma^-1(j)}.
    inverse = tuple(sigma.index(i) for i in range(3))
    phi = moebius_permuting(inverse)
    phi_inv = moebius_permuting(sigma)
    return compose(phi_inv, compose(m.map, phi))
