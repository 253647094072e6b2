import random
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd

import pytest

from belyi import GF, QQ, ZZ, Poly, content, ord_at, poly_gcd, wronskian
from belyi.errors import ExactDivisionError
from belyi.polys import lift_to_qq, primitive_part, rational_content


def qp(*coeffs):
    return Poly(QQ, coeffs)


def zp(*coeffs):
    return Poly(ZZ, coeffs)


def test_zero_polynomial_degree_is_sentinel():
    z = Poly.zero(QQ)
    assert z.is_zero
    assert z.degree is None
    with pytest.raises(TypeError):
        z.degree > 0  # comparisons with the sentinel must not silently work


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        zp(1, 1) + qp(1, 1)
    with pytest.raises(ValueError):
        Poly(GF(5), (1, 1)) * Poly(GF(7), (1, 1))


def test_gf_coefficients_canonical():
    p = Poly(GF(5), (7, -1, 10))
    assert p.coeffs == (2, 4)  # 10 = 0 strips the leading term


def test_gcd_shared_root():
    g = poly_gcd(qp(-1, 0, 1), qp(-1, 1))  # x^2-1, x-1
    assert g == qp(-1, 1)


def test_gcd_coprime():
    assert poly_gcd(qp(0, 0, 1), qp(1, 1)) == Poly.one(QQ)


def test_gcd_over_f2_reconstructs_inputs():
    F2 = GF(2)
    a = Poly(F2, [0] * 10 + [1, 0, 1, 0, 1])  # x^14+x^12+x^10
    b = Poly(F2, (1, 0, 1))  # x^2+1
    g = poly_gcd(a, b)
    # cross-check: multiplying the quotients back reconstructs the inputs
    for f in (a, b):
        q, r = divmod(f, g)
        assert r.is_zero and q * g == f


def test_gcd_divides_and_is_divisible_small_fields():
    # brute force over F_2 and F_3: any common divisor divides the gcd
    rng = random.Random(5)
    for p in (2, 3):
        field = GF(p)
        for _ in range(25):
            a = Poly(field, [rng.randrange(p) for _ in range(rng.randint(1, 6))])
            b = Poly(field, [rng.randrange(p) for _ in range(rng.randint(1, 6))])
            if a.is_zero or b.is_zero:
                continue
            g = poly_gcd(a, b)
            assert (a % g).is_zero and (b % g).is_zero
            max_deg = min(a.degree, b.degree)
            for coeffs in product(range(p), repeat=max_deg + 1):
                h = Poly(field, coeffs)
                if h.is_zero or h.degree == 0:
                    continue
                if (a % h).is_zero and (b % h).is_zero:
                    assert (g % h).is_zero


def test_content_examples():
    assert content(zp(-4, 0, 6)) == 2  # 6x^2 - 4
    assert content(zp(0, 0, 3, -2)) == 1  # -2x^3 + 3x^2
    coeffs = [0, 0, 0, 50, -75, 30]  # 30x^5 - 75x^4 + 50x^3
    assert content(Poly(ZZ, coeffs)) == reduce(gcd, coeffs)  # = 5
    with pytest.raises(ValueError):
        content(Poly.zero(ZZ))


def test_content_times_primitive_part():
    rng = random.Random(7)
    for _ in range(50):
        p = Poly(ZZ, [rng.randint(-40, 40) for _ in range(rng.randint(1, 8))])
        if p.is_zero:
            continue
        assert primitive_part(p).scale(content(p)) == p
        assert content(primitive_part(p)) == 1


def test_rational_content():
    c, prim = rational_content(qp(0, Fraction(1, 2)))  # x/2
    assert c == Fraction(1, 2) and prim == zp(0, 1)
    c, prim = rational_content(qp(3, 0, -2))
    assert c == 1 and prim == zp(3, 0, -2)  # sign stays with the primitive part


def test_derivative_examples():
    f = zp(0, 0, 3, -2)  # -2x^3 + 3x^2
    assert f.derivative() == zp(0, 6, -6)
    # -6x(x-1) expanded
    assert f.derivative() == zp(0, -6).scale(1) * zp(-1, 1)

    assert Poly(GF(3), [0] * 15 + [1]).derivative().is_zero

    g = zp(0, 0, 0, 10, -15, 6)  # 6x^5 - 15x^4 + 10x^3
    expect = zp(0, 0, 30) * zp(-1, 1) * zp(-1, 1)  # 30x^2 (x-1)^2
    assert g.derivative() == expect


def test_derivative_linearity_and_product_rule():
    rng = random.Random(11)
    for _ in range(40):
        a = Poly(QQ, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)])
        b = Poly(QQ, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)])
        assert (a + b).derivative() == a.derivative() + b.derivative()
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_wronskian_examples():
    f1 = zp(0, 0, -3, 1)  # x^3 - 3x^2
    f2 = zp(1, -3)  # -3x + 1
    expect = zp(0, -6) * zp(-1, 1) ** 2  # -6x(x-1)^2
    assert wronskian(f1, f2) == expect

    d = 9
    assert wronskian(Poly.monomial(ZZ, 1, d), Poly.one(ZZ)) == Poly.monomial(ZZ, d, d - 1)
    assert wronskian(f1, f1).is_zero


def test_wronskian_antisymmetry():
    rng = random.Random(13)
    for _ in range(30):
        a = zp(*[rng.randint(-9, 9) for _ in range(5)])
        b = zp(*[rng.randint(-9, 9) for _ in range(4)])
        assert wronskian(a, b) == -wronskian(b, a)


def test_ord_at():
    p = zp(0, 0, 1) * zp(-1, 1)  # x^2 (x-1)
    assert ord_at(p, 0) == 2
    assert ord_at(p, 1) == 1
    assert ord_at(p, 5) == 0
    f = qp(0, -1, 3, -2)  # -2x^3 + 3x^2 - x
    assert ord_at(f, Fraction(1, 2)) == 1
    with pytest.raises(ValueError):
        ord_at(Poly.zero(QQ), 0)


def test_ord_at_rejects_infinity():
    from belyi import INF

    with pytest.raises(ValueError):
        ord_at(zp(1, 1), INF)


def test_divmod_reconstruction():
    rng = random.Random(17)
    for ring in (QQ, GF(5)):
        for _ in range(40):
            a = Poly(ring, [rng.randint(-10, 10) for _ in range(rng.randint(1, 8))])
            b = Poly(ring, [rng.randint(-10, 10) for _ in range(rng.randint(1, 5))])
            if b.is_zero:
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero or r.degree < b.degree


def test_exact_division_over_zz():
    a = zp(0, 0, 2, -2)
    assert a.exact_div(zp(0, 2)) == zp(0, 1, -1)
    with pytest.raises(ExactDivisionError):
        zp(1, 3).exact_div(zp(2))


def test_reversed_and_deflate():
    p = zp(0, 3, 1)  # x^2 + 3x
    assert p.reversed(3) == zp(0, 1, 3)  # x^3 p(1/x) = 3x^2 + x
    with pytest.raises(ValueError):
        p.reversed(1)
    q = Poly(GF(3), (2, 0, 0, 1, 0, 0, 2))  # 2x^6 + x^3 + 2
    assert q.deflate(3) == Poly(GF(3), (2, 1, 2))
    with pytest.raises(ValueError):
        q.deflate(2)


def test_evaluate_matches_expansion():
    p = zp(4, -3, 0, 2)
    x = 7
    assert p(x) == 4 - 3 * x + 2 * x**3
    assert lift_to_qq(p)(Fraction(1, 2)) == Fraction(4) - Fraction(3, 2) + Fraction(2, 8)
