from fractions import Fraction

import pytest

from belyi import (
    QQ,
    ZZ,
    CombinatorialType,
    Poly,
    RationalMap,
    build,
    build_polynomial,
    build_symmetric,
    classify_type,
    conjugate,
    eval_map,
    normalize_integer_model,
    ord_at,
    validate,
    verify,
    wronskian,
)
from belyi.construct import BelyiMap
from belyi.errors import UnsupportedTypeError
from belyi.polys import lift_to_qq


def zp(*coeffs):
    return Poly(ZZ, coeffs)


def test_degree3_polynomial_family():
    bm = build_polynomial(3, 1)
    assert bm.ctype == CombinatorialType(3, 2, 2, 3)
    assert bm.model_num == zp(0, 0, 3, -2)  # -2x^3 + 3x^2
    assert bm.model_den == Poly.one(ZZ)
    assert bm.scale == 1


def test_degree4_polynomial_family():
    assert build_polynomial(4, 1).model_num == zp(0, 0, 0, 4, -3)


def test_polynomial_family_5_2():
    bm = build_polynomial(5, 2)
    assert bm.model_num == zp(0, 0, 0, 10, -15, 6)  # 6x^5 - 15x^4 + 10x^3
    # oracle: derivative must be 30x^2(x-1)^2 and f(1) = 1
    assert bm.model_num.derivative() == zp(0, 0, 30) * zp(-1, 1) ** 2
    assert bm.model_num(1) == 1


def test_polynomial_family_range_errors():
    with pytest.raises(ValueError):
        build_polynomial(3, 2)
    with pytest.raises(ValueError):
        build_polynomial(5, 0)


def test_symmetric_family_examples():
    bm = build_symmetric(3, 1)
    assert bm.ctype == CombinatorialType(3, 2, 3, 2)
    assert bm.model_num == zp(0, 0, -3, 1)  # x^2 (x - 3)
    assert bm.model_den == zp(1, -3)

    bm = build_symmetric(5, 2)
    assert bm.model_num == zp(0, 0, 0, 10, -5, 1)  # x^3 (x^2 - 5x + 10)
    assert bm.model_den == zp(1, -5, 10)

    # d = 4: x^3(2x-4)/(-4x+2), primitive model divides the common content 2
    bm = build_symmetric(4, 1)
    assert bm.model_num == zp(0, 0, 0, -2, 1)
    assert bm.model_den == zp(1, -2)
    assert bm.scale == 1


def test_symmetric_family_range_errors():
    with pytest.raises(ValueError):
        build_symmetric(4, 2)  # 2k+1 = 5 > 4
    with pytest.raises(ValueError):
        build_symmetric(6, 0)


def test_symmetric_reversal_symmetry():
    # f(1/x) = 1/f(x): the numerator reversed at degree d is the denominator
    for d, k in [(3, 1), (5, 2), (8, 3), (11, 5), (12, 1)]:
        bm = build_symmetric(d, k)
        assert bm.model_num.reversed(d) == bm.model_den


def test_build_dispatch():
    bm = build(validate(15, 13, 3, 15))
    assert bm.ctype == CombinatorialType(15, 13, 3, 15)
    w = wronskian(bm.model_num, bm.model_den)
    shape = Poly.monomial(ZZ, 1, 12) * zp(-1, 1) ** 2
    quo = lift_to_qq(w).exact_div(lift_to_qq(shape))
    assert quo.degree == 0  # f' = c x^12 (x-1)^2

    assert build(validate(3, 2, 3, 2)).model_num == zp(0, 0, -3, 1)

    with pytest.raises(UnsupportedTypeError, match="no closed form in scope"):
        build(validate(7, 4, 5, 6))


def test_verify_passes_for_built_maps():
    for bm in (build_polynomial(3, 1), build_symmetric(3, 1), build_polynomial(15, 6)):
        cert = verify(bm)
        assert cert.passed, str(cert)


def test_verify_flags_wrong_claimed_type():
    good = build_polynomial(4, 1)
    lied = BelyiMap(
        CombinatorialType(4, 3, 3, 4),  # true type is (4; 3, 2, 4)
        good.map,
        good.model_num,
        good.model_den,
        good.scale,
    )
    cert = verify(lied)
    assert not cert.passed
    assert any(c.name == "ramification shape" for c in cert.failures())


def test_verify_certificate_reports_wronskian_constant():
    cert = verify(build_polynomial(3, 1))
    shape = next(c for c in cert.checks if c.name == "ramification shape")
    assert "-6" in shape.detail

    cert = verify(build_symmetric(3, 1))
    shape = next(c for c in cert.checks if c.name == "ramification shape")
    assert "(x-1)^2" in shape.detail and "-6" in shape.detail


def test_normalize_integer_model():
    f = RationalMap(Poly(QQ, (0, Fraction(1, 2))), Poly(QQ, (1, 1)))
    num, den, c = normalize_integer_model(f)
    assert (num, den, c) == (zp(0, 1), zp(1, 1), Fraction(1, 2))

    # both parts already content 1: scale is 1
    g = RationalMap(Poly(QQ, (0, 0, 1, 0, 2)), Poly(QQ, (2, 0, 1)))
    num, den, c = normalize_integer_model(g)
    assert (num, den, c) == (zp(0, 0, 1, 0, 2), zp(2, 0, 1), 1)


def test_two_coefficient_formulas_agree_on_a_sample():
    # the agreement is asserted inside the builder; a broken formula raises
    for d, k in [(6, 2), (10, 7), (17, 9), (24, 1)]:
        build_polynomial(d, k)
    for d, k in [(7, 3), (9, 2), (13, 6)]:
        build_symmetric(d, k)


def test_conjugate_realizes_requested_arrangement():
    t = validate(3, 3, 2, 2)  # permutation of the (3; 2, 2, 3) pattern
    cls = classify_type(t)
    assert not cls.direct
    g = conjugate(build(t), cls)
    # g fixes 0, 1, inf with ramification indices 3, 2, 2
    from belyi import INF, ProjPoint

    assert eval_map(g, Fraction(0)) == ProjPoint(Fraction(0))
    assert eval_map(g, Fraction(1)) == ProjPoint(Fraction(1))
    assert eval_map(g, INF) == INF
    w = wronskian(g.num, g.den)
    assert ord_at(w, Fraction(0)) == t.e1 - 1
    assert ord_at(w, Fraction(1)) == t.e2 - 1


def test_scale_is_one_across_families():
    for d in range(3, 16):
        for k in range(1, d - 1):
            assert build_polynomial(d, k).scale == 1
        for k in range(1, (d - 1) // 2 + 1):
            assert build_symmetric(d, k).scale == 1
