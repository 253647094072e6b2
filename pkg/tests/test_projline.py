import random
from fractions import Fraction

import pytest

from belyi import GF, INF, QQ, Poly, ProjPoint, RationalMap, compose, eval_map


def qmap(num, den):
    return RationalMap(Poly(QQ, num), Poly(QQ, den), reduce=True)


def test_eval_examples():
    f = qmap((0, 0, 3, -2), (1,))  # -2x^3 + 3x^2
    assert eval_map(f, Fraction(1, 2)) == ProjPoint(Fraction(1, 2))
    assert eval_map(f, INF) == INF

    g = qmap((0, 0, -3, 1), (1, -3))  # x^2(x-3) / (-3x+1)
    assert eval_map(g, Fraction(1, 3)) == INF  # denominator root, numerator not


def test_eval_at_infinity_degree_cases():
    up = qmap((0, 1), (1,))
    down = qmap((1,), (0, 1))
    level = qmap((0, 3), (1, 2))
    assert eval_map(up, INF) == INF
    assert eval_map(down, INF) == ProjPoint(Fraction(0))
    assert eval_map(level, INF) == ProjPoint(Fraction(3, 2))


def test_gcd_cancellation_on_construction():
    f = RationalMap(Poly(QQ, (0, 1, 1)), Poly(QQ, (0, 1)), reduce=True)  # (x^2+x)/x
    assert f.num == Poly(QQ, (1, 1)) and f.den == Poly.one(QQ)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalMap(Poly.one(QQ), Poly.zero(QQ))


def test_monic_denominator_is_canonical():
    F5 = GF(5)
    f = RationalMap(Poly(F5, (0, 0, 3)), Poly(F5, (1, 2)))
    g = f.monic_denominator()
    assert g.den.leading == 1
    assert g.same_function(f)


def test_literal_equality_vs_same_function():
    f = qmap((0, 2), (2,))
    g = qmap((0, 1), (1,))
    assert f.same_function(g)
    assert f != g  # literal pair comparison is deliberate


def test_eval_respects_composition():
    rng = random.Random(31)
    for _ in range(20):
        f = qmap([rng.randint(-5, 5) for _ in range(3)], [rng.randint(-5, 5) for _ in range(2)])
        g = qmap([rng.randint(-5, 5) for _ in range(3)], [rng.randint(-5, 5) for _ in range(2)])
        if f.degree == 0 or g.degree == 0:
            continue
        h = compose(f, g)
        for x in [Fraction(n, 3) for n in range(-6, 7)] + [INF]:
            gx = eval_map(g, x)
            assert eval_map(f, gx) == eval_map(h, x)


def test_point_ordering():
    pts = [INF, ProjPoint(Fraction(3, 2)), ProjPoint(Fraction(-1, 2)), ProjPoint(Fraction(0))]
    ordered = sorted(pts, key=ProjPoint.sort_key)
    assert [str(p) for p in ordered] == ["-1/2", "0", "3/2", "inf"]
