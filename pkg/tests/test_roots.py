import random
from fractions import Fraction

import pytest

from belyi import ZZ, Poly, rational_roots
from belyi.errors import FactorizationError
from belyi.intfactor import divisors, factorize, is_prime
from belyi.polys import lift_to_qq


def zp(*coeffs):
    return Poly(ZZ, coeffs)


def test_examples():
    assert rational_roots(zp(-1, 0, 1)) == {Fraction(1), Fraction(-1)}
    # -2x^3 + 3x^2 - x
    assert rational_roots(zp(0, -1, 3, -2)) == {Fraction(0), Fraction(1, 2), Fraction(1)}
    # -3x^4 + 4x^3
    assert rational_roots(zp(0, 0, 0, 4, -3)) == {Fraction(0), Fraction(4, 3)}


def test_every_root_evaluates_to_zero():
    rng = random.Random(23)
    for _ in range(60):
        p = zp(*[rng.randint(-30, 30) for _ in range(rng.randint(2, 7))])
        if p.is_zero:
            continue
        for r in rational_roots(p):
            assert lift_to_qq(p)(r) == 0


def test_no_root_missed_small_heights():
    # brute-force scan over rationals of height <= 50
    rng = random.Random(29)
    for _ in range(25):
        p = zp(*[rng.randint(-12, 12) for _ in range(rng.randint(2, 6))])
        if p.is_zero:
            continue
        found = rational_roots(p)
        pq = lift_to_qq(p)
        for b in range(1, 51):
            for a in range(-50, 51):
                x = Fraction(a, b)
                if pq(x) == 0:
                    assert x in found, (p, x)


def test_roots_with_multiplicity_and_powers_of_x():
    p = zp(0, 0, 0, 0, 1) * zp(-1, 2) ** 3  # x^4 (2x-1)^3
    assert rational_roots(p) == {Fraction(0), Fraction(1, 2)}


def test_constant_polynomial_has_no_roots():
    assert rational_roots(zp(7)) == set()
    with pytest.raises(ValueError):
        rational_roots(Poly.zero(ZZ))


def test_factorization_bound_is_loud():
    # constant term is a semiprime with both factors just above 10^6, so the
    # leftover cofactor exceeds the 10^12 fallback limit at the default bound
    big = 1000003 * 1000033
    with pytest.raises(FactorizationError):
        rational_roots(zp(big, 0, 1))
    # a larger bound resolves it
    assert rational_roots(zp(big, 0, 1), bound=1_100_000) == set()


def test_fallback_factors_semiprime_cofactors():
    n = 10007 * 10009
    assert factorize(n, bound=100) == {10007: 1, 10009: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-18) == [1, 2, 3, 6, 9, 18]


def test_is_prime_deterministic_values():
    assert is_prime(2) and is_prime(3) and is_prime(10007)
    assert not is_prime(1) and not is_prime(0) and not is_prime(10007 * 10009)
    # strong pseudoprime to several small bases
    assert not is_prime(3215031751)
