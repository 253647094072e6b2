import pytest

from belyi import (
    CombinatorialType,
    Family,
    classify_type,
    count_closed_form,
    count_nonpolynomial,
    count_polynomial,
    enumerate_types,
    validate,
)
from belyi.errors import InvalidTypeError


def test_validate_accepts_known_types():
    assert validate(3, 2, 2, 3) == CombinatorialType(3, 2, 2, 3)
    assert validate(15, 13, 3, 15) == CombinatorialType(15, 13, 3, 15)


def test_validate_names_the_failed_invariant():
    with pytest.raises(InvalidTypeError, match="sum is 8"):
        validate(4, 2, 2, 4)
    with pytest.raises(InvalidTypeError, match="e2"):
        validate(5, 4, 1, 6)
    with pytest.raises(InvalidTypeError, match="e3"):
        validate(5, 3, 3, 6)


def test_enumerate_small_degrees():
    assert enumerate_types(3) == [CombinatorialType(3, 2, 2, 3)]
    assert enumerate_types(4) == [
        CombinatorialType(4, 2, 3, 4),
        CombinatorialType(4, 3, 3, 3),
    ]
    assert len(enumerate_types(7)) == 6
    with pytest.raises(InvalidTypeError):
        enumerate_types(2)


def test_enumerate_matches_brute_force():
    for d in range(3, 41):
        brute = [
            CombinatorialType(d, e1, e2, e3)
            for e1 in range(2, d + 1)
            for e2 in range(e1, d + 1)
            for e3 in range(e2, d + 1)
            if e1 + e2 + e3 == 2 * d + 1
        ]
        assert enumerate_types(d) == brute


def test_counts():
    assert count_closed_form(7) == 6  # c = 5 for d = 1 mod 6
    assert count_closed_form(6) == 4  # c = 12 for d = 0, 2 mod 6
    assert count_closed_form(9) == 9  # c = 9 for d = 3, 5 mod 6
    assert count_closed_form(4) == 2  # c = 8 for d = 4 mod 6
    assert count_polynomial(10) == 4
    assert count_nonpolynomial(7) == 3
    assert count_nonpolynomial(4) == 1
    assert count_nonpolynomial(3) == 0


def test_counts_consistent_with_enumeration():
    for d in range(3, 120):
        assert len(enumerate_types(d)) == count_closed_form(d)
        assert count_closed_form(d) == count_polynomial(d) + count_nonpolynomial(d)


def test_classify_direct_polynomial():
    cls = classify_type(CombinatorialType(15, 13, 3, 15))
    assert cls.family is Family.POLYNOMIAL and cls.k == 2 and cls.direct


def test_classify_direct_symmetric():
    cls = classify_type(CombinatorialType(5, 3, 5, 3))
    assert cls.family is Family.SYMMETRIC and cls.k == 2 and cls.direct


def test_classify_general():
    cls = classify_type(CombinatorialType(7, 4, 5, 6))
    assert cls.family is Family.GENERAL and cls.k is None


def test_classify_permuted_polynomial():
    cls = classify_type(CombinatorialType(15, 15, 3, 13))
    assert cls.family is Family.POLYNOMIAL and not cls.direct
    assert cls.pattern == CombinatorialType(15, 3, 13, 15)
    # pattern[i] == t[sigma[i]]
    t = (15, 3, 13)
    assert all(
        cls.pattern.indices[i] == (15, 3, 13)[cls.permutation[i]] for i in range(3)
    )


def test_classify_permuted_tie_prefers_polynomial():
    # {3, 3, 5} matches both patterns as a multiset (d = 2k + 1)
    cls = classify_type(CombinatorialType(5, 5, 3, 3))
    assert cls.family is Family.POLYNOMIAL and cls.k == 2
    # but the direct symmetric arrangement stays symmetric
    assert classify_type(CombinatorialType(5, 3, 5, 3)).family is Family.SYMMETRIC
    # and the direct polynomial arrangement stays polynomial
    assert classify_type(CombinatorialType(5, 3, 3, 5)).family is Family.POLYNOMIAL


def test_classified_patterns_are_direct():
    for d in range(3, 25):
        for t in enumerate_types(d):
            cls = classify_type(t)
            if cls.family is Family.GENERAL:
                continue
            again = classify_type(cls.pattern)
            assert again.direct and again.family is cls.family and again.k == cls.k


def test_every_type_containing_d_is_polynomial():
    for d in range(3, 25):
        for t in enumerate_types(d):
            cls = classify_type(t)
            if d in t.indices:
                assert cls.family is Family.POLYNOMIAL
            if cls.family is Family.SYMMETRIC:
                a, b, c = sorted(t.indices)
                assert a == b or b == c
                assert (2 * cls.k + 1) % 2 == 1
