"""Abstract combinatorial types (d; e1, e2, e3) of genus 0 and their counts.

A type is valid when 2 <= e_i <= d for all i and e1 + e2 + e3 = 2d + 1.  The
tuple is ordered: e1, e2, e3 are the ramification indices over 0, 1 and
infinity respectively, so permuting the entries gives a different (linearly
conjugate) normalized map.  Enumeration emits the sorted representative of
each conjugacy class.

Types with some e_i = 1 (pure power maps, up to conjugacy) are excluded
throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidTypeError

# Soft cap keeping divisor enumeration downstream feasible.
MAX_DEGREE = 10**4


class CombinatorialType(NamedTuple):
    d: int
    e1: int
    e2: int
    e3: int

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.e1, self.e2, self.e3)

    def sorted(self) -> "CombinatorialType":
        return CombinatorialType(self.d, *sorted(self.indices))

    def __str__(self) -> str:
        return f"({self.d}; {self.e1}, {self.e2}, {self.e3})"


def validate(d: int, e1: int, e2: int, e3: int) -> CombinatorialType:
    """Return the type iff both defining invariants hold."""
    if d > MAX_DEGREE:
        raise InvalidTypeError(f"degree {d} exceeds the configured cap {MAX_DEGREE}")
    for name, e in (("e1", e1), ("e2", e2), ("e3", e3)):
        if not 2 <= e <= d:
            raise InvalidTypeError(f"{name} = {e} violates 2 <= {name} <= d = {d}")
    total = e1 + e2 + e3
    if total != 2 * d + 1:
        raise InvalidTypeError(
            f"sum is {total} != {2 * d + 1}: e1 + e2 + e3 = 2d + 1 fails"
        )
    return CombinatorialType(d, e1, e2, e3)


def is_valid(d: int, e1: int, e2: int, e3: int) -> bool:
    try:
        validate(d, e1, e2, e3)
    except InvalidTypeError:
        return False
    return True


def enumerate_types(d: int) -> list[CombinatorialType]:
    """All valid types of degree d with e1 <= e2 <= e3, lexicographic."""
    if d < 3:
        raise InvalidTypeError(f"no valid types in degree {d} < 3")
    if d > MAX_DEGREE:
        raise InvalidTypeError(f"degree {d} exceeds the configured cap {MAX_DEGREE}")
    target = 2 * d + 1
    out = []
    for e1 in range(2, d + 1):
        # e2 <= e3 <= d pins e2 into [max(e1, target - e1 - d), (target - e1)//2]
        lo = max(e1, target - e1 - d)
        hi = (target - e1) // 2
        for e2 in range(lo, hi + 1):
            out.append(CombinatorialType(d, e1, e2, target - e1 - e2))
    return out


def count_closed_form(d: int) -> int:
    """(d^2 + 4d - c)/12 with c depending on d mod 6."""
    if d < 3:
        raise InvalidTypeError(f"no valid types in degree {d} < 3")
    c = {0: 12, 1: 5, 2: 12, 3: 9, 4: 8, 5: 9}[d % 6]
    return (d * d + 4 * d - c) // 12


def count_polynomial(d: int) -> int:
    """Number of classes with e3 = d (polynomial maps): floor((d-1)/2)."""
    if d < 3:
        raise InvalidTypeError(f"no valid types in degree {d} < 3")
    return (d - 1) // 2


def count_nonpolynomial(d: int) -> int:
    """Sum over i of floor((d+1-3i)/2); zero when d = 3."""
    if d < 3:
        raise InvalidTypeError(f"no valid types in degree {d} < 3")
    return sum((d + 1 - 3 * i) // 2 for i in range(1, (d - 1) // 3 + 1))


class Family(enum.Enum):
    POLYNOMIAL = "polynomial"
    SYMMETRIC = "symmetric"
    GENERAL = "general"


IDENTITY = (0, 1, 2)


@dataclass(frozen=True)
class TypeClass:
    """Which construction formula covers a type, and in which arrangement.

    pattern is the arrangement the formula realizes: (d-k, k+1, d) for the
    polynomial family, (d-k, 2k+1, d-k) for the symmetric one.  permutation
    sigma satisfies pattern.indices[i] == t.indices[sigma[i]]; it is IDENTITY
    exactly when the input arrangement is directly buildable.
    """

    family: Family
    k: int | None
    pattern: CombinatorialType | None
    permutation: tuple[int, int, int] | None

    @property
    def direct(self) -> bool:
        return self.permutation == IDENTITY


def _match_permutation(t: CombinatorialType, pattern: CombinatorialType):
    remaining = [0, 1, 2]
    sigma = []
    for want in pattern.indices:
        for pos in remaining:
            if t.indices[pos] == want:
                sigma.append(pos)
                remaining.remove(pos)
                break
    return tuple(sigma)


def classify_type(t: CombinatorialType) -> TypeClass:
    """Decide the construction family for a valid type.

    A direct match of the given arrangement wins over one that needs a
    coordinate permutation, and among permuted-only matches the polynomial
    family wins (the two patterns share a multiset only when d = 2k + 1).
    """
    t = validate(*t)
    d = t.d
    if t.e3 == d:
        return TypeClass(Family.POLYNOMIAL, t.e2 - 1, t, IDENTITY)
    if t.e1 == t.e3:
        return TypeClass(Family.SYMMETRIC, d - t.e1, t, IDENTITY)
    a, b, c = sorted(t.indices)
    if c == d:
        k = b - 1
        pattern = CombinatorialType(d, d - k, k + 1, d)
        return TypeClass(Family.POLYNOMIAL, k, pattern, _match_permutation(t, pattern))
    if a == b or b == c:
        odd = c if a == b else a
        k = (odd - 1) // 2
        pattern = CombinatorialType(d, d - k, 2 * k + 1, d - k)
        return TypeClass(Family.SYMMETRIC, k, pattern, _match_permutation(t, pattern))
    return TypeClass(Family.GENERAL, None, None, None)
