"""Coefficient rings: the rationals QQ, the integers ZZ, and prime fields GF(p).

Polynomials store coefficients as plain Python values and carry one of these
ring objects as context:

    QQ     -> fractions.Fraction (always in lowest terms, positive denominator)
    ZZ     -> int
    GF(p)  -> int, canonically reduced into [0, p)

Ring objects supply the arithmetic the polynomial layer needs.  GF instances
are interned per modulus, so an accidental mix of two different moduli fails
the ring-identity check in Poly immediately instead of producing garbage.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactDivisionError
from .intfactor import is_prime


class RationalField:
    """The field of rational numbers; elements are Fraction."""

    is_field = True
    characteristic = 0
    name = "QQ"

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def canon(self, value) -> Fraction:
        # Fraction arithmetic already yields reduced Fractions.
        return value if isinstance(value, Fraction) else Fraction(value)

    def div(self, a, b):
        return Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else a / b

    def inv(self, a):
        return 1 / Fraction(a)

    def __repr__(self) -> str:
        return self.name


class IntegerRing:
    """The ring of integers; division must be exact."""

    is_field = False
    characteristic = 0
    name = "ZZ"

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise TypeError(f"cannot coerce {value!r} into ZZ")

    def canon(self, value) -> int:
        return value

    def div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} is not divisible by {b} in ZZ")
        return q

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ExactDivisionError(f"{a} is not a unit in ZZ")

    def __repr__(self) -> str:
        return self.name


class PrimeField:
    """GF(p) for prime p; elements are ints reduced into [0, p).

    Construct through the GF() factory, which interns instances so that
    ring identity coincides with equality of moduli.
    """

    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator of {value} vanishes modulo {self.p}"
                )
            return value.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def canon(self, value) -> int:
        return value % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return self.name


QQ = RationalField()
ZZ = IntegerRing()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field with p elements (interned per modulus)."""
    field = _GF_CACHE.get(p)
    if field is None:
        field = PrimeField(p)
        _GF_CACHE[p] = field
    return field


def multiplicative_order(a: int, p: int) -> int | None:
    """Order of a in GF(p)^*, or None for a = 0 (order is infinite).

    The None return is deliberate: callers must treat the zero multiplier
    as a distinguished case, not as a very large order.
    """
    a %= p
    if a == 0:
        return None
    order = 1
    x = a
    while x != 1:
        x = x * a % p
        order += 1
    return order
