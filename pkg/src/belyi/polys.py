"""Dense univariate polynomials over QQ, ZZ, or GF(p).

Coefficients are stored ascending (coeffs[i] is the coefficient of x^i) with
trailing zeros stripped, so the zero polynomial has an empty coefficient
tuple.  Its degree is the sentinel None rather than -1: any degree comparison
against the zero polynomial raises instead of silently ordering it.

Every Poly is immutable; all operations return new values, so instances can
be shared freely across threads.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import ExactDivisionError
from .fields import GF, QQ, ZZ


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs, *, _raw=False):
        if _raw:
            object.__setattr__(self, "ring", ring)
            object.__setattr__(self, "coeffs", coeffs)
            return
        vals = [ring.coerce(c) for c in coeffs]
        while vals and not vals[-1]:
            vals.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _make(cls, ring, vals):
        """Internal: vals are already canonical; just strip trailing zeros."""
        n = len(vals)
        while n and not vals[n - 1]:
            n -= 1
        return cls(ring, tuple(vals[:n]), _raw=True)

    @classmethod
    def zero(cls, ring):
        return cls(ring, (), _raw=True)

    @classmethod
    def one(cls, ring):
        return cls.constant(ring, 1)

    @classmethod
    def constant(cls, ring, c):
        c = ring.coerce(c)
        return cls(ring, (c,) if c else (), _raw=True)

    @classmethod
    def x(cls, ring):
        return cls.monomial(ring, 1, 1)

    @classmethod
    def monomial(cls, ring, c, n):
        """c * x^n."""
        c = ring.coerce(c)
        if not c:
            return cls.zero(ring)
        return cls(ring, (ring.coerce(0),) * n + (c,), _raw=True)

    # -- basic structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ring.coerce(0)

    def _check_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError(f"mixed coefficient rings: {self.ring} vs {other.ring}")

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        canon = self.ring.canon
        return Poly._make(self.ring, [canon(-c) for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        canon = self.ring.canon
        vals = [
            canon(a + b)
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        ]
        return Poly._make(self.ring, vals)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        canon = self.ring.canon
        vals = [
            canon(a - b)
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        ]
        return Poly._make(self.ring, vals)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ring)
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        canon = self.ring.canon
        return Poly._make(self.ring, [canon(v) for v in out])

    def scale(self, c):
        """Multiply every coefficient by the scalar c."""
        c = self.ring.coerce(c)
        canon = self.ring.canon
        return Poly._make(self.ring, [canon(c * v) for v in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, n: int):
        """Multiply by x^n."""
        if self.is_zero or n == 0:
            return self
        return Poly(self.ring, (self.ring.coerce(0),) * n + self.coeffs, _raw=True)

    def __call__(self, x):
        """Evaluate by Horner's rule; x is coerced into the coefficient ring."""
        ring = self.ring
        x = ring.coerce(x)
        acc = ring.coerce(0)
        for c in reversed(self.coeffs):
            acc = ring.canon(acc * x + c)
        return acc

    def __divmod__(self, other):
        """Long division; needs the divisor's leading coefficient invertible
        (any nonzero over a field, a unit or exact divisor over ZZ)."""
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        canon = ring.canon
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return Poly.zero(ring), self
        lead = other.leading
        quot = [0] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            top = rem[k + dd]
            if not top:
                continue
            q = ring.div(top, lead)
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] = canon(rem[k + i] - q * c)
        return Poly._make(ring, [canon(q) for q in quot]), Poly._make(ring, rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ExactDivisionError("polynomial division left a remainder")
        return q

    # -- calculus and rewriting ----------------------------------------------

    def derivative(self):
        canon = self.ring.canon
        vals = [canon(i * c) for i, c in enumerate(self.coeffs)][1:]
        return Poly._make(self.ring, vals)

    def monic(self):
        if self.is_zero:
            return self
        lead = self.leading
        if lead == self.ring.coerce(1):
            return self
        inv = self.ring.inv(lead)
        canon = self.ring.canon
        return Poly._make(self.ring, [canon(c * inv) for c in self.coeffs])

    def reversed(self, n: int):
        """x^n * p(1/x) for n >= deg p: the coefficient list reversed,
        zero-padded up to degree n."""
        if self.is_zero:
            return self
        if n < self.degree:
            raise ValueError("reversal order below the degree")
        zero = self.ring.coerce(0)
        vals = [zero] * (n - self.degree) + list(reversed(self.coeffs))
        return Poly._make(self.ring, vals)

    def deflate(self, k: int):
        """q with p(x) = q(x^k); every exponent must be a multiple of k."""
        if k < 1:
            raise ValueError("deflation step must be positive")
        if k == 1 or self.is_zero:
            return self
        for i, c in enumerate(self.coeffs):
            if c and i % k:
                raise ValueError(f"exponent {i} is not a multiple of {k}")
        return Poly._make(self.ring, list(self.coeffs[::k]))

    def inflatable_by(self, k: int) -> bool:
        return all(not c or i % k == 0 for i, c in enumerate(self.coeffs))

    def to_ring(self, ring):
        """Re-coerce coefficients into another ring (ZZ -> GF(p), ZZ -> QQ, ...)."""
        return Poly(ring, self.coeffs)

    def __repr__(self):
        from .render import poly_str

        return f"Poly({self.ring}, {poly_str(self)})"


# -- module-level operations ------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over a field."""
    a._check_ring(b)
    if not a.ring.is_field:
        raise TypeError("polynomial gcd requires field coefficients")
    while not b.is_zero:
        a, b = b, a % b
        # keeping the intermediate monic tames coefficient growth over QQ
        b = b.monic()
    return a.monic()


def content(p: Poly) -> int:
    """Positive gcd of the coefficients of a nonzero integer polynomial."""
    if p.ring != ZZ:
        raise TypeError("content is defined over ZZ")
    if p.is_zero:
        raise ValueError("the zero polynomial has no content")
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(p: Poly) -> Poly:
    """p divided by its content (sign stays with the primitive part)."""
    c = content(p)
    if c == 1:
        return p
    return Poly._make(ZZ, [v // c for v in p.coeffs])


def rational_content(p: Poly) -> tuple[Fraction, Poly]:
    """Write p over QQ as c * q with c a positive rational and q primitive
    over ZZ; returns (c, q)."""
    if p.ring != QQ:
        raise TypeError("rational_content is defined over QQ")
    if p.is_zero:
        raise ValueError("the zero polynomial has no content")
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    prim = Poly._make(ZZ, [v // g for v in ints])
    return Fraction(g, den_lcm), prim


def derivative(p: Poly) -> Poly:
    return p.derivative()


def wronskian(f1: Poly, f2: Poly) -> Poly:
    """f1' * f2 - f1 * f2'."""
    return f1.derivative() * f2 - f1 * f2.derivative()


def ord_at(p: Poly, a) -> int:
    """Multiplicity of a as a root of p (0 when p(a) != 0); p must be nonzero.

    Only affine points are accepted; callers handle the point at infinity by
    conjugating with x -> 1/x (see projline).
    """
    if p.is_zero:
        raise ValueError("ord_at is undefined for the zero polynomial")
    if not isinstance(a, (int, Fraction)):
        raise ValueError(
            "ord_at expects an affine point; conjugate by 1/x for infinity"
        )
    ring = p.ring
    a = ring.coerce(a)
    canon = ring.canon
    count = 0
    coeffs = list(p.coeffs)
    while True:
        # synthetic division by (x - a): remainder is p(a)
        acc = coeffs[-1]
        quot = [acc]
        for c in reversed(coeffs[:-1]):
            acc = canon(acc * a + c)
            quot.append(acc)
        rem = quot.pop()
        if rem:
            return count
        count += 1
        coeffs = list(reversed(quot))
        if not coeffs:
            return count


def lift_to_qq(p: Poly) -> Poly:
    """View an integer polynomial over QQ."""
    if p.ring == QQ:
        return p
    return Poly(QQ, [Fraction(c) for c in p.coeffs])


def reduce_mod(p: Poly, modulus: int) -> Poly:
    """Reduce an integer polynomial modulo a prime."""
    if p.ring != ZZ:
        raise TypeError("reduce_mod expects an integer polynomial")
    return p.to_ring(GF(modulus))
