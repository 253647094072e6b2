"""Integer factorization by trial division, with a bounded fallback.

Factoring here only has to cover the constant and leading coefficients that
the rational root theorem inspects.  Those are built from binomial
coefficients and small scalars, so trial division up to the configured bound
(default 10**6, overridable through the BELYI_FACTOR_BOUND environment
variable) almost always finishes the job.  A leftover cofactor up to 10**12
is handled by a deterministic Miller-Rabin test plus Brent's variant of
Pollard rho; anything larger raises FactorizationError rather than risking a
silently incomplete divisor list.
"""

from __future__ import annotations

import math
import os

from .errors import FactorizationError

DEFAULT_TRIAL_BOUND = 10**6
FALLBACK_LIMIT = 10**12

# Deterministic witness set for Miller-Rabin below 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def trial_bound() -> int:
    """Current trial-division bound (environment override included)."""
    raw = os.environ.get("BELYI_FACTOR_BOUND")
    if raw is None:
        return DEFAULT_TRIAL_BOUND
    bound = int(raw)
    if bound < 2:
        raise ValueError("BELYI_FACTOR_BOUND must be at least 2")
    return bound


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 10**12 fallback range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Nontrivial factor of odd composite n; deterministic parameter sweep."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationError(f"Pollard rho failed to split {n}")


def factorize(n: int, bound: int | None = None) -> dict[int, int]:
    """Prime factorization of n >= 1 as an exponent dictionary.

    Raises FactorizationError when a cofactor survives trial division up to
    `bound` and exceeds the 10**12 fallback limit.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    if bound is None:
        bound = trial_bound()
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    step = 2  # alternate 5,7,11,13,... skipping multiples of 2 and 3
    while p <= bound and p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n == 1:
        return factors
    if p * p > n:
        # no factor below sqrt(n), so the cofactor is prime
        factors[n] = factors.get(n, 0) + 1
        return factors
    _fallback(n, factors)
    return factors


def _fallback(n: int, factors: dict[int, int]) -> None:
    if n > FALLBACK_LIMIT:
        raise FactorizationError(
            f"incomplete factorization: cofactor {n} exceeds the fallback "
            f"limit {FALLBACK_LIMIT}; raise BELYI_FACTOR_BOUND"
        )
    if is_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return
    d = _brent_rho(n)
    for part in (d, n // d):
        if is_prime(part):
            factors[part] = factors.get(part, 0) + 1
        else:
            _fallback(part, factors)


def divisors(n: int, bound: int | None = None) -> list[int]:
    """Sorted positive divisors of n (n may be negative; sign is ignored)."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    divs = [1]
    for p, e in factorize(n, bound).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def p_adic_valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
