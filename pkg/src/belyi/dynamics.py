"""Orbit structure over prime fields and rational preperiodic points over QQ.

Over GF(p) the map induces a functional graph on the p+1 points of the
projective line; its cycles carry a multiplier (chain-rule product of
derivatives around the cycle, computed in the right charts at infinity) whose
multiplicative order feeds the local-global period bound: a rational periodic
point of exact period n over a cycle of length m with multiplier order r has
n = m, n = m*r, or n = m*r*p^e.

Over QQ, for types with good monomial reduction at 2, at 3, or at a prime
power equal to the degree, every rational periodic point is fixed, so the
full rational preperiodic set is the backward closure of the rational fixed
points under exact rational preimages.  The closure itself is computed for
any map; the hypothesis gate only guards the claim that it is everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .combinatorics import CombinatorialType, Family, classify_type
from .construct import BelyiMap
from .errors import BadReductionError, HypothesisError, InternalConsistencyError
from .fields import GF, multiplicative_order
from .intfactor import factorize, p_adic_valuation
from .polys import wronskian
from .projline import INF, ProjPoint, RationalMap, eval_map
from .reduction import ReductionType, reduce_mod_p
from .roots import rational_roots

# -- functional graphs over GF(p) ----------------------------------------------


@dataclass(frozen=True)
class CycleData:
    points: tuple[ProjPoint, ...]  # in orbit order, smallest point first
    multiplier: int  # element of GF(p)
    multiplier_order: int | None  # None encodes infinite order (multiplier 0)

    @property
    def length(self) -> int:
        return len(self.points)

    @property
    def representative(self) -> ProjPoint:
        return self.points[0]


@dataclass(frozen=True)
class FunctionalGraph:
    p: int
    points: tuple[ProjPoint, ...]
    successor: dict[ProjPoint, ProjPoint]
    cycles: tuple[CycleData, ...]
    tail_depth: dict[ProjPoint, int]  # 0 on cycles


def functional_graph(fbar: RationalMap, p: int | None = None) -> FunctionalGraph:
    """Successor structure of the map on P^1(F_p), with cycle decomposition."""
    if p is None:
        p = fbar.ring.characteristic
    if fbar.ring != GF(p):
        raise ValueError("map is not defined over GF(p)")
    points = tuple(ProjPoint(a) for a in range(p)) + (INF,)
    successor = {pt: eval_map(fbar, pt) for pt in points}

    on_cycle: set[ProjPoint] = set()
    cycles: list[tuple[ProjPoint, ...]] = []
    state: dict[ProjPoint, int] = {}  # 1 = in progress, 2 = done
    for start in points:
        if state.get(start):
            continue
        path = []
        pt = start
        while state.get(pt) is None:
            state[pt] = 1
            path.append(pt)
            pt = successor[pt]
        if state[pt] == 1:
            # closed a new cycle; rotate so the smallest point leads
            idx = path.index(pt)
            cycle = path[idx:]
            lead = min(range(len(cycle)), key=lambda i: cycle[i].sort_key())
            cycles.append(tuple(cycle[lead:] + cycle[:lead]))
            on_cycle.update(cycle)
        for q in path:
            state[q] = 2

    tail_depth: dict[ProjPoint, int] = {pt: 0 for pt in on_cycle}

    def depth(pt: ProjPoint) -> int:
        trail = []
        while pt not in tail_depth:
            trail.append(pt)
            pt = successor[pt]
        base = tail_depth[pt]
        for q in reversed(trail):
            base += 1
            tail_depth[q] = base
        return tail_depth[trail[0]] if trail else base

    for pt in points:
        depth(pt)

    cycles.sort(key=lambda c: c[0].sort_key())
    data = tuple(
        CycleData(c, m := cycle_multiplier(fbar, c), multiplicative_order(m, p))
        for c in cycles
    )
    return FunctionalGraph(p, points, successor, data, tail_depth)


def _step_derivative(fbar: RationalMap, pt: ProjPoint, image: ProjPoint) -> int:
    """Local derivative of the map at pt, in the charts of pt and its image.

    The chart factors cancel around a closed cycle, so the product of these
    step values is the cycle multiplier.
    """
    ring = fbar.ring
    num, den = fbar.num, fbar.den
    if pt.is_infinity:
        m = max(num.degree, den.degree)
        num, den = num.reversed(m), den.reversed(m)  # now evaluating at u = 0
        at = 0
    else:
        at = pt.value
    if image.is_infinity:
        num, den = den, num  # target chart u = 1/t flips the map
    w = wronskian(num, den)
    bottom = den(at)
    return ring.div(w(at), ring.canon(bottom * bottom))


def cycle_multiplier(fbar: RationalMap, cycle) -> int:
    """Chain-rule product of derivatives around a cycle of the reduced map."""
    ring = fbar.ring
    lam = ring.coerce(1)
    pts = [p if isinstance(p, ProjPoint) else ProjPoint(ring.coerce(p)) for p in cycle]
    for i, pt in enumerate(pts):
        image = eval_map(fbar, pt)
        expected = pts[(i + 1) % len(pts)]
        if image != expected:
            raise ValueError(f"not a cycle: {pt} maps to {image}, not {expected}")
        lam = ring.canon(lam * _step_derivative(fbar, pt, image))
    return lam


# -- period constraints ---------------------------------------------------------


@dataclass(frozen=True)
class CyclePeriods:
    """Admissible exact periods of rational points reducing into one cycle.

    With m the cycle length and r the multiplier order, the possibilities
    are n = m, n = m*r, or n = m*r*p^e (e >= 1); r = None (zero multiplier)
    collapses everything to n = m.
    """

    cycle: CycleData
    finite: frozenset[int]
    p_power_base: int | None  # m*r when the p^e tail is admissible

    def describe(self, p: int) -> str:
        parts = sorted(self.finite)
        if self.p_power_base is None:
            return "{%s}" % ", ".join(map(str, parts))
        return "{%s} and %d*%d^e for e >= 1" % (
            ", ".join(map(str, parts)),
            self.p_power_base,
            p,
        )


@dataclass(frozen=True)
class AllowedPeriods:
    p: int
    per_cycle: tuple[CyclePeriods, ...]
    finite: frozenset[int]  # union of the finite parts
    p_power_bases: frozenset[int]  # bases m*r of the symbolic tails


def allowed_periods(f: BelyiMap, p: int) -> AllowedPeriods:
    """Period bound at a prime of good reduction; errors at bad primes."""
    report = reduce_mod_p(f, p)
    if report.classification is ReductionType.BAD:
        raise BadReductionError(
            f"{f.ctype} has bad reduction at {p}: the period bound is inapplicable"
        )
    graph = functional_graph(report.fbar, p)
    per_cycle = []
    for cyc in graph.cycles:
        m, r = cyc.length, cyc.multiplier_order
        if r is None:
            per_cycle.append(CyclePeriods(cyc, frozenset({m}), None))
        else:
            per_cycle.append(CyclePeriods(cyc, frozenset({m, m * r}), m * r))
    finite = frozenset().union(*(c.finite for c in per_cycle))
    bases = frozenset(c.p_power_base for c in per_cycle if c.p_power_base is not None)
    return AllowedPeriods(p, tuple(per_cycle), finite, bases)


# -- rational fixed points and preimages ----------------------------------------


def rational_fixed_points(f: BelyiMap) -> tuple[ProjPoint, ...]:
    """All fixed points of the map in P^1(QQ), exactly; infinity included."""
    num, den = f.integer_model
    fixed_poly = num - den.shift(1)
    pts = {ProjPoint(r) for r in rational_roots(fixed_poly)}
    pts.add(INF)  # deg num > deg den: infinity is always fixed
    return tuple(sorted(pts, key=ProjPoint.sort_key))


def rational_preimages(f: BelyiMap, a) -> tuple[ProjPoint, ...]:
    """All rational solutions of f(x) = a, exactly."""
    a = a if isinstance(a, ProjPoint) else ProjPoint(Fraction(a))
    num, den = f.integer_model
    if a.is_infinity:
        pts = {ProjPoint(r) for r in rational_roots(den)}
        pts.add(INF)  # deg num > deg den, so infinity maps to infinity
        return tuple(sorted(pts, key=ProjPoint.sort_key))
    value = Fraction(a.value)
    fiber_poly = num.scale(value.denominator) - den.scale(value.numerator)
    pts = {ProjPoint(r) for r in rational_roots(fiber_poly)}
    return tuple(sorted(pts, key=ProjPoint.sort_key))


# -- the rational preperiodic set -----------------------------------------------

#: conditions under which every rational periodic point is fixed
def monomial_hypotheses(t: CombinatorialType) -> tuple[str, ...]:
    """Which of the degree conditions guaranteeing fixed-only periodic
    rational points hold for t: monomial reduction at 2, at 3, or at the
    prime of a prime-power degree."""
    matched = []
    if t.d % 2 == 0 and t.e2 <= 2 ** p_adic_valuation(t.d, 2):
        matched.append("monomial reduction at 2")
    if t.d % 3 == 0 and t.e2 <= 3 ** p_adic_valuation(t.d, 3):
        matched.append("monomial reduction at 3")
    q = _prime_power_base(t.d)
    if q is not None and t.e2 <= t.d:
        matched.append(f"prime-power degree ({q}-power)")
    return tuple(matched)


def _prime_power_base(d: int) -> int | None:
    factors = factorize(d)
    if len(factors) == 1:
        return next(iter(factors))
    return None


@dataclass(frozen=True)
class PreperReport:
    ctype: CombinatorialType
    fixed_points: tuple[ProjPoint, ...]
    points: tuple[ProjPoint, ...]  # the full set PrePer(f, QQ) (if rigorous)
    edges: tuple[tuple[ProjPoint, ProjPoint], ...]
    hypothesis_used: tuple[str, ...]
    rigorous: bool  # False only when forced past the hypothesis gate


def preperiodic_set(
    f: BelyiMap, *, allow_unproven: bool = False, max_depth: int = 64
) -> PreperReport:
    """Rational fixed points plus their full rational backward closure.

    For types meeting one of the monomial hypotheses this is exactly
    PrePer(f, QQ).  Without a matched hypothesis the closure is still sound
    (every returned point is preperiodic) but possibly incomplete, so it is
    only computed under allow_unproven=True and flagged non-rigorous.

    The closure is a breadth-first search through exact rational preimages;
    it must stabilize (heights of preperiodic points are bounded), so hitting
    max_depth levels signals a bug rather than a big answer.
    """
    hypotheses = monomial_hypotheses(f.ctype)
    if not hypotheses and not allow_unproven:
        raise HypothesisError(
            f"type {f.ctype} meets no monomial-reduction hypothesis (degree "
            f"{f.d} is divisible by neither 2 nor 3 with small enough e2, and "
            "is not a prime power); pass allow_unproven to compute the "
            "closure anyway"
        )

    fixed = rational_fixed_points(f)
    closure: set[ProjPoint] = set(fixed)
    frontier: set[ProjPoint] = set(fixed)
    for _ in range(max_depth):
        if not frontier:
            break
        new: set[ProjPoint] = set()
        for pt in frontier:
            for pre in rational_preimages(f, pt):
                if pre not in closure:
                    new.add(pre)
        closure.update(new)
        frontier = new
    else:
        raise InternalConsistencyError(
            f"backward closure did not stabilize within {max_depth} levels"
        )

    points = tuple(sorted(closure, key=ProjPoint.sort_key))
    fmap = f.map
    edges = tuple((pt, eval_map(fmap, pt)) for pt in points)
    for _, image in edges:
        if image not in closure:
            raise InternalConsistencyError("preperiodic set is not forward-closed")
    return PreperReport(f.ctype, fixed, points, edges, hypotheses, bool(hypotheses))


# -- real fiber structure for the polynomial family ------------------------------


@dataclass(frozen=True)
class FiberSignReport:
    """Real/rational structure of the fibers over 0 and 1 for the
    (d; d-k, k+1, d) family, split by the parities of d and k.

    Case 1 (d, k even): one real beta < 0 in the 1-fiber; case 2 (d odd,
    k even): no real points beyond 0 and 1; case 3 (d even, k odd): one real
    gamma > 1 in the 0-fiber; case 4 (both odd): both beta and gamma.  When
    such a point is rational it must be -1/b resp. 1 + 1/c with b, c
    positive divisors of C(d-1, k); those checks come along for free.
    """

    ctype: CombinatorialType
    k: int
    case: int
    fiber0_rationals: tuple[ProjPoint, ...]
    fiber1_rationals: tuple[ProjPoint, ...]
    beta: Fraction | None
    gamma: Fraction | None
    divisor_bound: int  # C(d-1, k)
    beta_divisor_ok: bool | None
    gamma_divisor_ok: bool | None


def fiber_sign_analysis(f: BelyiMap) -> FiberSignReport:
    cls = classify_type(f.ctype)
    if cls.family is not Family.POLYNOMIAL or not cls.direct:
        raise ValueError("fiber sign analysis applies to the polynomial family")
    d, k = f.d, cls.k
    case = {(0, 0): 1, (1, 0): 2, (0, 1): 3, (1, 1): 4}[(d % 2, k % 2)]
    fiber0 = rational_preimages(f, Fraction(0))
    fiber1 = rational_preimages(f, Fraction(1))
    beta = next(
        (pt.value for pt in fiber1 if not pt.is_infinity and pt.value < 0), None
    )
    gamma = next(
        (pt.value for pt in fiber0 if not pt.is_infinity and pt.value > 1), None
    )
    bound = comb(d - 1, k)
    beta_ok = None
    if beta is not None:
        beta_ok = beta.numerator == -1 and bound % beta.denominator == 0
    gamma_ok = None
    if gamma is not None:
        excess = gamma - 1
        gamma_ok = excess.numerator == 1 and bound % excess.denominator == 0
    return FiberSignReport(
        f.ctype, k, case, fiber0, fiber1, beta, gamma, bound, beta_ok, gamma_ok
    )
