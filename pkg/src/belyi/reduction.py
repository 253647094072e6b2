"""Reduction of integer models modulo primes and its classification.

The primitive integer model (num, den) reduces coefficientwise to GF(p); the
common factor g = gcd of the two reductions is stripped to give the reduced
map, while the base-point data (eps1, eps2, delta) = (ord_0 g, ord_1 g,
deg g) is recorded from the pre-cancellation stage.  Reduction is good when
the reduced map still has the source degree, bad otherwise, and good
reductions split into separable and inseparable.

A map psi in characteristic p factors uniquely as a separable map after n
iterations of Frobenius; when that separable part is itself a normalized
single-cycle map (trivial indices allowed), psi gets generalized ramification
indices p^n * e_i'.  Those indices drive the membership test for the
characteristic-p analog of the set of normalized maps of a type, and the
monomial-reduction criterion: the reduction of the type-(d; e1, e2, e3) map
is literally x^d iff e2 <= p^(v_p(d)).
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .combinatorics import CombinatorialType, Family, classify_type, validate
from .construct import BelyiMap, build
from .errors import InternalConsistencyError, NotBelyiNormalizedError
from .fields import GF
from .intfactor import factorize, is_prime, p_adic_valuation
from .polys import Poly, content, ord_at, poly_gcd, reduce_mod, wronskian
from .projline import INF, ProjPoint, RationalMap, eval_map
from .render import map_str


class ReductionType(enum.Enum):
    GOOD_SEPARABLE = "good separable"
    GOOD_INSEPARABLE = "good inseparable"
    BAD = "bad"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ReductionReport:
    p: int
    source_degree: int
    fbar: RationalMap  # over GF(p), coprime parts, monic denominator
    deg_bar: int
    eps1: int
    eps2: int
    delta: int
    separable: bool
    classification: ReductionType
    is_monomial: bool

    @property
    def fbar_str(self) -> str:
        return map_str(self.fbar)


def _coerce_model(model) -> tuple[Poly, Poly, int, CombinatorialType | None]:
    if isinstance(model, BelyiMap):
        num, den = model.integer_model
        return num, den, model.d, model.ctype
    num, den = model
    if num.is_zero or den.is_zero:
        raise ValueError("model parts must be nonzero")
    deg = max(num.degree, den.degree)
    return num, den, deg, None


def reduce_mod_p(model, p: int, *, ctype: CombinatorialType | None = None) -> ReductionReport:
    """Reduce a primitive coprime integer model modulo the prime p.

    model is a BelyiMap or a (num, den) pair of integer polynomials.  When a
    combinatorial type is attached (certified input), the structural facts
    that are theorems for normalized maps are asserted: the reduction is
    nonconstant, fixes 0 and infinity, and sends 1 off {0, inf}.  General
    maps may reduce to constants, so those assertions are skipped for them.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    num, den, d, attached = _coerce_model(model)
    ctype = ctype or attached
    if content(num) != 1 or content(den) != 1:
        raise ValueError("model is not primitive; reduce its content first")

    field = GF(p)
    num_bar = reduce_mod(num, p)
    den_bar = reduce_mod(den, p)
    g = poly_gcd(num_bar, den_bar)
    delta = g.degree
    eps1 = ord_at(g, 0) if delta else 0
    eps2 = ord_at(g, 1) if delta else 0
    h1 = num_bar.exact_div(g)
    h2 = den_bar.exact_div(g)
    fbar = RationalMap(h1, h2).monic_denominator()

    deg_bar = fbar.degree
    separable = not wronskian(fbar.num, fbar.den).is_zero
    if deg_bar == d:
        classification = (
            ReductionType.GOOD_SEPARABLE if separable else ReductionType.GOOD_INSEPARABLE
        )
    else:
        classification = ReductionType.BAD
    monomial = fbar.den == Poly.one(field) and fbar.num == Poly.monomial(field, 1, d)

    if ctype is not None:
        _assert_reduction_facts(fbar, ctype, p)

    return ReductionReport(
        p=p,
        source_degree=d,
        fbar=fbar,
        deg_bar=deg_bar,
        eps1=eps1,
        eps2=eps2,
        delta=delta,
        separable=separable,
        classification=classification,
        is_monomial=monomial,
    )


def _assert_reduction_facts(fbar: RationalMap, ctype: CombinatorialType, p: int) -> None:
    """Facts that hold for every reduction of a normalized single-cycle map."""
    zero = ProjPoint(0)
    if fbar.degree == 0:
        raise InternalConsistencyError(
            f"reduction of {ctype} mod {p} is constant; it must be nonconstant"
        )
    if eval_map(fbar, 0) != zero:
        raise InternalConsistencyError(f"reduction of {ctype} mod {p} does not fix 0")
    if eval_map(fbar, INF) != INF:
        raise InternalConsistencyError(
            f"reduction of {ctype} mod {p} does not fix infinity"
        )
    at_one = eval_map(fbar, 1)
    if at_one == zero or at_one == INF:
        raise InternalConsistencyError(
            f"reduction of {ctype} mod {p} sends 1 to {at_one}"
        )


def is_separable(psi) -> bool:
    """True iff the map is separable: its wronskian is nonzero, equivalently
    not every exponent carrying a nonzero coefficient is divisible by p."""
    if isinstance(psi, Poly):
        psi = RationalMap(psi, Poly.one(psi.ring))
    return not wronskian(psi.num, psi.den).is_zero


@dataclass(frozen=True)
class FrobeniusDecomposition:
    n: int
    separable_part: RationalMap  # psi(x) = separable_part(x^(p^n))


def frobenius_decompose(psi) -> FrobeniusDecomposition:
    """Factor psi as (separable part) o Frobenius^n with n maximal.

    Over the prime field the coefficients are Frobenius-fixed, so pulling
    out x -> x^p is pure exponent arithmetic.
    """
    if isinstance(psi, Poly):
        psi = RationalMap(psi, Poly.one(psi.ring))
    p = psi.ring.characteristic
    if psi.degree == 0:
        raise ValueError("Frobenius decomposition needs a nonconstant map")
    n = 0
    num, den = psi.num, psi.den
    while num.inflatable_by(p) and den.inflatable_by(p):
        num = num.deflate(p)
        den = den.deflate(p)
        n += 1
    return FrobeniusDecomposition(n, RationalMap(num, den))


@dataclass(frozen=True)
class GeneralizedRamification:
    """(p^n e1', p^n e2', p^n e3') for psi = psi' o Frobenius^n."""

    e1bar: int
    e2bar: int
    e3bar: int
    frobenius_power: int
    separable_type: tuple[int, int, int, int]  # (d'; e1', e2', e3')

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.e1bar, self.e2bar, self.e3bar)


def generalized_ramification(psi) -> GeneralizedRamification:
    """Generalized ramification indices of a nonconstant map over GF(p).

    The separable part must fix 0, 1 and infinity and ramify only there
    (trivial indices allowed).  That shape is certified exactly: the indices
    are read off ord_0, ord_1 and the degree drop at infinity, and then the
    wronskian must equal a nonzero constant times x^(e1'-1) (x-1)^(e2'-1)
    with e1' + e2' + e3' = 2 deg + 1.  Anything else raises
    NotBelyiNormalizedError.
    """
    dec = frobenius_decompose(psi)
    sep = dec.separable_part
    field = sep.ring
    p = field.characteristic
    num, den = sep.num, sep.den
    d_sep = sep.degree

    dn = num.degree if not num.is_zero else None
    dd = den.degree
    if dn is None or dn <= dd:
        raise NotBelyiNormalizedError("separable part does not fix infinity")
    e3 = dn - dd
    if num.coefficient(0) != 0 or den.coefficient(0) == 0:
        raise NotBelyiNormalizedError("separable part does not fix 0")
    e1 = ord_at(num, 0)
    diff = num - den  # nonzero since deg num > deg den
    if den(1) == 0 or diff(1) != 0:
        raise NotBelyiNormalizedError("separable part does not fix 1")
    e2 = ord_at(diff, 1)

    if e1 + e2 + e3 != 2 * d_sep + 1:
        raise NotBelyiNormalizedError(
            "index sum is not 2d+1: ramification outside {0, 1, inf} or wild"
        )
    w = wronskian(num, den)
    shape = Poly.monomial(field, 1, e1 - 1) * Poly(field, (-1, 1)) ** (e2 - 1)
    quo, rem = divmod(w, shape)
    if not (rem.is_zero and quo.degree == 0 and not quo.is_zero):
        raise NotBelyiNormalizedError(
            "wronskian is not a constant times x^(e1'-1) (x-1)^(e2'-1)"
        )

    q = p**dec.n
    return GeneralizedRamification(
        q * e1, q * e2, q * e3, dec.n, (d_sep, e1, e2, e3)
    )


@dataclass(frozen=True)
class SMembership:
    member: bool
    witness: tuple[int, int, int] | None  # (eps1, eps2, delta)
    indices: GeneralizedRamification | None

    def __bool__(self) -> bool:
        return self.member


def in_S_Cp(psi, t: CombinatorialType, p: int) -> SMembership:
    """Membership of psi in the characteristic-p analog of the normalized
    maps of type t, decided by exhaustive search over the base-point box.

    psi belongs iff deg psi <= d, its generalized ramification indices
    exist, and some (eps1, eps2, delta) >= 0 with eps1 + eps2 <= delta <=
    d - deg psi satisfies
        e1bar >= e1 - eps1,  e2bar >= e2 - eps2,
        e3bar >= e3 - (d - deg psi - delta).
    The box has at most (d+1)^3 points, so the search is an airtight oracle;
    the witness is not unique in general and the first one found (smallest
    delta, then eps1, then eps2) is returned.
    """
    t = validate(*t)
    if isinstance(psi, Poly):
        psi = RationalMap(psi, Poly.one(psi.ring))
    if psi.ring.characteristic != p:
        raise ValueError("psi is not defined over GF(p) for the given p")
    d = t.d
    dbar = psi.degree
    if dbar > d or dbar == 0:
        return SMembership(False, None, None)
    try:
        gen = generalized_ramification(psi)
    except NotBelyiNormalizedError:
        return SMembership(False, None, None)
    e1bar, e2bar, e3bar = gen.indices
    room = d - dbar
    for delta in range(room + 1):
        if e3bar < t.e3 - (room - delta):
            break  # the e3 constraint only tightens as delta grows
        for eps1 in range(delta + 1):
            if e1bar < t.e1 - eps1:
                continue
            for eps2 in range(delta - eps1 + 1):
                if e2bar >= t.e2 - eps2:
                    return SMembership(True, (eps1, eps2, delta), gen)
    return SMembership(False, None, gen)


def predict_monomial(t: CombinatorialType, p: int) -> bool:
    """e2 <= p^(v_p(d)); always False when p does not divide d."""
    t = validate(*t)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t.d % p:
        return False
    return t.e2 <= p ** p_adic_valuation(t.d, p)


def monomial_map(d: int, p: int) -> RationalMap:
    """x^d over GF(p)."""
    field = GF(p)
    return RationalMap(Poly.monomial(field, 1, d), Poly.one(field))


# -- census -------------------------------------------------------------------

CENSUS_COLUMNS = (
    "d",
    "e1",
    "e2",
    "e3",
    "p",
    "fbar",
    "deg_bar",
    "eps1",
    "eps2",
    "delta",
    "classification",
    "predicted_monomial",
    "actual_monomial",
)


@dataclass(frozen=True)
class CensusRow:
    ctype: CombinatorialType
    p: int
    skipped: str | None = None
    report: ReductionReport | None = None
    predicted_monomial: bool | None = None

    def csv_fields(self) -> tuple[str, ...]:
        t = self.ctype
        if self.skipped is not None:
            return (
                str(t.d), str(t.e1), str(t.e2), str(t.e3), str(self.p),
                "", "", "", "", "", f"skipped: {self.skipped}", "", "",
            )
        r = self.report
        return (
            str(t.d), str(t.e1), str(t.e2), str(t.e3), str(self.p),
            r.fbar_str, str(r.deg_bar), str(r.eps1), str(r.eps2), str(r.delta),
            str(r.classification),
            "true" if self.predicted_monomial else "false",
            "true" if r.is_monomial else "false",
        )


def _census_row(t: CombinatorialType, p: int) -> CensusRow:
    cls = classify_type(t)
    if cls.family is Family.GENERAL:
        return CensusRow(t, p, skipped="no closed form in scope")
    pattern = cls.pattern
    bm = build(pattern)
    report = reduce_mod_p(bm, p)
    return CensusRow(pattern, p, report=report,
                     predicted_monomial=predict_monomial(pattern, p))


def _census_row_packed(args) -> CensusRow:
    (d, e1, e2, e3), p = args
    return _census_row(CombinatorialType(d, e1, e2, e3), p)


def census(types, primes_for, *, jobs: int = 1) -> list[CensusRow]:
    """One row per (type, prime), in the given order.

    primes_for is either an iterable of primes used for every type, or the
    string "dividing" to use the primes dividing each type's degree.  Types
    that only match a construction pattern up to permutation are reported in
    the pattern arrangement (the one the formulas realize); general types
    yield skipped rows.  Rows are independent, so jobs > 1 fans them out to
    worker processes and merges the results in input order.
    """
    tasks = []
    for t in types:
        t = validate(*t)
        if primes_for == "dividing":
            primes = sorted(factorize(t.d).keys())
        else:
            primes = list(primes_for)
        for p in primes:
            tasks.append((tuple(t), p))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_census_row_packed, tasks, chunksize=8))
    return [_census_row_packed(task) for task in tasks]
