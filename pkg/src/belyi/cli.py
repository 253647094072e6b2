"""Command-line interface.

Commands wrap the library one-to-one and print deterministic output: JSON
payloads ride in an envelope carrying the tool version, the command and its
arguments; CSV uses the fixed census schema; warnings go to stderr except in
JSON mode, where they live in the envelope.  Exact rationals are serialized
as decimal-string numerator/denominator pairs, never as floats.

Exit codes: 0 success, 2 invalid input, 3 unsupported type, 4 hypothesis
unmet, 5 incomplete factorization.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import __version__
from .combinatorics import (
    CombinatorialType,
    count_closed_form,
    count_nonpolynomial,
    count_polynomial,
    classify_type,
    enumerate_types,
    validate,
)
from .construct import build, verify
from .dynamics import functional_graph, preperiodic_set
from .errors import (
    FactorizationError,
    HypothesisError,
    InvalidTypeError,
    UnsupportedTypeError,
)
from .reduction import (
    CENSUS_COLUMNS,
    ReductionType,
    census,
    predict_monomial,
    reduce_mod_p,
)
from .render import fraction_json, map_str, point_json, point_str, poly_str

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_HYPOTHESIS = 4
EXIT_FACTORIZATION = 5


def _envelope(command: str, arguments: dict, payload, warnings: list[str]) -> str:
    doc = {
        "tool": "belyi",
        "version": __version__,
        "command": command,
        "arguments": arguments,
        "warnings": warnings,
        "payload": payload,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=None)


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _type_args(ns) -> CombinatorialType:
    return validate(ns.d, ns.e1, ns.e2, ns.e3)


# -- enumerate -----------------------------------------------------------------


def _cmd_enumerate(ns, out, err) -> int:
    types = enumerate_types(ns.d)
    counts = {
        "closed_form": count_closed_form(ns.d),
        "polynomial": count_polynomial(ns.d),
        "nonpolynomial": count_nonpolynomial(ns.d),
    }
    if ns.format == "json":
        payload = {
            "d": ns.d,
            "counts": counts,
            "types": [list(t.indices) for t in types],
        }
        _emit(out, _envelope("enumerate", {"d": ns.d}, payload, []))
    elif ns.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(("d", "e1", "e2", "e3"))
        for t in types:
            writer.writerow(t)
    else:
        for t in types:
            _emit(out, str(t))
        _emit(
            out,
            f"N({ns.d}) = {counts['closed_form']} = {counts['polynomial']} "
            f"polynomial + {counts['nonpolynomial']} nonpolynomial",
        )
    return EXIT_OK


# -- build ---------------------------------------------------------------------


def _cmd_build(ns, out, err) -> int:
    t = _type_args(ns)
    cls = classify_type(t)
    warnings: list[str] = []
    bm = build(t)
    if not cls.direct:
        warnings.append(
            f"type {t} matches the {cls.family.value} pattern only up to "
            f"permutation; the map below realizes the arrangement {cls.pattern}"
        )
    cert = verify(bm) if ns.verify else None

    if ns.format == "json":
        payload = {
            "type": list(t),
            "pattern_type": list(cls.pattern),
            "family": cls.family.value,
            "k": cls.k,
            "permutation": list(cls.permutation),
            "numerator": poly_str(bm.model_num, descending=not ns.ascending),
            "denominator": poly_str(bm.model_den, descending=not ns.ascending),
            "numerator_coefficients": [str(c) for c in bm.model_num.coeffs],
            "denominator_coefficients": [str(c) for c in bm.model_den.coeffs],
            "scale": fraction_json(bm.scale),
        }
        if cert is not None:
            payload["certificate"] = {
                "passed": cert.passed,
                "checks": [
                    {"name": c.name, "passed": c.passed, "detail": c.detail}
                    for c in cert.checks
                ],
            }
        _emit(out, _envelope("build", _ns_args(ns), payload, warnings))
    else:
        for w in warnings:
            _emit(err, f"warning: {w}")
        _emit(out, map_str(bm.map, descending=not ns.ascending))
        if cert is not None:
            _emit(out, str(cert))
    return EXIT_OK


# -- reduce ---------------------------------------------------------------------


def _cmd_reduce(ns, out, err) -> int:
    t = _type_args(ns)
    cls = classify_type(t)
    warnings = []
    if not cls.direct:
        warnings.append(
            f"type {t} is analyzed in the pattern arrangement {cls.pattern}"
        )
    bm = build(t)
    report = reduce_mod_p(bm, ns.p)
    predicted = predict_monomial(bm.ctype, ns.p)
    if ns.format == "json":
        payload = {
            "type": list(bm.ctype),
            "p": ns.p,
            "fbar": report.fbar_str,
            "deg_bar": report.deg_bar,
            "eps1": report.eps1,
            "eps2": report.eps2,
            "delta": report.delta,
            "separable": report.separable,
            "classification": str(report.classification),
            "predicted_monomial": predicted,
            "actual_monomial": report.is_monomial,
        }
        _emit(out, _envelope("reduce", _ns_args(ns), payload, warnings))
    else:
        for w in warnings:
            _emit(err, f"warning: {w}")
        _emit(out, f"{report.fbar_str}")
        _emit(out, f"classification: {report.classification}")
        _emit(
            out,
            f"deg_bar={report.deg_bar} eps1={report.eps1} eps2={report.eps2} "
            f"delta={report.delta} predicted_monomial={str(predicted).lower()} "
            f"actual_monomial={str(report.is_monomial).lower()}",
        )
    return EXIT_OK


# -- census ----------------------------------------------------------------------


def degree15_e2_sweep() -> list[CombinatorialType]:
    """The degree-15 polynomial family indexed by e2 = 2..14."""
    return [validate(15, 16 - e2, e2, 15) for e2 in range(2, 15)]


def _parse_range(spec: str) -> tuple[int, int]:
    lo, sep, hi = spec.partition("..")
    if not sep:
        value = int(spec)
        return value, value
    return int(lo), int(hi)


def _cmd_census(ns, out, err) -> int:
    if ns.paper_table_15:
        rows = []
        for p in (2, 3, 5, 7):
            rows.extend(census(degree15_e2_sweep(), [p], jobs=ns.jobs))
    else:
        if ns.d_range is None:
            raise InvalidTypeError("census needs --d-range or --paper-table-15")
        lo, hi = _parse_range(ns.d_range)
        if lo < 3:
            raise InvalidTypeError(f"census range starts below degree 3: {lo}")
        types = [t for d in range(lo, hi + 1) for t in enumerate_types(d)]
        primes = "dividing" if ns.primes == "dividing" else _parse_primes(ns.primes)
        rows = census(types, primes, jobs=ns.jobs)

    if ns.format == "json":
        payload = [dict(zip(CENSUS_COLUMNS, r.csv_fields())) for r in rows]
        _emit(out, _envelope("census", _ns_args(ns), payload, []))
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CENSUS_COLUMNS)
        for r in rows:
            writer.writerow(r.csv_fields())
    return EXIT_OK


def _parse_primes(spec: str) -> list[int]:
    try:
        return [int(p) for p in spec.split(",") if p]
    except ValueError as exc:
        raise InvalidTypeError(f"cannot parse prime list {spec!r}") from exc


# -- preper ----------------------------------------------------------------------


def _cmd_preper(ns, out, err) -> int:
    t = _type_args(ns)
    bm = build(t)
    report = preperiodic_set(bm, allow_unproven=ns.override_hypothesis)
    warnings = []
    if not report.rigorous:
        warnings.append(
            "no monomial-reduction hypothesis holds: the closure is sound but "
            "not proven to be all of PrePer(f, QQ)"
        )
    index = {pt: i for i, pt in enumerate(report.points)}
    payload = {
        "type": list(bm.ctype),
        "hypothesis": list(report.hypothesis_used),
        "rigorous": report.rigorous,
        "fixed_points": [point_json(pt) for pt in report.fixed_points],
        "points": [point_json(pt) for pt in report.points],
        "edges": [[index[a], index[b]] for a, b in report.edges],
    }
    _emit(out, _envelope("preper", _ns_args(ns), payload, warnings))
    return EXIT_OK


# -- graph -----------------------------------------------------------------------


def _cmd_graph(ns, out, err) -> int:
    t = _type_args(ns)
    bm = build(t)
    report = reduce_mod_p(bm, ns.p)
    warnings = []
    if report.classification is ReductionType.BAD:
        warnings.append(
            f"bad reduction at {ns.p}: the graph below is for the degree-"
            f"{report.deg_bar} reduced map; period bounds do not apply"
        )
    graph = functional_graph(report.fbar, ns.p)
    cycles = [
        {
            "points": [point_str(pt) for pt in c.points],
            "length": c.length,
            "multiplier": str(c.multiplier),
            "multiplier_order": "inf" if c.multiplier_order is None else c.multiplier_order,
        }
        for c in graph.cycles
    ]
    if ns.format == "json":
        payload = {
            "type": list(bm.ctype),
            "p": ns.p,
            "fbar": report.fbar_str,
            "classification": str(report.classification),
            "successors": [
                [point_str(pt), point_str(graph.successor[pt])] for pt in graph.points
            ],
            "cycles": cycles,
        }
        _emit(out, _envelope("graph", _ns_args(ns), payload, warnings))
    else:
        for w in warnings:
            _emit(err, f"warning: {w}")
        _emit(out, f"map mod {ns.p}: {report.fbar_str} ({report.classification})")
        for pt in graph.points:
            _emit(out, f"{point_str(pt)} -> {point_str(graph.successor[pt])}")
        for c in cycles:
            _emit(
                out,
                f"cycle ({' '.join(c['points'])}) length {c['length']} "
                f"multiplier {c['multiplier']} order {c['multiplier_order']}",
            )
    return EXIT_OK


# -- wiring ----------------------------------------------------------------------


def _ns_args(ns) -> dict:
    skip = {"func", "format"}
    return {k: v for k, v in vars(ns).items() if k not in skip and v is not None}


def _add_type_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("d", type=int)
    parser.add_argument("e1", type=int)
    parser.add_argument("e2", type=int)
    parser.add_argument("e3", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belyi",
        description="Genus-0 single-cycle dynamical Belyi maps: enumeration, "
        "construction, reduction mod p, censuses, and rational dynamics.",
    )
    parser.add_argument("--version", action="version", version=f"belyi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list the types of one degree")
    p_enum.add_argument("d", type=int)
    p_enum.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_build = sub.add_parser("build", help="construct the normalized map of a type")
    _add_type_arguments(p_build)
    p_build.add_argument("--verify", action="store_true")
    p_build.add_argument("--ascending", action="store_true",
                         help="render polynomials in ascending exponent order")
    p_build.add_argument("--format", choices=("json", "plain"), default="plain")
    p_build.set_defaults(func=_cmd_build)

    p_red = sub.add_parser("reduce", help="reduce the map of a type modulo a prime")
    _add_type_arguments(p_red)
    p_red.add_argument("p", type=int)
    p_red.add_argument("--format", choices=("json", "plain"), default="plain")
    p_red.set_defaults(func=_cmd_reduce)

    p_cen = sub.add_parser("census", help="per-(type, prime) reduction census as CSV")
    p_cen.add_argument("--d-range", help="degree range, e.g. 3..12")
    p_cen.add_argument(
        "--primes",
        default="dividing",
        help='comma list like "2,3,5", or "dividing" for the primes dividing d',
    )
    p_cen.add_argument(
        "--paper-table-15",
        action="store_true",
        help="the degree-15 family sweep (e2 = 2..14) over p = 2, 3, 5, 7",
    )
    p_cen.add_argument("--jobs", type=int, default=1)
    p_cen.add_argument("--format", choices=("csv", "json"), default="csv")
    p_cen.set_defaults(func=_cmd_census)

    p_pre = sub.add_parser("preper", help="rational preperiodic set as JSON")
    _add_type_arguments(p_pre)
    p_pre.add_argument("--override-hypothesis", action="store_true")
    p_pre.set_defaults(func=_cmd_preper)

    p_gr = sub.add_parser("graph", help="functional graph of the reduction mod p")
    _add_type_arguments(p_gr)
    p_gr.add_argument("p", type=int)
    p_gr.add_argument("--format", choices=("json", "plain"), default="plain")
    p_gr.set_defaults(func=_cmd_graph)

    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return ns.func(ns, out, err)
    except (InvalidTypeError, ValueError) as exc:
        _emit(err, f"error: {exc}")
        return EXIT_INVALID
    except UnsupportedTypeError as exc:
        _emit(err, f"error: {exc}")
        return EXIT_UNSUPPORTED
    except HypothesisError as exc:
        _emit(err, f"error: {exc}")
        return EXIT_HYPOTHESIS
    except FactorizationError as exc:
        _emit(err, f"error: {exc}")
        return EXIT_FACTORIZATION


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
