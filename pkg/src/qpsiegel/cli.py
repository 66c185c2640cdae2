"""Command-line front end: JSON in, exact-rational JSON out.

Exit codes: 0 on success, 1 for invalid input, 2 when a verification
check does not match.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .curve_zeta import CurveData, class_number, numerator_to_point_counts, zeta_series
from .divisor_series import limit_fixed_determinant, limit_unfixed, r_divisor_series
from .errors import OracleMismatch, QpsiegelError
from .exact_arith import Polynomial, format_rational, series_from_rational_function
from .oracles.bundles import SplittingType, p1_mass_census, p1_parabolic_census
from .oracles.hnf import local_sublattice_count, p1_effective_divisor_count
from .oracles.hyperplanes import hyperplane_avoid_count
from .oracles.p1 import parse_points
from .oracles.sections import (
    eq8_balance_check,
    eq8_cutoff_covers,
    hom_inj_count_p1,
    hom_inj_limit_attained,
)
from .parabolic_flags import QuasiParabolicData
from .siegel_mass import classical_mass, hom_inj_factor, quasi_parabolic_mass

VERIFY_VERBS = ("local", "divisors", "mass", "parabolic", "hom", "lemma22", "eq8")


class CliError(QpsiegelError):
    pass


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc.msg}") from None


def _load_curve(path: str | None, parabolic: QuasiParabolicData | None = None) -> CurveData:
    if path is None:
        raise CliError("--curve is required")
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise CliError("curve file must hold a JSON object")
    curve = CurveData.from_json(doc)
    # a curve file without marked points borrows the count from the parabolic data
    if parabolic is not None and "marked_count" not in doc and "marked_points" not in doc:
        curve = curve.with_marked(parabolic.marked_count)
    return curve


def _load_parabolic(path: str | None) -> QuasiParabolicData | None:
    if path is None:
        return None
    doc = _load_json(path)
    try:
        return QuasiParabolicData.from_json(doc)
    except (KeyError, TypeError) as exc:
        raise CliError(f"malformed parabolic data: {exc}") from None


def _require(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise CliError(f"--{name.replace('_', '-')} is required for this command")


def _points(args: argparse.Namespace, default: str = "") -> tuple:
    raw = args.marked_points if args.marked_points is not None else default
    tokens = [t for t in raw.split(",") if t.strip()]
    return parse_points(tokens, args.q)


def _fmt_list(values: Sequence) -> list[str]:
    return [format_rational(v) for v in values]


def cmd_zeta(args: argparse.Namespace) -> dict:
    curve = _load_curve(args.curve)
    precision = args.precision or 8
    g = curve.genus
    return {
        "curve": curve.to_json(),
        "precision": precision,
        "zeta": _fmt_list(zeta_series(curve, precision).coeffs),
        "class_number": format_rational(class_number(curve)),
        "point_counts": numerator_to_point_counts(curve, max(2 * g, 1)),
    }


def cmd_divisors(args: argparse.Namespace) -> dict:
    _require(args, "rank")
    curve = _load_curve(args.curve)
    table = r_divisor_series(curve, args.rank, args.precision or 8)
    return {
        "rank": args.rank,
        "counts": _fmt_list(table.counts),
        "limit": format_rational(limit_unfixed(curve, args.rank)),
    }


def cmd_limits(args: argparse.Namespace) -> dict:
    _require(args, "rank")
    curve = _load_curve(args.curve)
    return {
        "rank": args.rank,
        "limit_unfixed": format_rational(limit_unfixed(curve, args.rank)),
        "limit_fixed_determinant": format_rational(limit_fixed_determinant(curve, args.rank)),
    }


def cmd_mass(args: argparse.Namespace) -> dict:
    data = _load_parabolic(args.parabolic)
    curve = _load_curve(args.curve, data)
    if data is None:
        _require(args, "rank")
        return classical_mass(curve, args.rank).to_json()
    if args.rank is not None and args.rank != data.rank:
        raise CliError(f"--rank {args.rank} disagrees with parabolic rank {data.rank}")
    return quasi_parabolic_mass(curve, data).to_json()


def _report(expected: Any, observed: Any, match: bool, tail: Fraction | None = None, **extra: Any) -> dict:
    doc = {"expected": expected, "observed": observed, "match": match}
    doc["tail_bound"] = None if tail is None else format_rational(tail)
    doc.update(extra)
    return doc


def verify_local(args: argparse.Namespace) -> dict:
    _require(args, "q", "rank", "n_max")
    denom = Polynomial([1])
    for j in range(1, args.rank + 1):
        denom = denom * Polynomial([1, -(args.q ** (j - 1))])
    expected = series_from_rational_function(Polynomial([1]), denom, args.n_max + 1).coeffs
    observed = [local_sublattice_count(args.q, args.rank, n) for n in range(args.n_max + 1)]
    return _report(_fmt_list(expected), _fmt_list(observed), list(expected) == observed)


def verify_divisors(args: argparse.Namespace) -> dict:
    _require(args, "q", "rank", "n_max")
    points = _points(args, "inf")
    curve = CurveData.projective_line(args.q, len(points))
    expected = r_divisor_series(curve, args.rank, args.n_max + 1).counts
    observed = [
        p1_effective_divisor_count(args.q, args.rank, n, points) for n in range(args.n_max + 1)
    ]
    return _report(_fmt_list(expected), _fmt_list(observed), list(expected) == observed)


def verify_mass(args: argparse.Namespace) -> dict:
    _require(args, "q", "rank")
    degree, cutoff = args.degree or 0, args.cutoff if args.cutoff is not None else 20
    expected = classical_mass(CurveData.projective_line(args.q), args.rank).value
    partial, tail = p1_mass_census(args.q, args.rank, degree, cutoff)
    match = partial <= expected <= partial + tail
    return _report(format_rational(expected), format_rational(partial), match, tail)


def verify_parabolic(args: argparse.Namespace) -> dict:
    _require(args, "q")
    data = _load_parabolic(args.parabolic)
    points = _points(args)
    if data is None:
        data = QuasiParabolicData.trivial(args.rank or 2, len(points))
    degree, cutoff = args.degree or 0, args.cutoff if args.cutoff is not None else 20
    curve = CurveData.projective_line(args.q, len(points))
    expected = quasi_parabolic_mass(curve, data).value
    census = p1_parabolic_census(args.q, data, points, degree, cutoff)
    if args.rows:
        with open(args.rows, "w", encoding="utf-8") as fh:
            for row in census.rows:
                fh.write(json.dumps(row.to_json()) + "\n")
    match = census.partial_sum <= expected <= census.partial_sum + census.tail_bound
    return _report(
        format_rational(expected), format_rational(census.partial_sum), match, census.tail_bound
    )


def verify_hom(args: argparse.Namespace) -> dict:
    _require(args, "q", "twists")
    points = _points(args)
    twists = SplittingType(tuple(int(a) for a in args.twists.split(",")))
    r, s = twists.rank, len(points)
    chi = sum(a + 1 for a in twists.twists)
    expected = hom_inj_factor(r, args.q, s) * args.q ** (r * chi)
    observed = hom_inj_count_p1(args.q, twists, points)
    return _report(
        format_rational(expected),
        format_rational(observed),
        observed == expected,
        limit_attained=hom_inj_limit_attained(twists, s),
    )


def verify_lemma22(args: argparse.Namespace) -> dict:
    _require(args, "q", "dim", "count")
    q, d, s = args.q, args.dim, args.count
    expected = q ** (d - s) * (q - 1) ** (s - 1)
    try:
        observed = hyperplane_avoid_count(q, d, s, seed=args.seed)
    except OracleMismatch as exc:
        return _report(str(expected), None, False, detail=str(exc))
    return _report(str(expected), str(observed), observed == expected)


def verify_eq8(args: argparse.Namespace) -> dict:
    _require(args, "q")
    points = _points(args)
    data = _load_parabolic(args.parabolic)
    if data is None:
        _require(args, "rank")
        data = QuasiParabolicData.trivial(args.rank, len(points))
    r = data.rank
    n = args.degree or 0
    cutoff = args.cutoff if args.cutoff is not None else n
    lhs, rhs = eq8_balance_check(args.q, r, n, points, data, cutoff)
    return _report(
        format_rational(lhs),
        format_rational(rhs),
        lhs == rhs,
        cutoff_covers=eq8_cutoff_covers(r, n, cutoff),
    )


VERIFIERS = {
    "local": verify_local,
    "divisors": verify_divisors,
    "mass": verify_mass,
    "parabolic": verify_parabolic,
    "hom": verify_hom,
    "lemma22": verify_lemma22,
    "eq8": verify_eq8,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", help="curve JSON file")
    common.add_argument("--parabolic", help="quasi-parabolic data JSON file")
    common.add_argument("--rank", type=int)
    common.add_argument("--degree", type=int)
    common.add_argument("--precision", type=int)
    common.add_argument("--cutoff", type=int, help="largest splitting-type gap a_1 - a_r")
    common.add_argument("--marked-points", help="comma-separated P^1 points, e.g. 0,1,inf")
    common.add_argument("--q", type=int, help="prime field size for oracle commands")
    common.add_argument("--n-max", type=int)
    common.add_argument("--twists", help="comma-separated splitting type, e.g. 2,1")
    common.add_argument("--dim", type=int, help="dimension of V (lemma22)")
    common.add_argument("--count", type=int, help="number of hyperplanes s (lemma22)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--rows", help="write parabolic census rows here as JSON lines")

    parser = argparse.ArgumentParser(
        prog="qpsiegel", description="Exact (quasi-parabolic) Siegel formulas and their oracles."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("zeta", "divisors", "mass", "limits"):
        sub.add_parser(name, parents=[common])
    verify = sub.add_parser("verify", parents=[common])
    verify.add_argument("verb", choices=VERIFY_VERBS)
    return parser


def _check_ranges(args: argparse.Namespace) -> None:
    if args.precision is not None and args.precision < 1:
        raise CliError("--precision must be at least 1")
    if args.cutoff is not None and args.cutoff < 0:
        raise CliError("--cutoff must be non-negative")
    if args.rank is not None and args.rank < 1:
        raise CliError("--rank must be at least 1")


def run(argv: Sequence[str] | None = None) -> tuple[int, dict]:
    args = build_parser().parse_args(argv)
    try:
        _check_ranges(args)
        if args.command == "verify":
            doc = {"check": args.verb, **VERIFIERS[args.verb](args)}
            return (0 if doc["match"] else 2), doc
        handler = {"zeta": cmd_zeta, "divisors": cmd_divisors, "mass": cmd_mass, "limits": cmd_limits}
        return 0, handler[args.command](args)
    except QpsiegelError as exc:
        return 1, {"error": exc.kind, "detail": str(exc)}
    except ValueError as exc:
        return 1, {"error": "ValueError", "detail": str(exc)}


def main(argv: Sequence[str] | None = None) -> int:
    code, doc = run(argv)
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
