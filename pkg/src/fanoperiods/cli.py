"""Command-line front door: subcommands, file I/O, and the mirror catalog.

Every subcommand is deterministic (identical argv and input files give
byte-identical primary output) and every number is emitted as an exact
decimal or fraction string.  Exit codes: 0 on success, 1 on a domain
error (unreadable file, inconsistent data, impossible parameters), 2 on
a usage error (unknown subcommand or flag grammar).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .frobenius import (
    PeriodSequence,
    extend_series,
    periods_from_json,
    periods_to_json,
    reconstruct_N1,
    structure_table,
    table_records,
)
from .grassmannian import (
    grass_periods,
    nobody_polytope,
    superpotential_chart,
    verify_valuations,
)
from .laurent import (
    LaurentPolynomial,
    QPolynomial,
    classical_periods,
    laurent_from_json,
    laurent_to_json,
    support,
)
from .polytope import build_document, polar_from_support
from .selfcheck import run_all
from .young import BoxContext


@dataclass(frozen=True)
class CatalogEntry:
    """A built-in mirror with its expected regularized period head.

    The period head (c_0..c_6, exact strings) is regression data: the
    values were computed by this package's own period engine and
    cross-checked against closed-form coefficient counts before being
    frozen here.
    """

    name: str
    mirror: LaurentPolynomial
    fano_index: int
    description: str
    period_head: tuple[str, ...]


def _plain_mirror(names: Sequence[str], *exponents: tuple[int, ...]) -> LaurentPolynomial:
    return LaurentPolynomial.from_dict(tuple(names), {e: 1 for e in exponents})


_CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "p1",
        _plain_mirror(("x",), (1,), (-1,)),
        2,
        "projective line",
        ("1", "0", "2", "0", "6", "0", "20"),
    ),
    CatalogEntry(
        "p2",
        _plain_mirror(("x", "y"), (1, 0), (0, 1), (-1, -1)),
        3,
        "projective plane",
        ("1", "0", "0", "6", "0", "0", "90"),
    ),
    CatalogEntry(
        "p1xp1",
        _plain_mirror(("x", "y"), (1, 0), (-1, 0), (0, 1), (0, -1)),
        2,
        "product of two projective lines",
        ("1", "0", "4", "0", "36", "0", "400"),
    ),
    CatalogEntry(
        "p3",
        _plain_mirror(("x", "y", "z"), (1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)),
        4,
        "projective space of dimension three",
        ("1", "0", "0", "0", "24", "0", "0"),
    ),
)


def catalog(name: str) -> CatalogEntry | list[CatalogEntry]:
    """Entry lookup, or the full listing under the name "list"."""
    if name == "list":
        return list(_CATALOG)
    for entry in _CATALOG:
        if entry.name == name:
            return entry
    known = ", ".join(e.name for e in _CATALOG)
    raise ValueError(f"unknown catalog entry {name!r} (known: {known})")


def _entry_document(entry: CatalogEntry) -> dict:
    return {
        "name": entry.name,
        "description": entry.description,
        "fano_index": entry.fano_index,
        "mirror": laurent_to_json(entry.mirror),
        "period_head": list(entry.period_head),
    }


# ---------------------------------------------------------------------------
# shared plumbing


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(payload, out_path: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _set_q_to_one(coeff: QPolynomial) -> QPolynomial:
    return QPolynomial.constant(coeff.specialize_q(1))


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(
            f"expected a non-negative integer, got {text!r}"
        )
    return value


# ---------------------------------------------------------------------------
# subcommand handlers; each returns the JSON-ready payload
# (or a (payload, exit_code) pair)


def _cmd_period(args):
    f = laurent_from_json(_load_json(args.poly))
    coeffs = classical_periods(f, args.order)
    if args.q == "one":
        coeffs = [_set_q_to_one(c) for c in coeffs]
    return periods_to_json(PeriodSequence(tuple(coeffs)))


def _cmd_polytope(args):
    f = laurent_from_json(_load_json(args.poly))
    system = polar_from_support(support(f))
    return build_document(system, tuple(range(1, args.order + 1)))


def _cmd_grassmannian(args):
    ctx = BoxContext(args.k, args.n)
    if args.emit == "superpotential":
        chart = superpotential_chart(ctx)
        if args.q == "one":
            chart = chart.map_coefficients(_set_q_to_one)
        return laurent_to_json(chart)
    if args.emit == "polytope":
        order = 1 if args.order is None else args.order
        return build_document(nobody_polytope(ctx), tuple(range(1, order + 1)))
    if args.emit == "periods":
        order = 8 if args.order is None else args.order
        coeffs = grass_periods(ctx, order)
        if args.q == "one":
            coeffs = [_set_q_to_one(c) for c in coeffs]
        return periods_to_json(PeriodSequence(tuple(coeffs)))
    return verify_valuations(ctx)


def _cmd_frobenius(args):
    periods = periods_from_json(_load_json(args.periods))
    series = [reconstruct_N1(periods)]
    while len(series) < args.max_p:
        series.append(extend_series(series))
    if args.emit == "series":
        payload = []
        for item in series:
            tail = item.tail
            if args.q == "one":
                tail = {i: _set_q_to_one(c) for i, c in tail.items()}
            payload.append(
                {
                    "p": item.p,
                    "valid_to": item.valid_to,
                    "tail": [
                        {"i": i, "value": str(tail[i])} for i in sorted(tail)
                    ],
                }
            )
        return payload
    table = structure_table(series, args.max_p)
    if args.q == "keep":
        return table_records(table)
    records = []
    for p in range(table.total + 1):
        for q in range(table.total + 1 - p):
            for r in range(p + q + 1):
                value = table.entry(p, q, r).specialize_q(1)
                records.append({"p": p, "q": q, "r": r, "value": str(value)})
    return records


def _cmd_catalog(args):
    found = catalog(args.name)
    if isinstance(found, list):
        return [_entry_document(entry) for entry in found]
    return _entry_document(found)


def _cmd_selfcheck(args):
    results = run_all()
    lines = []
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(f"{status} {result.name}: {result.detail}")
        print(f"{result.name}: {result.seconds:.2f}s", file=sys.stderr)
    passed = sum(1 for r in results if r.passed)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", (0 if passed == len(results) else 1)


# ---------------------------------------------------------------------------
# argument grammar


def _add_q_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--q",
        choices=("keep", "one"),
        default="keep",
        help="keep the Novikov parameter symbolic, or set q = 1 (default keep)",
    )


def _add_out_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out",
        metavar="FILE",
        default=None,
        help="write primary output to FILE instead of standard output",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoperiods",
        description=(
            "Exact-arithmetic workbench: classical periods of Laurent "
            "polynomial mirrors, Grassmannian superpotential charts with "
            "their lattice polytopes, and theta structure constants "
            "reconstructed from period sequences."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    period = sub.add_parser(
        "period", help="constant terms of powers of a Laurent polynomial"
    )
    period.add_argument(
        "--poly", required=True, metavar="FILE", help="Laurent polynomial JSON input"
    )
    period.add_argument(
        "--order",
        type=_nonnegative_int,
        default=10,
        metavar="N",
        help="largest power to expand (default 10)",
    )
    _add_q_flag(period)
    _add_out_flag(period)
    period.set_defaults(handler=_cmd_period)

    polytope = sub.add_parser(
        "polytope", help="polar dual of the support of a Laurent polynomial"
    )
    polytope.add_argument(
        "--poly", required=True, metavar="FILE", help="Laurent polynomial JSON input"
    )
    polytope.add_argument(
        "--order",
        type=_nonnegative_int,
        default=2,
        metavar="N",
        help="count lattice points in dilations 1..N (default 2)",
    )
    _add_out_flag(polytope)
    polytope.set_defaults(handler=_cmd_polytope)

    grassmannian = sub.add_parser(
        "grassmannian",
        help="superpotential chart, polytope, periods, or valuation report",
    )
    grassmannian.add_argument(
        "--k", required=True, type=_positive_int, metavar="K", help="subspace dimension"
    )
    grassmannian.add_argument(
        "--n", required=True, type=_positive_int, metavar="N", help="ambient dimension"
    )
    grassmannian.add_argument(
        "--emit",
        choices=("superpotential", "polytope", "periods", "valuations"),
        default="superpotential",
        help="which artifact to produce (default superpotential)",
    )
    grassmannian.add_argument(
        "--order",
        type=_nonnegative_int,
        default=None,
        metavar="N",
        help=(
            "period order (default 8) or largest counted dilation "
            "(default 1); ignored by the other emitters"
        ),
    )
    _add_q_flag(grassmannian)
    _add_out_flag(grassmannian)
    grassmannian.set_defaults(handler=_cmd_grassmannian)

    frobenius = sub.add_parser(
        "frobenius",
        help="theta series and structure constants from a period file",
    )
    frobenius.add_argument(
        "--periods",
        required=True,
        metavar="FILE",
        help='period JSON input: {"index": 3, "coeffs": ["1", "0", ...]}',
    )
    frobenius.add_argument(
        "--max-p",
        dest="max_p",
        type=_positive_int,
        default=4,
        metavar="P",
        help=(
            "largest theta index to reconstruct; the input order bounds "
            "what is reachable (default 4)"
        ),
    )
    frobenius.add_argument(
        "--emit",
        choices=("table", "series"),
        default="table",
        help="structure-constant records or the theta series tails (default table)",
    )
    _add_q_flag(frobenius)
    _add_out_flag(frobenius)
    frobenius.set_defaults(handler=_cmd_frobenius)

    catalog_parser = sub.add_parser(
        "catalog", help="built-in mirrors with frozen period heads"
    )
    catalog_parser.add_argument(
        "name",
        nargs="?",
        default="list",
        help='entry name, or "list" for every entry (default list)',
    )
    _add_out_flag(catalog_parser)
    catalog_parser.set_defaults(handler=_cmd_catalog)

    selfcheck = sub.add_parser(
        "selfcheck", help="run the full invariant battery and report pass/fail"
    )
    _add_out_flag(selfcheck)
    selfcheck.set_defaults(handler=_cmd_selfcheck)

    return parser


def run(argv: Sequence[str]) -> int:
    """Execute one subcommand; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else 2
    try:
        payload = args.handler(args)
    except (OSError, ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    code = 0
    if isinstance(payload, tuple):
        payload, code = payload
    _emit(payload, args.out)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
