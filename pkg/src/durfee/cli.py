"""Command line interface: invariants, bounds, verify, search, trace, selftest.

Output discipline: every value is exact (integers plain, rationals as
num/den in lowest terms); optional decimal columns are explicitly named
approx_* and fixed to six digits.  For csv and json-lines the rows go to
stdout and all metadata/notes go to stderr, so stdout is byte-identical
across repeated runs and across --jobs counts.  Exit codes: 0 success,
2 invalid input, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .bounds import (
    composition_factorial_sum,
    dominance_inequality_checks,
    bound_coefficient,
    composition_sum_inequality,
    falling_sum_recursion_check,
    min_product_bound,
    balanced_min_product,
    monotone_scan,
    multinomial_recursion_check,
    stirling_factorial_sum,
)
from .conjecture import (
    curve_identity,
    hypersurface_identity,
    min_product_inequality,
    degree_grid,
    search,
    surface_excess,
    surface_identity,
    trace_ratio,
    verify,
)
from .exactmath import CrossCheckError, stirling2
from .invariants import (
    SMOOTHNESS_NOTE,
    DegreeSpec,
    SmoothGermError,
    invariant_report,
    milnor_number,
    geometric_genus,
)

VERSION = "0.1.0"
DOMINANCE_ORDER_ENV = "DURFEE_DOMINANCE_ORDER"

Cell = Union[int, str]


@dataclass
class ReportDocument:
    """One renderable report: echoed inputs, fixed columns, exact-value rows."""

    command: str
    params: dict[str, str]
    columns: tuple[str, ...]
    rows: list[dict[str, Cell]]
    notes: list[str] = field(default_factory=list)

    def meta_lines(self) -> list[str]:
        lines = [f"# command: {self.command}", f"# version: {VERSION}"]
        lines += [f"# {key}: {value}" for key, value in self.params.items()]
        return lines

    def note_lines(self) -> list[str]:
        return [f"# note: {note}" for note in self.notes]


def _rat(x: Union[int, Fraction]) -> str:
    return str(Fraction(x))


def _approx(x: Union[int, Fraction]) -> str:
    return f"{float(x):.6f}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _degrees_cell(degrees: Sequence[int]) -> str:
    return ",".join(str(p) for p in degrees)


def render_table(doc: ReportDocument) -> str:
    header = list(doc.columns)
    body = [[str(row[c]) for c in doc.columns] for row in doc.rows]
    widths = [len(h) for h in header]
    for line in body:
        for i, cell in enumerate(line):
            widths[i] = max(widths[i], len(cell))
    out = doc.meta_lines()
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for line in body:
        out.append("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip())
    out += doc.note_lines()
    return "\n".join(out) + "\n"


def render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(doc.columns)
    for row in doc.rows:
        writer.writerow([row[c] for c in doc.columns])
    return buf.getvalue()


def render_json_lines(doc: ReportDocument) -> str:
    lines = [
        json.dumps({c: row[c] for c in doc.columns}, separators=(",", ":"))
        for row in doc.rows
    ]
    return "".join(line + "\n" for line in lines)


def emit(doc: ReportDocument, fmt: str, out=None, err=None) -> None:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    if fmt == "table":
        out.write(render_table(doc))
        return
    if fmt == "csv":
        out.write(render_csv(doc))
    elif fmt == "json-lines":
        out.write(render_json_lines(doc))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    for line in doc.meta_lines() + doc.note_lines():
        err.write(line + "\n")


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse degrees {text!r}; expected like 3,3") from None


def _parse_span(text: str) -> tuple[int, int]:
    if ".." not in text:
        raise ValueError(f"cannot parse range {text!r}; expected like 2..10")
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"cannot parse range {text!r}; expected like 2..10") from None


def _parse_int_list(text: str) -> tuple[int, ...]:
    if ".." in text:
        lo, hi = _parse_span(text)
        return tuple(range(lo, hi + 1))
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse list {text!r}; expected like 3,10,50") from None


INVARIANT_COLUMNS = (
    "n",
    "r",
    "degrees",
    "mu",
    "pg",
    "chi",
    "strong_verdict",
    "new_verdict",
    "bound_value",
)


def _spec_from_args(args) -> tuple[DegreeSpec, list[str]]:
    """Build the (sorted, reduced) spec to report on, with echo notes."""
    raw = DegreeSpec(args.n, _parse_degrees(args.degrees))
    notes = []
    reduced = raw.reduced()
    if reduced.degrees != raw.degrees:
        dropped = raw.r - reduced.r
        notes.append(
            f"degrees reduced: dropped {dropped} hyperplane "
            f"entr{'y' if dropped == 1 else 'ies'} of degree 1"
        )
    spec = reduced.sorted()
    if spec.degrees != reduced.degrees:
        notes.append("degrees echoed in sorted order")
    return spec, notes


def _verdict_row(verdict, chi: int) -> dict[str, Cell]:
    spec = verdict.spec
    return {
        "n": spec.n,
        "r": spec.r,
        "degrees": _degrees_cell(spec.degrees),
        "mu": verdict.mu,
        "pg": verdict.pg,
        "chi": chi,
        "strong_verdict": verdict.strong_classification,
        "new_verdict": verdict.classification,
        "bound_value": _rat(verdict.bound_value),
    }


def cmd_invariants(args) -> int:
    spec, notes = _spec_from_args(args)
    report = invariant_report(spec)
    verdict = verify(spec)
    doc = ReportDocument(
        command="invariants",
        params={"n": str(spec.n), "degrees": _degrees_cell(spec.degrees)},
        columns=INVARIANT_COLUMNS,
        rows=[_verdict_row(verdict, report.chi)],
    )
    doc.notes.extend(notes)
    doc.notes.append(SMOOTHNESS_NOTE)
    doc.notes.append(
        "mu agrees across " + ", ".join(sorted(report.mu_by_method))
    )
    doc.notes.append(
        "pg agrees across " + ", ".join(sorted(report.pg_by_method))
    )
    emit(doc, args.format)
    return 0


def cmd_verify(args) -> int:
    spec, notes = _spec_from_args(args)
    verdict = verify(spec)
    chi = (-1) ** spec.n * verdict.mu + 1
    doc = ReportDocument(
        command="verify",
        params={"n": str(spec.n), "degrees": _degrees_cell(spec.degrees)},
        columns=INVARIANT_COLUMNS,
        rows=[_verdict_row(verdict, chi)],
    )
    doc.notes.extend(notes)
    doc.notes.append(SMOOTHNESS_NOTE)
    doc.notes.append(
        f"{verdict.bound_name}: mu {verdict.comparison} "
        f"{_rat(verdict.bound_coefficient)} * pg"
        + (" (strict bound)" if verdict.strict else "")
    )
    doc.notes.append(
        f"strong coefficient {factorial(spec.n + 1)}: mu {verdict.strong_comparison} "
        f"{_rat(verdict.strong_value)}"
    )
    doc.notes.append(
        f"limit coefficient {_rat(verdict.coefficient_ratio)}: "
        f"mu {verdict.coefficient_comparison} {_rat(verdict.coefficient_ratio * verdict.pg)}"
    )
    if spec.n == 2:
        e = surface_excess(spec)
        sign = "zero" if e == 0 else ("positive" if e > 0 else "negative")
        doc.notes.append(f"surface excess E = {_rat(e)} ({sign})")
    emit(doc, args.format)
    return 0


def cmd_bounds(args) -> int:
    if args.n_max < 1 or args.r_max < 1:
        raise ValueError("need --n-max >= 1 and --r-max >= 1")
    rows: list[dict[str, Cell]] = []
    for n in range(1, args.n_max + 1):
        previous = None
        for coeff in monotone_scan(n, args.r_max):
            rows.append(
                {
                    "n": coeff.n,
                    "r": coeff.r,
                    "coefficient": _rat(coeff.value),
                    "approx_coefficient": _approx(coeff.value),
                    "floor": 2**coeff.n,
                    "at_floor": _flag(coeff.value == 2**coeff.n),
                    "non_increasing": _flag(previous is None or coeff.value <= previous),
                }
            )
            previous = coeff.value
    doc = ReportDocument(
        command="bounds",
        params={"n_max": str(args.n_max), "r_max": str(args.r_max)},
        columns=(
            "n",
            "r",
            "coefficient",
            "approx_coefficient",
            "floor",
            "at_floor",
            "non_increasing",
        ),
        rows=rows,
        notes=["approx_coefficient is a six-digit decimal approximation"],
    )
    emit(doc, args.format)
    return 0


def cmd_search(args) -> int:
    p_min, p_max = _parse_span(args.p)
    mode = "full_grid" if args.full_grid else "equal_degrees"
    result = search(args.n, args.r, p_min, p_max, mode=mode, jobs=args.jobs)
    rows: list[dict[str, Cell]] = []
    for violation in result.violations:
        v = violation.verdict
        rows.append(
            {
                "n": v.spec.n,
                "r": v.spec.r,
                "degrees": _degrees_cell(v.spec.degrees),
                "mu": v.mu,
                "pg": v.pg,
                "violates": "+".join(violation.kinds),
                "strong_bound": _rat(v.strong_value),
                "conjecture_bound": _rat(v.bound_value),
                "coefficient_bound": _rat(v.coefficient_ratio * v.pg),
            }
        )
    doc = ReportDocument(
        command="search",
        params={
            "n": str(result.n),
            "r": str(result.r),
            "p": f"{result.p_min}..{result.p_max}",
            "mode": result.mode,
        },
        columns=(
            "n",
            "r",
            "degrees",
            "mu",
            "pg",
            "violates",
            "strong_bound",
            "conjecture_bound",
            "coefficient_bound",
        ),
        rows=rows,
    )
    doc.notes.append(f"scanned {result.scanned} specs, {len(result.violations)} violations")
    if result.minimal is not None:
        m = result.minimal.verdict
        doc.notes.append(
            f"minimal violation: degrees {_degrees_cell(m.spec.degrees)} "
            f"(mu {m.mu}, pg {m.pg})"
        )
    else:
        doc.notes.append("no violations found")
    emit(doc, args.format)
    return 0


def cmd_trace(args) -> int:
    points = trace_ratio(args.n, args.r, _parse_int_list(args.p))
    rows: list[dict[str, Cell]] = []
    for pt in points:
        rows.append(
            {
                "p": pt.p,
                "mu": pt.mu,
                "pg": pt.pg,
                "ratio": "" if pt.ratio is None else _rat(pt.ratio),
                "coefficient": _rat(pt.coefficient),
                "deviation": "" if pt.deviation is None else _rat(pt.deviation),
                "approx_deviation": "" if pt.deviation is None else _approx(pt.deviation),
                "included": _flag(pt.included),
            }
        )
    doc = ReportDocument(
        command="trace",
        params={"n": str(args.n), "r": str(args.r), "p": args.p},
        columns=(
            "p",
            "mu",
            "pg",
            "ratio",
            "coefficient",
            "deviation",
            "approx_deviation",
            "included",
        ),
        rows=rows,
        notes=[
            "approx_deviation is a six-digit decimal approximation",
            "points with pg = 0 are excluded from ratios",
        ],
    )
    emit(doc, args.format)
    return 0


def _stirling_recurrence_table(m_max: int) -> dict[tuple[int, int], int]:
    table = {(0, 0): 1}
    for m in range(1, m_max + 1):
        table[(m, 0)] = 0
        for r in range(1, m + 1):
            table[(m, r)] = r * table.get((m - 1, r), 0) + table.get((m - 1, r - 1), 0)
    return table


def _selftest_suites(order: int):
    def stirling_routes() -> bool:
        table = _stirling_recurrence_table(20)
        return all(
            stirling2(m, r) == table.get((m, r), 0)
            for m in range(21)
            for r in range(m + 1)
        )

    def factorial_sum_routes() -> bool:
        return all(
            composition_factorial_sum(n, r) == stirling_factorial_sum(n, r)
            for total in range(1, 31)
            for r in range(1, total + 1)
            for n in (total - r,)
        )

    def multinomial_recursion() -> bool:
        return all(
            multinomial_recursion_check(n, r)
            for n in range(0, 11)
            for r in range(1, 11)
        )

    def dominance() -> bool:
        return dominance_inequality_checks(order=order, nr_max=8)

    def monotone() -> bool:
        for n in range(1, 9):
            monotone_scan(n, 40)
        return True

    def curve_identities() -> bool:
        return all(
            curve_identity(DegreeSpec(1, degrees))
            for r in range(1, 5)
            for degrees in degree_grid(r, 2, 9)
        )

    def surface_identities() -> bool:
        return all(
            surface_identity(DegreeSpec(2, degrees))
            for r in range(1, 5)
            for degrees in degree_grid(r, 2, 9)
        )

    def hypersurface_identities() -> bool:
        return all(
            hypersurface_identity(n, p) for n in range(1, 7) for p in range(2, 13)
        )

    def surface_hypersurface_gap() -> bool:
        for p in range(2, 13):
            spec = DegreeSpec(2, (p,))
            if 6 * geometric_genus(spec) != milnor_number(spec) - p + 1:
                return False
        return True

    def method_agreement() -> bool:
        for n in range(1, 4):
            for r in range(1, 4):
                for degrees in degree_grid(r, 2, 5):
                    invariant_report(DegreeSpec(n, degrees))
        return True

    def product_bounds() -> bool:
        for n in range(2, 5):
            for r in range(1, 4):
                if n > r and min_product_bound(n, r) != balanced_min_product(n, r):
                    return False
                for degrees in degree_grid(r, 2, 5):
                    spec = DegreeSpec(n, degrees)
                    if not min_product_inequality(spec):
                        return False
                    if not falling_sum_recursion_check(n, degrees):
                        return False
                    if not composition_sum_inequality(n, degrees):
                        return False
        return True

    return [
        ("stirling-alternating-vs-recurrence", stirling_routes),
        ("factorial-sum-routes", factorial_sum_routes),
        ("multinomial-recursion", multinomial_recursion),
        (f"dominance-chain-order-{order}", dominance),
        ("bound-coefficient-monotone-scan", monotone),
        ("curve-identity-grid", curve_identities),
        ("surface-identity-grid", surface_identities),
        ("hypersurface-identity-grid", hypersurface_identities),
        ("surface-hypersurface-gap", surface_hypersurface_gap),
        ("method-agreement-grid", method_agreement),
        ("product-bound-grid", product_bounds),
    ]


def cmd_selftest(args) -> int:
    raw = os.environ.get(DOMINANCE_ORDER_ENV, "")
    if raw:
        try:
            order = int(raw)
        except ValueError:
            raise ValueError(
                f"{DOMINANCE_ORDER_ENV} must be an integer, got {raw!r}"
            ) from None
        if order < 1:
            raise ValueError(f"{DOMINANCE_ORDER_ENV} must be >= 1, got {order}")
    else:
        order = 64
    failures = 0
    for name, suite in _selftest_suites(order):
        try:
            ok = suite()
        except CrossCheckError as exc:
            print(f"FAIL {name}: {exc}")
            failures += 1
            continue
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1
    if failures:
        print(f"selftest: {failures} suite(s) failed")
        return 3
    print("selftest: all suites passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="durfee",
        description="Exact invariants of cone singularities and Durfee-type bound checks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("table", "csv", "json-lines"),
            default="table",
            help="output format (default: table)",
        )

    p_inv = sub.add_parser("invariants", help="compute mu, pg, chi for one spec")
    p_inv.add_argument("--n", type=int, required=True, help="singularity dimension")
    p_inv.add_argument("--degrees", required=True, help="comma-separated degrees, like 3,3")
    add_format(p_inv)
    p_inv.set_defaults(func=cmd_invariants)

    p_ver = sub.add_parser("verify", help="evaluate the bounds for one spec")
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--degrees", required=True)
    add_format(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_bounds = sub.add_parser("bounds", help="tabulate bound coefficients C(n, r)")
    p_bounds.add_argument("--n-max", type=int, default=8)
    p_bounds.add_argument("--r-max", type=int, default=12)
    add_format(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds)

    p_search = sub.add_parser("search", help="scan a degree grid for violations")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--r", type=int, required=True)
    p_search.add_argument("--p", required=True, help="degree range, like 2..10")
    grid = p_search.add_mutually_exclusive_group()
    grid.add_argument("--equal", action="store_true", help="equal degrees only (default)")
    grid.add_argument("--full-grid", action="store_true", help="all non-decreasing vectors")
    p_search.add_argument("--jobs", type=int, default=1, help="worker processes")
    add_format(p_search)
    p_search.set_defaults(func=cmd_search)

    p_trace = sub.add_parser("trace", help="trace mu/pg against the limit coefficient")
    p_trace.add_argument("--n", type=int, required=True)
    p_trace.add_argument("--r", type=int, required=True)
    p_trace.add_argument("--p", required=True, help="list like 3,10,50 or range like 2..10")
    add_format(p_trace)
    p_trace.set_defaults(func=cmd_trace)

    p_self = sub.add_parser("selftest", help="run the identity and property suites")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SmoothGermError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
