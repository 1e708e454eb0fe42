"""Command-line surface: generate, tabulate, decompose, and verify.

    bifib gen U 5
    bifib table a 8 --format text --method all
    bifib det BV 6 --cross-check
    bifib decompose V 7 BUstar
    bifib verify 30 all --format json
    bifib chebyshev T 5

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
deterministic; the only run-dependent values are the "seconds" fields of
the JSON verify report, which the report itself flags as non-golden.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from .bases import (
    BasisFamily,
    BasisSpec,
    EXPECTED_DETERMINANTS,
    check_determinant,
    coordinate_matrix,
    decompose,
    det_by_column_reduction,
    Decomposition,
)
from .coefficients import (
    MIN_ROW,
    SCHEMES,
    Family,
    check_theorem,
    closed_triangle,
    cross_check,
    oracle_triangle,
    recurrence_triangle,
)
from .errors import BifibError
from .operators import check_relation, check_shift_law
from .report import CheckResult
from .sequences import (
    SequenceKind,
    check_alternating_v_sum,
    check_v_even_simple,
    check_v_from_u_neighbors,
    check_v_from_u_pair,
    u_poly,
    v_poly,
)
from .specializations import chebyshev_t, chebyshev_u

_SEQUENCE_BASES = ["BU", "BV", "BUstar", "BVstar"]
_DOUBLED_PAIRS = {
    ("U", BasisFamily.BV),
    ("U", BasisFamily.BV_STAR),
    ("V", BasisFamily.BV_STAR),
}
_STARRED = (BasisFamily.BU_STAR, BasisFamily.BV_STAR)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except BifibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bifib",
        description="Exact computations with bivariate Fibonacci and Lucas polynomials.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-n",
        type=int,
        default=500,
        metavar="CAP",
        help="hard cap on index arguments (default 500)",
    )

    gen = sub.add_parser("gen", parents=[common], help="print one sequence member")
    gen.add_argument("kind", choices=["U", "V"])
    gen.add_argument("n", type=int)
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.set_defaults(handler=_cmd_gen)

    table = sub.add_parser("table", parents=[common], help="emit a coefficient triangle")
    table.add_argument("family", choices=[f.value for f in Family])
    table.add_argument("n_max", type=int)
    table.add_argument("--format", choices=["text", "csv", "json", "latex"], default="text")
    table.add_argument(
        "--method",
        choices=["closed", "recurrence", "oracle", "all"],
        default="recurrence",
        help="generation method; 'all' emits only if the methods agree",
    )
    table.set_defaults(handler=_cmd_table)

    det = sub.add_parser("det", parents=[common], help="exact basis determinant")
    det.add_argument("basis", choices=_SEQUENCE_BASES)
    det.add_argument("n", type=int)
    det.add_argument("--format", choices=["text", "json"], default="text")
    det.add_argument(
        "--cross-check",
        action="store_true",
        help="also run the column-reduction determinant and compare",
    )
    det.set_defaults(handler=_cmd_det)

    dec = sub.add_parser("decompose", parents=[common], help="coordinates over a sequence basis")
    dec.add_argument("kind", choices=["U", "V"])
    dec.add_argument("n", type=int)
    dec.add_argument("basis", choices=_SEQUENCE_BASES)
    dec.add_argument("--format", choices=["text", "json"], default="text")
    dec.set_defaults(handler=_cmd_decompose)

    verify = sub.add_parser("verify", parents=[common], help="run the verification suite")
    verify.add_argument("n_max", type=int)
    verify.add_argument(
        "scope",
        nargs="?",
        choices=["all", "lemma1", "lemma2", "relations", "theorems"],
        default="all",
    )
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.set_defaults(handler=_cmd_verify)

    cheb = sub.add_parser("chebyshev", parents=[common], help="print a Chebyshev polynomial")
    cheb.add_argument("kind", choices=["T", "U"])
    cheb.add_argument("n", type=int)
    cheb.add_argument("--format", choices=["text", "json"], default="text")
    cheb.set_defaults(handler=_cmd_chebyshev)

    return parser


def _enforce_cap(parser: argparse.ArgumentParser, args: argparse.Namespace, *indices: int) -> None:
    for value in indices:
        if value < 0:
            parser.error(f"index {value} is negative")
        if value > args.max_n:
            parser.error(f"index {value} exceeds the --max-n cap of {args.max_n}")


def _cmd_gen(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _enforce_cap(parser, args, args.n)
    poly = u_poly(args.n) if args.kind == "U" else v_poly(args.n)
    if args.format == "json":
        print(json.dumps(poly.to_json_terms()))
    else:
        print(poly)
    return 0


def _cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _enforce_cap(parser, args, args.n_max)
    family = Family(args.family)
    if args.n_max < MIN_ROW[family]:
        parser.error(f"family {family.value} starts at row {MIN_ROW[family]}")
    if args.method == "oracle" and args.n_max < SCHEMES[family].min_n:
        parser.error(f"the oracle for family {family.value} starts at row {SCHEMES[family].min_n}")

    if args.method == "all":
        report = cross_check(family, args.n_max)
        if not report.passed:
            for mismatch in report.mismatches:
                values = " ".join(f"{m}={v}" for m, v in sorted(mismatch.values.items()))
                print(
                    f"family {family.value} n={mismatch.n} k={mismatch.k}: {values}",
                    file=sys.stderr,
                )
            return 1
        triangle = recurrence_triangle(family, args.n_max)
    elif args.method == "closed":
        triangle = closed_triangle(family, args.n_max)
    elif args.method == "oracle":
        triangle = oracle_triangle(family, args.n_max)
    else:
        triangle = recurrence_triangle(family, args.n_max)

    if args.format == "text":
        print(triangle.to_text())
    elif args.format == "csv":
        print(triangle.to_csv())
    elif args.format == "latex":
        print(triangle.to_latex())
    else:
        print(json.dumps(triangle.to_json_dict()))
    return 0


def _cmd_det(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _enforce_cap(parser, args, args.n)
    spec = BasisSpec(BasisFamily(args.basis), args.n)
    value = coordinate_matrix(spec).det()
    if args.cross_check:
        reduction = det_by_column_reduction(spec)
        if reduction != value:
            print(
                f"determinant mismatch for {args.basis} n={args.n}: "
                f"elimination {value}, column reduction {reduction}",
                file=sys.stderr,
            )
            return 1
    if args.format == "json":
        print(json.dumps({"family": args.basis, "n": args.n, "det": str(value)}))
    else:
        print(value)
    return 0


def _cmd_decompose(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _enforce_cap(parser, args, args.n)
    kind, index = args.kind, args.n
    family = BasisFamily(args.basis)
    if kind == "U" and index == 0:
        print("error: U_0 is the zero polynomial; nothing to decompose", file=sys.stderr)
        return 2
    weight = index - 1 if kind == "U" else index
    starred = family in _STARRED
    if starred != (weight % 2 == 1):
        needed = "odd" if starred else "even"
        print(
            f"error: {kind}_{index} spans canonical degree {weight}, "
            f"but {family.value} bases span {needed}-degree spaces",
            file=sys.stderr,
        )
        return 2
    order = (weight + 1) // 2 if starred else weight // 2
    doubled = (kind, family) in _DOUBLED_PAIRS
    member = u_poly(index) if kind == "U" else v_poly(index)
    target = member.scale(2) if doubled else member
    decomposition = decompose(target, BasisSpec(family, order))
    if args.format == "json":
        print(json.dumps(decomposition.to_json_dict()))
    else:
        label = ("2" if doubled else "") + f"{kind}_{index}"
        print(f"{label} = {_combination_text(decomposition)}")
    return 0


def _combination_text(decomposition: Decomposition) -> str:
    family = decomposition.spec.family
    order = decomposition.spec.n
    letter = "U" if family in (BasisFamily.BU, BasisFamily.BU_STAR) else "V"
    offset = {
        BasisFamily.BU: 1,
        BasisFamily.BV: 0,
        BasisFamily.BU_STAR: 0,
        BasisFamily.BV_STAR: -1,
    }[family]
    chunks: list[str] = []
    for k, coeff in enumerate(decomposition.coords):
        power = order - k
        xpart = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
        name = f"{letter}_{order + k + offset}"
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if magnitude == 1:
            head = ""
        elif isinstance(magnitude, int):
            head = str(magnitude)
        else:
            head = f"({magnitude})"
        stem = head + xpart
        if not stem:
            body = name
        elif xpart:
            body = f"{stem} {name}"
        else:
            body = stem + name
        if not chunks:
            chunks.append(("-" if negative else "") + body)
        else:
            chunks.append((" - " if negative else " + ") + body)
    return "".join(chunks)


def _verify_thunks(n_max: int, scope: str) -> list[Callable[[], CheckResult]]:
    thunks: list[Callable[[], CheckResult]] = []
    if scope in ("all", "lemma1"):
        for basis in EXPECTED_DETERMINANTS:
            thunks.append(lambda basis=basis: check_determinant(basis, n_max))
    if scope in ("all", "lemma2"):
        thunks.append(lambda: check_v_from_u_pair(n_max))
        thunks.append(lambda: check_v_from_u_neighbors(n_max))
        thunks.append(lambda: check_alternating_v_sum(n_max))
        thunks.append(lambda: check_v_even_simple(n_max))
        for kind in SequenceKind:
            thunks.append(lambda kind=kind: check_shift_law(kind, n_max))
    if scope in ("all", "relations"):
        for family in Family:
            thunks.append(lambda family=family: check_relation(family, n_max))
    if scope in ("all", "theorems"):
        for family in Family:
            thunks.append(lambda family=family: check_theorem(family, n_max))
    return thunks


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _enforce_cap(parser, args, args.n_max)
    if args.n_max < 1:
        parser.error("verify needs n_max >= 1")
    timed: list[tuple[CheckResult, float]] = []
    for thunk in _verify_thunks(args.n_max, args.scope):
        start = time.perf_counter()
        result = thunk()
        timed.append((result, time.perf_counter() - start))
    timed.sort(key=lambda pair: pair[0].name)
    passed = all(result.passed for result, _ in timed)
    if args.format == "json":
        payload = {
            "schema": 1,
            "scope": args.scope,
            "n_max": args.n_max,
            "passed": passed,
            "non_golden_fields": ["seconds"],
            "checks": [
                {
                    "name": result.name,
                    "passed": result.passed,
                    "detail": result.detail,
                    "seconds": round(elapsed, 6),
                }
                for result, elapsed in timed
            ],
        }
        print(json.dumps(payload))
    else:
        for result, _ in timed:
            print(result.line())
        ok = sum(1 for result, _ in timed if result.passed)
        print(f"{ok}/{len(timed)} checks passed")
    return 0 if passed else 1


def _cmd_chebyshev(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _enforce_cap(parser, args, args.n)
    poly = chebyshev_t(args.n) if args.kind == "T" else chebyshev_u(args.n)
    if args.format == "json":
        print(json.dumps(poly.to_json_terms()))
    else:
        print(poly)
    return 0
