"""Command-line interface.

Subcommands:

* ``solve``  bound the total Betti numbers of a constrained family
* ``ideal``  lexsegment ideal and Betti table for one Hilbert function
* ``bench``  constant-polynomial timing sweep (CSV, optional figure)

Exit codes: 0 ok, 2 bad or inconsistent input, 3 empty family,
4 ``--verify`` mismatch, 5 instance too large for ``--verify``.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from .betti import NotOSequenceError, almost_lex_betti, almost_lex_ideal
from .constraints import Algorithm, ConstraintError, ConstraintSpec, build_spec, choose_algorithm
from .dp import EmptyFamilyError, ResultsMode
from .macaulay import HilbertPolynomial, NotHilbertPolynomialError
from .oracle import DEFAULT_CEILING, FamilyKind, InstanceTooLargeError, brute_force_result
from .solver import solve

log = logging.getLogger("bettibound")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EMPTY = 3
EXIT_MISMATCH = 4
EXIT_TOO_LARGE = 5


class RequestError(ValueError):
    pass


def parse_bound_list(text: Optional[str]):
    """``",,,8,8,5,5"`` (positional, gaps allowed) or ``"6:41,7:42"`` (sparse)."""
    if text is None:
        return None
    text = text.strip().strip("{}[]")
    if not text:
        return []
    items = [s.strip() for s in text.split(",")]
    if any(":" in s for s in items):
        out = {}
        for s in items:
            if not s:
                continue
            d, _, v = s.partition(":")
            out[int(d)] = int(v)
        return out
    return [int(s) if s else None for s in items]


def parse_polynomial(value: Any) -> Optional[HilbertPolynomial]:
    """Constant, ``"3,-6,175"`` (leading coefficient first) or a JSON list of numbers/fractions."""
    if value is None:
        return None
    if isinstance(value, bool):
        raise RequestError("hilbert_polynomial must be a number, string or list")
    if isinstance(value, int):
        return HilbertPolynomial.constant(value)
    if isinstance(value, str):
        parts = [s.strip() for s in value.strip().strip("{}[]").split(",") if s.strip()]
        if not parts:
            raise RequestError("empty hilbert_polynomial")
        value = parts
    if isinstance(value, (list, tuple)):
        try:
            coeffs = [Fraction(str(c)) for c in value]
        except (ValueError, ZeroDivisionError) as exc:
            raise RequestError(f"bad polynomial coefficient: {exc}") from None
        return HilbertPolynomial.from_descending(coeffs)
    raise RequestError("hilbert_polynomial must be a number, string or list")


def _bounds_from_json(value: Any, name: str):
    if value is None or isinstance(value, (list, dict)):
        return value
    if isinstance(value, str):
        return parse_bound_list(value)
    raise RequestError(f"{name} must be a list, an object or a string")


def spec_from_request(doc: dict) -> ConstraintSpec:
    if "variables" not in doc:
        raise RequestError("request is missing 'variables'")
    poly = parse_polynomial(doc.get("hilbert_polynomial"))
    if poly is not None:
        poly.check_integer_valued()
    return build_spec(
        int(doc["variables"]),
        hf_lower=_bounds_from_json(doc.get("hf_lower"), "hf_lower"),
        hf_upper=_bounds_from_json(doc.get("hf_upper"), "hf_upper"),
        diff_lower=_bounds_from_json(doc.get("diff_lower"), "diff_lower"),
        diff_upper=_bounds_from_json(doc.get("diff_upper"), "diff_upper"),
        polynomial=poly,
    )


def solve_request(doc: dict) -> dict:
    """Run one request document; returns the response document.

    Raises the library's exceptions; :func:`main` maps them to exit codes.
    """
    spec = spec_from_request(doc)
    requested = Algorithm(doc.get("algorithm", "automatic"))
    mode = ResultsMode(doc.get("results", "none"))
    t0 = time.perf_counter()
    algo, _, result = solve(spec, requested, mode)
    elapsed = (time.perf_counter() - t0) * 1000.0
    response = {
        "spec": spec.as_dict(),
        "algorithm": algo.value,
        "results": mode.value,
        **result.as_dict(),
        "timing_ms": round(elapsed, 3),
    }
    if doc.get("verify"):
        kind = (FamilyKind.WITHOUT_MACAULAY_CONDITION if algo is Algorithm.SIMPLIFIED
                else FamilyKind.WITH_MACAULAY_CONDITION)
        ceiling = int(doc.get("verify_ceiling", DEFAULT_CEILING))
        expected = brute_force_result(spec, kind, mode, ceiling)
        response["verified"] = _agree(result, expected, mode)
        if not response["verified"]:
            response["oracle"] = expected.as_dict()
    return response


def _agree(result, expected, mode: ResultsMode) -> bool:
    if mode is ResultsMode.ONE:
        # any max-sum witness is acceptable; compare values only
        return (result.betti_upper_bound, result.maximum_betti_sum, result.is_realizable) == (
            expected.betti_upper_bound, expected.maximum_betti_sum, expected.is_realizable)
    return result == expected


def _fmt_seq(seq: Sequence[int]) -> str:
    return "{" + ", ".join(str(x) for x in seq) + "}"


def render_response(resp: dict) -> str:
    rows: list[tuple[str, list[str]]] = [
        ("algorithm", [resp["algorithm"]]),
        ("horizon", [str(resp["spec"]["horizon"])]),
        ("betti upper bound", [_fmt_seq(resp["betti_upper_bound"])]),
        ("maximum betti sum", [str(resp["maximum_betti_sum"])]),
        ("realizable", [str(resp["is_realizable"]).lower()]),
    ]
    if "hilbert_functions" in resp:
        hfs = resp["hilbert_functions"]
        rows.append((f"hilbert functions ({len(hfs)})", [_fmt_seq(h) for h in hfs]))
    if "maximal_betti_numbers" in resp:
        rows.append(("maximal betti numbers", [_fmt_seq(b) for b in resp["maximal_betti_numbers"]]))
    if "verified" in resp:
        rows.append(("verified", [str(resp["verified"]).lower()]))
    rows.append(("time", [f"{resp['timing_ms']:.1f} ms"]))
    width = max(len(k) for k, _ in rows) + 1
    lines = []
    for key, values in rows:
        for i, v in enumerate(values):
            label = f"{key}:" if i == 0 else ""
            lines.append(f"{label.ljust(width)} {v}")
    return "\n".join(lines)


def _request_from_args(args) -> dict:
    doc: dict = {}
    if args.request:
        with open(args.request) as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict):
            raise RequestError("request file must hold a JSON object")
    if args.variables is not None:
        doc["variables"] = args.variables
    if args.hilbert_polynomial is not None:
        doc["hilbert_polynomial"] = args.hilbert_polynomial
    for flag, key in (("hf_lower", "hf_lower"), ("hf_upper", "hf_upper"),
                      ("diff_lower", "diff_lower"), ("diff_upper", "diff_upper")):
        value = getattr(args, flag)
        if value is not None:
            doc[key] = parse_bound_list(value)
    if args.algorithm is not None:
        doc["algorithm"] = args.algorithm
    if args.results is not None:
        doc["results"] = args.results
    if args.verify:
        doc["verify"] = True
    if args.verify_ceiling is not None:
        doc["verify_ceiling"] = args.verify_ceiling
    return doc


def cmd_solve(args) -> int:
    try:
        doc = _request_from_args(args)
        resp = solve_request(doc)
    except (ConstraintError, NotHilbertPolynomialError, RequestError, NotOSequenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EmptyFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except InstanceTooLargeError as exc:
        print(f"error: cannot verify, {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    if args.json:
        print(json.dumps(resp, indent=2))
    else:
        print(render_response(resp))
    if resp.get("verified") is False:
        print("error: dynamic program and brute force disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_ideal(args) -> int:
    h = parse_bound_list(args.hilbert_function)
    if not isinstance(h, list) or any(v is None for v in h) or not h:
        print("error: --hilbert-function must be a gap-free list of values", file=sys.stderr)
        return EXIT_INPUT
    try:
        ideal = almost_lex_ideal(args.variables, h)
        table = almost_lex_betti(args.variables, h)
    except (NotOSequenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps({
            "variables": args.variables,
            "hilbert_function": h,
            "generators": [list(m.exponents) for m in ideal.generators],
            "generators_text": [m.format() for m in ideal.generators],
            "betti_table": table.as_json(),
            "betti_totals": table.totals(),
        }, indent=2))
    else:
        print(ideal.format())
        print()
        print(table.render())
    return EXIT_OK


BENCH_FIELDS = ["polynomial", "algorithm", "seconds", "horizon", "betti_upper_bound", "maximum_betti_sum"]


def run_bench(variables: int, polys: Sequence[int], algorithms: Sequence[Algorithm], repeat: int = 1):
    for p in polys:
        spec = build_spec(variables, polynomial=HilbertPolynomial.constant(p))
        for algo in algorithms:
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                _, _, result = solve(spec, algo, ResultsMode.NONE)
                best = min(best, time.perf_counter() - t0)
            yield {
                "polynomial": p,
                "algorithm": algo.value,
                "seconds": f"{best:.6f}",
                "horizon": spec.horizon,
                "betti_upper_bound": " ".join(map(str, result.betti_upper_bound)),
                "maximum_betti_sum": result.maximum_betti_sum,
            }


def cmd_bench(args) -> int:
    algos = [Algorithm.SIMPLIFIED, Algorithm.COMPLETE] if args.algorithm == "both" else [Algorithm(args.algorithm)]
    polys = range(args.min, args.max + 1, args.step)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    rows = []
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_FIELDS)
        writer.writeheader()
        for row in run_bench(args.variables, polys, algos, args.repeat):
            writer.writerow(row)
            out.flush()
            rows.append(row)
    finally:
        if out is not sys.stdout:
            out.close()
    if args.plot:
        from .plotting import render_timing_figure

        path = render_timing_figure(rows, args.plot, title=f"runtime, {args.variables} variables")
        log.info("wrote %s", path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bettibound", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="upper bounds for total Betti numbers of a constrained family")
    s.add_argument("--request", help="JSON request document (flags override its fields)")
    s.add_argument("--variables", type=int, help="number N of variables of S")
    s.add_argument("--hilbert-polynomial", help='constant or coefficients, leading first: "3,-6,175"')
    s.add_argument("--hf-lower", help='lower bounds for h, e.g. ",,,,,,41" or "6:41"')
    s.add_argument("--hf-upper", help="upper bounds for h")
    s.add_argument("--diff-lower", help='lower bounds for Delta h, e.g. ",,,8,8,5,5"')
    s.add_argument("--diff-upper", help="upper bounds for Delta h")
    s.add_argument("--algorithm", choices=[a.value for a in Algorithm])
    s.add_argument("--results", choices=[m.value for m in ResultsMode])
    s.add_argument("--json", action="store_true", help="emit the JSON response document")
    s.add_argument("--verify", action="store_true", help="cross-check against brute force (small inputs)")
    s.add_argument("--verify-ceiling", type=int,
                   help=f"search-node limit for --verify (default {DEFAULT_CEILING})")
    s.set_defaults(func=cmd_solve)

    i = sub.add_parser("ideal", help="lexsegment ideal and Betti table for a Hilbert function")
    i.add_argument("--variables", type=int, required=True)
    i.add_argument("--hilbert-function", required=True, help='values from degree 0, e.g. "1,5,11,21"')
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_ideal)

    b = sub.add_parser("bench", help="timing sweep over constant Hilbert polynomials")
    b.add_argument("--variables", type=int, default=5)
    b.add_argument("--min", type=int, default=0)
    b.add_argument("--max", type=int, default=100)
    b.add_argument("--step", type=int, default=1)
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--algorithm", choices=["both", "simplified", "complete"], default="both")
    b.add_argument("--output", help="CSV path (default: stdout)")
    b.add_argument("--plot", help="also render a log-scale runtime figure to this path")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
