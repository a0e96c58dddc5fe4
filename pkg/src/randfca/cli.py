"""Command-line interface.

Subcommands: gen, concepts, expect, mc, asymptotic, verify. By default a
human-readable summary goes to stdout; --json wraps the result in a
versioned report envelope (validated by report_schema.json, shipped with
the package). Exit codes: 0 success, 1 input error, 2 internal failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction
from typing import Any, Sequence

from .asymptotics import DEFAULT_TABLE_NS, round_half_up, table_report
from .context import FormalContext, enumerate_concepts
from .cxt import CxtDocument, read_cxt, write_cxt
from .errors import InputError, InternalError, RandFcaError
from .expectation import (
    expected_concepts,
    expected_concepts_bruteforce,
    expected_concepts_exact,
)
from .model import ModelParams, Seed, sample_context
from .montecarlo import compare_with_exact, estimate

DEFAULT_VERIFY_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_VERIFY_MAX_N = 4

# Per-case agreement bounds between formula and brute force.
VERIFY_REL_TOL = 1e-10
VERIFY_ABS_TOL = 1e-12


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> Any:  # noqa: D102  (argparse hook)
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _json_safe(value: Any) -> Any:
    """Replace non-finite floats with null so output is strict JSON."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def _print_envelope(command: str, params: dict, payload: dict, started: float) -> None:
    envelope = {
        "schema_version": "1",
        "command": command,
        "params": params,
        "payload": payload,
        "wall_time_ms": int((time.perf_counter() - started) * 1000),
    }
    print(json.dumps(_json_safe(envelope), indent=2, allow_nan=False))


def _parse_prob(text: str, rational: bool) -> float | Fraction:
    try:
        return Fraction(text) if rational else float(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse probability {text!r}") from None


def _parse_ns(text: str) -> list[int]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if "^" in token:
                base, _, exponent = token.partition("^")
                values.append(int(base) ** int(exponent))
            elif "e" in token or "E" in token:
                as_float = float(token)
                if as_float != int(as_float):
                    raise ValueError
                values.append(int(as_float))
            else:
                values.append(int(token))
        except ValueError:
            raise InputError(f"cannot parse n value {token!r}") from None
    return values


def _read_input(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _label_set(labels: Sequence[str], indices: frozenset[int]) -> str:
    return "{" + ", ".join(labels[i] for i in sorted(indices)) + "}"


def _cmd_gen(args: argparse.Namespace) -> int:
    params = ModelParams(args.n, args.p, args.q)
    sampled = sample_context(params, Seed(args.seed))
    ctx = FormalContext(
        tuple(f"g{i}" for i in range(1, sampled.object_count + 1)),
        tuple(f"m{j}" for j in range(1, sampled.attribute_count + 1)),
        sampled.incidence,
    )
    if args.format == "cxt":
        text = write_cxt(CxtDocument(ctx))
    else:
        document = {
            "objects": list(ctx.objects),
            "attributes": list(ctx.attributes),
            "rows": ["".join("X" if v else "." for v in row) for row in ctx.incidence],
        }
        text = json.dumps(document, indent=2) + "\n"
    _write_output(args.out, text)
    return 0


def _cmd_concepts(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    doc = read_cxt(_read_input(args.input))
    ctx = doc.context
    concepts = enumerate_concepts(ctx, algorithm=args.algo)
    if args.json:
        payload: dict[str, Any] = {"count": len(concepts)}
        if not args.count_only:
            payload["concepts"] = [
                {
                    "extent": [ctx.objects[i] for i in sorted(c.extent)],
                    "intent": [ctx.attributes[j] for j in sorted(c.intent)],
                }
                for c in concepts
            ]
        _print_envelope(
            "concepts",
            {"in": args.input, "algo": args.algo, "count_only": args.count_only},
            payload,
            started,
        )
        return 0
    if args.count_only:
        print(len(concepts))
        return 0
    print(f"concepts: {len(concepts)}")
    for concept in concepts:
        extent = _label_set(ctx.objects, concept.extent)
        intent = _label_set(ctx.attributes, concept.intent)
        print(f"  {extent} / {intent}")
    return 0


def _cmd_expect(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    p = _parse_prob(args.p, args.rational)
    q = _parse_prob(args.q, args.rational)
    params = ModelParams(args.n, float(p), float(q))
    report = expected_concepts(params)
    exact: Fraction | None = None
    if args.rational:
        exact = expected_concepts_exact(args.n, Fraction(p), Fraction(q))
    if args.json:
        payload = {
            "n": params.n,
            "p": params.p,
            "q": params.q,
            "value": report.value,
            "log_value": None if report.log_value.is_zero else report.log_value.log,
            "is_zero": report.log_value.is_zero,
            "terms_evaluated": report.terms_evaluated,
            "terms_skipped_zero": report.terms_skipped_zero,
        }
        if exact is not None:
            payload["exact"] = str(exact)
        _print_envelope(
            "expect",
            {"n": args.n, "p": args.p, "q": args.q, "rational": args.rational},
            payload,
            started,
        )
        return 0
    print(f"expected concepts: {_fmt(report.value)}")
    if exact is not None:
        print(f"exact: {exact}")
    log_text = "-inf (zero)" if report.log_value.is_zero else _fmt(report.log_value.log)
    print(f"log: {log_text}")
    total = report.terms_evaluated + report.terms_skipped_zero
    print(
        f"terms: {total} total = {report.terms_evaluated} evaluated"
        f" + {report.terms_skipped_zero} zero"
    )
    return 0


def _cmd_mc(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    params = ModelParams(args.n, args.p, args.q)
    if args.compare_exact:
        comparison = compare_with_exact(
            params, args.samples, Seed(args.seed), workers=args.workers
        )
        result = comparison.estimate
    else:
        comparison = None
        result = estimate(params, args.samples, Seed(args.seed), workers=args.workers)
    if args.json:
        payload = {
            "n": params.n,
            "p": params.p,
            "q": params.q,
            "samples": result.samples,
            "seed": result.seed.master,
            "workers": args.workers,
            "mean": result.mean,
            "stderr": result.stderr,
            "ci95_low": result.ci95_low,
            "ci95_high": result.ci95_high,
            "min_count": result.min_count,
            "max_count": result.max_count,
        }
        if comparison is not None:
            payload["exact"] = comparison.exact
            payload["z"] = comparison.z
        _print_envelope(
            "mc",
            {
                "n": args.n,
                "p": args.p,
                "q": args.q,
                "samples": args.samples,
                "seed": args.seed,
                "workers": args.workers,
                "compare_exact": args.compare_exact,
            },
            payload,
            started,
        )
        return 0
    print(f"mean: {_fmt(result.mean)}")
    print(f"stderr: {_fmt(result.stderr)}")
    print(f"ci95: [{_fmt(result.ci95_low)}, {_fmt(result.ci95_high)}]")
    print(f"count range: [{result.min_count}, {result.max_count}]")
    print(f"samples: {result.samples}  seed: {result.seed.master}  workers: {args.workers}")
    if comparison is not None:
        print(f"exact: {_fmt(comparison.exact)}")
        print(f"z: {_fmt(comparison.z)}")
    return 0


def _cmd_asymptotic(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    ns = _parse_ns(args.ns) if args.ns is not None else list(DEFAULT_TABLE_NS)
    rows = table_report(ns)
    if args.json:
        payload = {
            "rows": [
                {
                    "n": row.n,
                    "a": row.split.a,
                    "b": row.split.b,
                    "c": row.split.c,
                    "d": row.split.d,
                    "log_term": row.log_term,
                    "gap": row.gap,
                    "gap_3dp": round_half_up(row.gap, 3),
                    "exceeds_threshold": row.exceeds_threshold,
                }
                for row in rows
            ]
        }
        _print_envelope("asymptotic", {"ns": ns}, payload, started)
        return 0
    header = (
        f"{'n':>12} {'a':>4} {'b':>4} {'c':>12} {'d':>12}"
        f" {'log_term':>14} {'gap':>8} {'threshold':>10}"
    )
    print(header)
    for row in rows:
        print(
            f"{row.n:>12} {row.split.a:>4} {row.split.b:>4} {row.split.c:>12}"
            f" {row.split.d:>12} {_fmt(row.log_term):>14}"
            f" {round_half_up(row.gap, 3):>8.3f}"
            f" {'yes' if row.exceeds_threshold else 'no':>10}"
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    grid = DEFAULT_VERIFY_GRID
    cases = 0
    max_error = 0.0
    worst: dict[str, Any] | None = None
    all_ok = True
    for n in range(1, args.max_n + 1):
        for p in grid:
            for q in grid:
                params = ModelParams(n, p, q)
                formula = expected_concepts(params).value
                oracle = expected_concepts_bruteforce(params)
                difference = abs(formula - oracle)
                if oracle > 1.0:
                    ok = difference / oracle <= VERIFY_REL_TOL
                else:
                    ok = difference <= VERIFY_ABS_TOL
                normalized = difference / max(abs(oracle), 1.0)
                cases += 1
                all_ok = all_ok and ok
                if normalized >= max_error:
                    max_error = normalized
                    worst = {
                        "n": n,
                        "p": p,
                        "q": q,
                        "formula": formula,
                        "bruteforce": oracle,
                    }
    if not all_ok:
        raise InternalError(
            f"formula disagrees with brute force: worst case {worst},"
            f" normalized error {max_error:.3e}"
        )
    if args.json:
        payload = {
            "max_n": args.max_n,
            "grid": args.grid,
            "cases": cases,
            "max_normalized_error": max_error,
            "ok": all_ok,
            "worst": worst,
        }
        _print_envelope(
            "verify", {"max_n": args.max_n, "grid": args.grid}, payload, started
        )
        return 0
    print(f"cases: {cases} (n <= {args.max_n}, {len(grid)}x{len(grid)} probability grid)")
    print(f"max relative error: {max_error:.3e}")
    print("OK")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="randfca",
        description="Formal concept enumeration and average-case analysis of random contexts.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    gen = sub.add_parser("gen", help="sample a random context and write it out")
    gen.add_argument("--n", type=int, required=True, help="universe size")
    gen.add_argument("--p", type=float, required=True, help="object probability")
    gen.add_argument("--q", type=float, required=True, help="incidence probability")
    gen.add_argument("--seed", type=int, required=True, help="64-bit master seed")
    gen.add_argument("--out", default=None, help="output file (default stdout)")
    gen.add_argument("--format", choices=("cxt", "json"), default="cxt")
    gen.set_defaults(func=_cmd_gen)

    concepts = sub.add_parser("concepts", help="enumerate concepts of a context file")
    concepts.add_argument("--in", dest="input", default=None, help="input .cxt file (default stdin)")
    concepts.add_argument("--algo", choices=("cbo", "scan"), default="cbo")
    concepts.add_argument("--count-only", action="store_true")
    concepts.add_argument("--json", action="store_true")
    concepts.set_defaults(func=_cmd_concepts)

    expect = sub.add_parser("expect", help="exact average concept count")
    expect.add_argument("--n", type=int, required=True)
    expect.add_argument("--p", required=True, help="probability (float, or fraction with --rational)")
    expect.add_argument("--q", required=True, help="probability (float, or fraction with --rational)")
    expect.add_argument("--rational", action="store_true", help="also evaluate exactly over rationals")
    expect.add_argument("--json", action="store_true")
    expect.set_defaults(func=_cmd_expect)

    mc = sub.add_parser("mc", help="Monte Carlo estimate of the average concept count")
    mc.add_argument("--n", type=int, required=True)
    mc.add_argument("--p", type=float, required=True)
    mc.add_argument("--q", type=float, required=True)
    mc.add_argument("--samples", type=int, required=True)
    mc.add_argument("--seed", type=int, required=True)
    mc.add_argument("--workers", type=int, default=1)
    mc.add_argument("--compare-exact", action="store_true")
    mc.add_argument("--json", action="store_true")
    mc.set_defaults(func=_cmd_mc)

    asymptotic = sub.add_parser("asymptotic", help="growth diagnostics of the dominant summand")
    asymptotic.add_argument(
        "--ns",
        default=None,
        help="comma-separated n values (default 10^1..10^10); 1e8 and 10^8 forms accepted",
    )
    asymptotic.add_argument("--json", action="store_true")
    asymptotic.set_defaults(func=_cmd_asymptotic)

    verify = sub.add_parser("verify", help="cross-check the exact formula against brute force")
    verify.add_argument("--max-n", type=int, default=DEFAULT_VERIFY_MAX_N)
    verify.add_argument("--grid", choices=("default",), default="default")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RandFcaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
