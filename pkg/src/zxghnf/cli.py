"""Command line interface for the normal-form tools.

Exit codes: 0 success, 1 verification failed, 2 oracle mismatch,
3 degenerate input, 4 parse error.
"""

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import asdict

from . import matio, oracle, verify
from .bounds import bound_report
from .ghnf import Strategy, ghnfn, syzygy_basis_zx
from .inthnf import IntMatrix, hnf_with_transform, mat_mul
from .poly import PolyMatrix, matrix

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ORACLE_MISMATCH = 2
EXIT_DEGENERATE = 3
EXIT_PARSE_ERROR = 4

BENCH_FORMAT = "ghnf-bench-v1"
BENCH_FIELDS = (
    "n",
    "m",
    "d",
    "coeff_range",
    "strategy",
    "loops",
    "max_width",
    "max_height",
    "wall_time_ms",
    "instance_seed",
)


def random_matrix(rng, n, m, d, coeff_range) -> PolyMatrix:
    """Random n x m matrix; every entry has degree exactly d.

    Coefficients are uniform in [-coeff_range, coeff_range] and the
    leading coefficient is resampled until nonzero.
    """
    cols = []
    for _ in range(m):
        col = []
        for _ in range(n):
            coeffs = [rng.randint(-coeff_range, coeff_range) for _ in range(d + 1)]
            while coeffs[d] == 0:
                coeffs[d] = rng.randint(-coeff_range, coeff_range)
            col.append(coeffs)
        cols.append(col)
    return matrix(n, cols)


def _write_json(obj, path):
    if path is None:
        json.dump(obj, sys.stdout, indent=1)
        sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=1)
            fh.write("\n")


def _stats_payload(F, run) -> dict:
    return {
        "strategy": run.strategy.value,
        "fallback": run.fallback,
        "loops": run.loops,
        "widths": list(run.widths),
        "heights": list(run.heights),
        "ghnf_width": run.ghnf.width(),
        "ghnf_degree": int(run.ghnf.deg()),
        "ghnf_height": run.ghnf.height(),
        "bounds": asdict(bound_report(F)),
    }


def cmd_compute(args) -> int:
    try:
        F = matio.load_matrix(args.input)
    except matio.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        run = ghnfn(F, Strategy(args.strategy))
    except ValueError as exc:
        print("degenerate input: %s" % exc, file=sys.stderr)
        return EXIT_DEGENERATE
    if args.oracle:
        reduced = oracle.interreduce(oracle.buchberger(F))
        if reduced.cols != run.ghnf.cols:
            print("oracle mismatch", file=sys.stderr)
            return EXIT_ORACLE_MISMATCH
    if args.stats:
        _write_json(_stats_payload(F, run), args.stats)
    _write_json(matio.emit_matrix(run.ghnf), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        C = matio.load_matrix(args.input)
    except matio.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE_ERROR
    ok, violations = verify.is_ghnf(C)
    if ok:
        print("ok")
        return EXIT_OK
    i, j1, j2, cond = violations[0]
    print("condition %d violated at (i=%d, j=%d, j'=%d)" % (cond, i, j1, j2))
    return EXIT_VERIFY_FAILED


def cmd_hnf(args) -> int:
    try:
        A = matio.load_int_matrix(args.input)
    except matio.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE_ERROR
    res = hnf_with_transform(A)
    zeros = res.U.cols - res.H.cols
    target = IntMatrix(
        A.rows,
        res.U.cols,
        tuple(
            tuple(0 for _ in range(zeros)) + res.H.entries[i]
            for i in range(A.rows)
        ),
    )
    if mat_mul(A, res.U) != target:
        raise RuntimeError("internal error: transform does not reproduce the HNF")
    payload = {
        "H": matio.emit_int_matrix(res.H),
        "U": matio.emit_int_matrix(res.U),
        "pivot_rows": [r + 1 for r in res.pivot_rows],
    }
    if res.H.cols == 0:
        payload["note"] = "input is the zero matrix; the normal form is empty"
    _write_json(payload, args.output)
    return EXIT_OK


def cmd_syzygy(args) -> int:
    try:
        F = matio.load_matrix(args.input)
    except matio.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE_ERROR
    if F.n != 1:
        print("degenerate input: syzygy extraction supports n = 1 only",
              file=sys.stderr)
        return EXIT_DEGENERATE
    if F.width() == 0:
        print("degenerate input: empty matrix", file=sys.stderr)
        return EXIT_DEGENERATE
    gens = syzygy_basis_zx(F)
    out = PolyMatrix(F.width(), tuple(gens))
    _write_json(matio.emit_matrix(out), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.coeff_range < 1:
        print("degenerate input: coeff-range must be at least 1",
              file=sys.stderr)
        return EXIT_DEGENERATE
    rows = []
    for idx in range(args.count):
        instance_seed = args.seed + idx
        F = random_matrix(
            random.Random(instance_seed), args.n, args.m, args.d, args.coeff_range
        )
        for strategy in (Strategy.PARTIAL, Strategy.FULL):
            t0 = time.perf_counter()
            run = ghnfn(F, strategy)
            wall_ms = int(round((time.perf_counter() - t0) * 1000))
            rows.append({
                "n": args.n,
                "m": args.m,
                "d": args.d,
                "coeff_range": args.coeff_range,
                "strategy": strategy.value,
                "loops": run.loops,
                "max_width": max(run.widths),
                "max_height": max(run.heights),
                "wall_time_ms": wall_ms,
                "instance_seed": instance_seed,
            })
    out = sys.stdout if args.output is None else open(
        args.output, "w", encoding="utf-8", newline=""
    )
    try:
        out.write("# %s\n" % BENCH_FORMAT)
        writer = csv.DictWriter(out, fieldnames=BENCH_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zxghnf",
        description="Canonical bases of column modules over Z[x].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="normal form of a polynomial matrix")
    p.add_argument("--input", required=True, help="polynomial matrix file")
    p.add_argument("--output", help="result file (default: stdout)")
    p.add_argument("--strategy", choices=["partial", "full"],
                   default="partial", help="prolongation strategy")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the pair-completion engine")
    p.add_argument("--stats", help="write per-loop statistics and bounds")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check the normal-form conditions")
    p.add_argument("--input", required=True, help="polynomial matrix file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hnf", help="column HNF of an integer matrix")
    p.add_argument("--input", required=True, help="integer matrix file")
    p.add_argument("--output", help="result file (default: stdout)")
    p.set_defaults(func=cmd_hnf)

    p = sub.add_parser("syzygy", help="kernel generators of a single-row matrix")
    p.add_argument("--input", required=True, help="polynomial matrix file")
    p.add_argument("--output", help="result file (default: stdout)")
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("bench", help="time both strategies on random instances")
    p.add_argument("--output", help="CSV file (default: stdout)")
    p.add_argument("--seed", type=int, default=0, help="base RNG seed")
    p.add_argument("--count", type=int, default=5, help="number of instances")
    p.add_argument("--n", type=int, default=2, help="module rows")
    p.add_argument("--m", type=int, default=3, help="columns")
    p.add_argument("--d", type=int, default=2, help="entry degree")
    p.add_argument("--coeff-range", type=int, default=10,
                   help="coefficients are uniform in [-range, range]")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
