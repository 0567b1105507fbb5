"""Command-line front end: gen, verify, records, distinct, leap-bench.

Exit codes: 0 ok, 1 I/O failure, 2 invalid seed or usage, 3 overflow,
4 one-or-prime violation, 5 search exhausted, 6 leap/naive mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from .analysis import distinct_generator_primes, records, verify_one_or_prime
from .arithmetic import U64_MAX
from .errors import SearchExhausted, SeedError, ValueOverflow
from .generators import (
    FamilySpec,
    Kind,
    SequenceState,
    checkpoint_record,
    cp_family,
    family_from_params,
    iter_steps,
    load_checkpoint,
)
from .leap import generate_fast, naive_nontrivial

EXIT_OK = 0
EXIT_IO = 1
EXIT_SEED = 2
EXIT_OVERFLOW = 3
EXIT_VIOLATION = 4
EXIT_EXHAUSTED = 5
EXIT_MISMATCH = 6

FAMILY_CHOICES = [k.value for k in Kind] + ["cp"]
LEAP_CHOICES = ["rowland", "three-n", "two-n", "cp"]


def build_family(args) -> FamilySpec:
    if args.family == "cp":
        if args.P is None:
            raise SeedError("--P is required for the cp family", "NOT_PRIME")
        return cp_family(args.P)
    kind = Kind(args.family)
    if kind in (Kind.THREE_N, Kind.TWO_N) and (args.m is None or args.t is None):
        raise SeedError(f"{kind.value} needs --m and --t", "SEED_MISMATCH")
    return family_from_params(kind, {"m": args.m, "t": args.t})


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", newline="")


def _write_rows(fh, fmt: str, header: list[str], rows):
    if fmt == "csv":
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row)
    elif fmt == "jsonl":
        for row in rows:
            fh.write(json.dumps(dict(zip(header, row))) + "\n")
    else:
        for row in rows:
            fh.write(f"{row[0]} {row[1]}\n")


def cmd_gen(args) -> int:
    family = build_family(args)
    state = None
    ckpt = Path(args.checkpoint) if args.checkpoint else None
    if ckpt is not None and ckpt.exists():
        lines = ckpt.read_text().splitlines()
        saved_family, state = load_checkpoint(json.loads(lines[-1]))
        if saved_family != family:
            print("checkpoint belongs to a different family", file=sys.stderr)
            return EXIT_SEED
    limit = None if args.unbounded else U64_MAX
    if args.n_max <= family.start_index:
        print(f"--n-max must exceed {family.start_index}", file=sys.stderr)
        return EXIT_SEED
    last = state or family.initial_state()
    fh = _open_out(args.output)
    try:
        def rows():
            nonlocal last
            for out in iter_steps(family, args.n_max, state, limit):
                last = SequenceState(out.n, out.value)
                yield out
        _write_rows(fh, args.format, ["n", "value", "delta", "gcd_arg"], rows())
    except ValueOverflow as exc:
        print(f"overflow at n={exc.index}: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    finally:
        if fh is not sys.stdout:
            fh.close()
    if ckpt is not None:
        ckpt.write_text(json.dumps(checkpoint_record(family, last)) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    family = build_family(args)
    limit = None if args.unbounded else U64_MAX
    report = verify_one_or_prime(family, args.n_max, limit=limit)
    fh = _open_out(args.output)
    try:
        fh.write(json.dumps(report.to_dict()) + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK if report.first_violation is None else EXIT_VIOLATION


def cmd_records(args) -> int:
    family = build_family(args)
    limit = None if args.unbounded else U64_MAX
    recs = records(family, args.n_max, args.threshold, limit=limit)
    fh = _open_out(args.output)
    try:
        rows = (
            (r.n, r.value, int(r.is_prime_value), int(r.is_twin_upper)) for r in recs
        )
        _write_rows(fh, args.format, ["n", "value", "is_prime", "is_twin_upper"], rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_distinct(args) -> int:
    try:
        primes = distinct_generator_primes(args.count, args.n_probe)
    except SearchExhausted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_EXHAUSTED
    print(" ".join(map(str, primes)))
    return EXIT_OK


def cmd_leap_bench(args) -> int:
    family = build_family(args)
    t0 = time.perf_counter()
    naive, naive_final = naive_nontrivial(family, args.n_max)
    t1 = time.perf_counter()
    fast = generate_fast(family, args.n_max)
    t2 = time.perf_counter()
    naive_iters = args.n_max - family.start_index
    ok = fast.nontrivial == naive and fast.final_state == naive_final
    print(f"equivalence {'OK' if ok else 'MISMATCH'}")
    print(f"naive: {naive_iters} iterations, {t1 - t0:.6f} s")
    print(f"leap: {fast.iterations} iterations, {t2 - t1:.6f} s")
    print(f"iteration ratio {fast.iterations / naive_iters:.6f}")
    return EXIT_OK if ok else EXIT_MISMATCH


def _family_args(p: argparse.ArgumentParser, choices=FAMILY_CHOICES):
    p.add_argument("--family", required=True, choices=choices)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--P", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rowlandgen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="stream sequence terms")
    _family_args(p)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--format", choices=["csv", "jsonl", "bfile"], default="csv")
    p.add_argument("--output")
    p.add_argument("--checkpoint", help="JSONL file holding the resume record")
    p.add_argument("--unbounded", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check every difference is 1 or prime")
    _family_args(p)
    p.add_argument("--n-max", type=int, default=10**6)
    p.add_argument("--output")
    p.add_argument("--unbounded", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("records", help="record differences with twin tags")
    _family_args(p)
    p.add_argument("--n-max", type=int, default=10**5)
    p.add_argument("--threshold", type=int, default=3)
    p.add_argument("--format", choices=["csv", "jsonl", "bfile"], default="csv")
    p.add_argument("--output")
    p.add_argument("--unbounded", action="store_true")
    p.set_defaults(func=cmd_records)

    p = sub.add_parser("distinct", help="distinct-generator primes")
    p.add_argument("--count", type=int, default=7)
    p.add_argument("--n-probe", type=int, default=10**5)
    p.set_defaults(func=cmd_distinct)

    p = sub.add_parser("leap-bench", help="compare naive and leap evaluation")
    _family_args(p, LEAP_CHOICES)
    p.add_argument("--n-max", type=int, default=10**5)
    p.set_defaults(func=cmd_leap_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SeedError as exc:
        print(f"invalid seed ({exc.code}): {exc}", file=sys.stderr)
        return EXIT_SEED
    except ValueOverflow as exc:
        print(f"overflow at n={exc.index}: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
