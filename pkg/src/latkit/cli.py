"""Command-line front end.

Subcommands: ``basis`` (incremental construction with optional trace and
oracle verification), ``minima``, ``decompose`` and ``bench``.  Lattice
files are plain text: a header line "d m", then m whitespace-separated rows
of d rational literals; '#' starts a comment.  All primary output is itself
a valid lattice file (metadata goes into comment lines).

Exit codes: 0 ok, 2 parse error, 3 verification mismatch, 4 insufficient
bound, 5 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    GeneratingSet,
    LatticeBasis,
    Vector,
    as_vector,
    is_zero_vector,
    lattice_equal,
    norm_sq,
    volume_sq,
)
from .decompose import (
    canonical_component_forms,
    graph_decomposition_oracle,
    orthogonal_decomposition,
)
from .enumeration import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    EnumerationRequest,
    enumerate_up_to,
    first_minimum_sq,
)
from .incremental import (
    generating_subset,
    incremental_basis,
    update_step_bound_holds,
    update_step_bound_value,
)
from .minima import greedy_minima_oracle, minkowski_check, successive_minima
from .reduction import ReductionParams, mlll

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_BOUND = 4
EXIT_CAP = 5


class LatticeFileError(Exception):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_scalar(token: str) -> Fraction:
    return Fraction(token)


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v: Vector) -> str:
    return " ".join(format_scalar(c) for c in v)


def parse_lattice_file(text: str) -> tuple[int, int, list[Vector]]:
    """Parse header 'd m' plus m rows of d rational literals."""
    header: Optional[tuple[int, int]] = None
    rows: list[Vector] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise LatticeFileError(
                    line_no, "header must be two integers 'd m'")
            try:
                d, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise LatticeFileError(
                    line_no, "header must be two integers 'd m'")
            if d < 1 or m < 1:
                raise LatticeFileError(line_no, "header requires d>=1, m>=1")
            header = (d, m)
            continue
        d, m = header
        if len(tokens) != d:
            raise LatticeFileError(
                line_no, f"expected {d} entries, got {len(tokens)}")
        try:
            rows.append(tuple(parse_scalar(t) for t in tokens))
        except (ValueError, ZeroDivisionError) as exc:
            raise LatticeFileError(line_no, f"bad rational literal: {exc}")
        if len(rows) > m:
            raise LatticeFileError(line_no, f"more than {m} data rows")
    if header is None:
        raise LatticeFileError(1, "missing header line 'd m'")
    if len(rows) != header[1]:
        raise LatticeFileError(
            1, f"header promises {header[1]} rows, file has {len(rows)}")
    return header[0], header[1], rows


def render_lattice(vectors: Sequence[Vector], dim: int) -> list[str]:
    lines = [f"{dim} {len(vectors)}"]
    lines.extend(format_vector(v) for v in vectors)
    return lines


@dataclass
class RunReport:
    command: str
    input_digest: str
    lines: list[str] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def emit(self, out=None) -> None:
        for line in self.lines:
            print(line, file=out if out is not None else sys.stdout)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _params(args) -> ReductionParams:
    return ReductionParams(Fraction(args.delta))


def _bound_sq(args) -> Fraction:
    if args.bound_sq is not None:
        b = Fraction(args.bound_sq)
        if b <= 0:
            raise ValueError("--bound-sq must be positive")
        return b
    if args.bound is not None:
        b = Fraction(args.bound)
        if b <= 0:
            raise ValueError("--bound must be positive")
        return b * b
    raise ValueError("one of --bound-sq / --bound is required")


def cmd_basis(args) -> int:
    text = _read_input(args.file)
    d, _, rows = parse_lattice_file(text)
    report = RunReport("basis", _digest(text))
    t0 = time.perf_counter()
    basis, trace = incremental_basis(rows, _params(args))
    t1 = time.perf_counter()
    report.lines += [
        f"# command: basis",
        f"# input: {report.input_digest}",
        f"# rank: {basis.rank}",
        f"# volume_sq: {format_scalar(volume_sq(basis))}",
    ]
    report.lines += render_lattice(basis.vectors, d)
    if args.trace:
        for rec in trace.insertions:
            kind = "update" if rec.was_update else "member"
            report.lines.append(
                f"# insert i={rec.index} {kind} rank={rec.rank_after} "
                f"volume_sq={format_scalar(rec.volume_sq_after)}")
        report.lines.append(f"# update_count: {trace.update_count}")
        if basis.rank >= 1:
            lam1 = first_minimum_sq(basis, _params(args), args.cap)
            bsq = max(norm_sq(as_vector(v)) for v in rows
                      if not is_zero_vector(as_vector(v)))
            holds = update_step_bound_holds(trace, basis.rank, bsq, lam1)
            value = update_step_bound_value(basis.rank, bsq, lam1)
            report.lines.append(f"# bound_value: {value:.6f}")
            report.lines.append(
                f"# bound_holds: {'true' if holds else 'false'}")
        report.lines.append(f"# time_compute: {t1 - t0:.6f}")
    report.emit()
    if args.verify:
        subset = generating_subset(rows, trace)
        if not lattice_equal(basis, rows) or not lattice_equal(subset, rows):
            print("verification failed: basis does not match the HNF oracle",
                  file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def _basis_from_rows(rows) -> LatticeBasis:
    return LatticeBasis(rows)


def cmd_minima(args) -> int:
    text = _read_input(args.file)
    d, _, rows = parse_lattice_file(text)
    try:
        basis = _basis_from_rows(rows)
        bound_sq = _bound_sq(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        s = enumerate_up_to(EnumerationRequest(basis, bound_sq, args.cap))
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if not s.vectors:
        print("error: bound below first minimum", file=sys.stderr)
        return EXIT_BOUND
    result = successive_minima(s, expected_rank=basis.rank)
    report = RunReport("minima", _digest(text))
    report.lines += [
        f"# command: minima",
        f"# input: {report.input_digest}",
        "# minima_sq: " + " ".join(format_scalar(x)
                                   for x in result.minima_sq),
        f"# rank: {result.rank}",
        f"# partial: {'true' if result.partial else 'false'}",
    ]
    report.lines += render_lattice(result.witnesses, d)
    report.emit()
    if args.verify:
        oracle = greedy_minima_oracle(s)
        ok = oracle.minima_sq == result.minima_sq
        if ok and not result.partial:
            ok = minkowski_check(basis, result)
        if not ok:
            print("verification failed: oracle or Minkowski check",
                  file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def cmd_decompose(args) -> int:
    text = _read_input(args.file)
    d, _, rows = parse_lattice_file(text)
    try:
        basis = _basis_from_rows(rows)
        bound_sq = _bound_sq(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        s = enumerate_up_to(EnumerationRequest(basis, bound_sq, args.cap))
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if not s.vectors or not lattice_equal(s, basis):
        got = len({v for v in s.vectors})
        print(
            f"error: insufficient bound: the {got} enumerated vectors do "
            f"not generate the full rank-{basis.rank} lattice",
            file=sys.stderr)
        return EXIT_BOUND
    decomp = orthogonal_decomposition(s, _params(args))
    report = RunReport("decompose", _digest(text))
    report.lines += [
        f"# command: decompose",
        f"# input: {report.input_digest}",
        f"# r: {decomp.r}",
        "# indices: " + " ".join(str(i) for i in decomp.indices),
    ]
    report.lines.append(f"{d} {len(decomp.grouped_basis)}")
    for j, comp in enumerate(decomp.components, start=1):
        report.lines.append(f"# component {j} rank {comp.rank}")
        report.lines.extend(format_vector(v) for v in comp.basis.vectors)
    report.emit()
    if args.verify:
        oracle = graph_decomposition_oracle(s, _params(args))
        if canonical_component_forms(decomp) != \
                canonical_component_forms(oracle):
            print("verification failed: graph oracle disagrees",
                  file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def random_instance(rng: random.Random, d: int, m: int, entry_range: int,
                    duplicates: bool) -> list[Vector]:
    """Random generator family; 'duplicates' draws all m vectors from a
    small pool so most insertions are localization-only."""

    def row() -> Vector:
        while True:
            v = tuple(Fraction(rng.randint(-entry_range, entry_range))
                      for _ in range(d))
            if not is_zero_vector(v):
                return v

    if duplicates:
        pool = [row() for _ in range(2 * d)]
        return [rng.choice(pool) for _ in range(m)]
    return [row() for _ in range(m)]


def bench_row(seed: int, d: int, m: int, entry_range: int,
              duplicates: bool, params: ReductionParams) -> dict:
    rng = random.Random(seed)
    gens = random_instance(rng, d, m, entry_range, duplicates)
    t0 = time.perf_counter()
    basis, trace = incremental_basis(gens, params)
    t1 = time.perf_counter()
    batch = mlll(gens, params)
    t2 = time.perf_counter()
    assert lattice_equal(basis, batch)
    lam1 = first_minimum_sq(basis, params)
    bsq = max(norm_sq(v) for v in gens)
    return {
        "seed": seed,
        "d": d,
        "m": m,
        "update_count": trace.update_count,
        "membership_tests": trace.localization_count,
        "theorem_bound": update_step_bound_value(basis.rank, bsq, lam1),
        "bound_holds": update_step_bound_holds(trace, basis.rank, bsq, lam1),
        "t_incremental": t1 - t0,
        "t_batch_mlll": t2 - t1,
    }


def cmd_bench(args) -> int:
    dims = [int(x) for x in args.dims.split(",")]
    counts = [int(x) for x in args.gen_counts.split(",")]
    params = _params(args)
    print("seed,d,m,update_count,theorem_bound,t_incremental,t_batch_mlll")
    idx = 0
    for d in dims:
        for m in counts:
            for _ in range(args.reps):
                seed = args.seed + 1009 * idx
                idx += 1
                row = bench_row(seed, d, m, args.entry_range,
                                args.duplicates, params)
                print(
                    f"{row['seed']},{row['d']},{row['m']},"
                    f"{row['update_count']},{row['theorem_bound']:.6f},"
                    f"{row['t_incremental']:.6f},{row['t_batch_mlll']:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latkit",
        description="Exact incremental lattice algorithms: basis, "
                    "successive minima, orthogonal decomposition.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bound=False):
        p.add_argument("--delta", default="3/4",
                       help="Lovász parameter (rational, default 3/4)")
        p.add_argument("--verify", action="store_true",
                       help="cross-check against the independent oracle")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="enumeration vector cap")
        if bound:
            p.add_argument("--bound-sq", help="squared norm bound (rational)")
            p.add_argument("--bound",
                           help="norm bound (rational; squared internally)")

    p = sub.add_parser("basis", help="incremental lattice basis")
    p.add_argument("file", help="lattice file ('-' for stdin)")
    p.add_argument("--trace", action="store_true",
                   help="print the localization/update trace and bound check")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("minima", help="successive minima")
    p.add_argument("file")
    common(p, bound=True)
    p.set_defaults(func=cmd_minima)

    p = sub.add_parser("decompose", help="orthogonal decomposition")
    p.add_argument("file")
    common(p, bound=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bench", help="incremental vs batch benchmark (CSV)")
    p.add_argument("--dims", default="4")
    p.add_argument("--gen-counts", default="50,100,200")
    p.add_argument("--entry-range", type=int, default=10)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--duplicates", action="store_true",
                   help="duplicates-heavy generator families")
    p.add_argument("--delta", default="3/4")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LatticeFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
