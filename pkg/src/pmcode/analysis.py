"""Reporting, certification, and throughput measurement.

The bulk kernels here process whole stripe batches with numpy: one stripe is
a column of a (B x S) array, and every generator row is applied as a gather
plus accumulate over its nonzero entries, so encoding cost tracks the
generator's nonzero count.  The same kernels back the command-line encode,
repair, and decode paths.
"""

from __future__ import annotations

import itertools
import math
import random
import statistics
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import (
    LinearCode,
    PmVandermondeCode,
    random_message,
    validate_properties,
)
from .errors import DimensionMismatch, PmCodeError
from .linalg import Matrix


# ---------------------------------------------------------------------------
# sparsity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SparsityReport:
    label: str
    n: int
    k: int
    d: int
    q: int
    row_nonzeros: tuple
    per_node_max: tuple
    zero_fraction: float
    parity_zero_fraction: float
    pattern: tuple  # one '.'/'*' string per generator row

    def to_text(self) -> str:
        lines = [
            f"label: {self.label}",
            f"params: [{self.n},{self.k},{self.d}] q={self.q}",
            f"zero_fraction: {self.zero_fraction:.6f}",
            f"parity_zero_fraction: {self.parity_zero_fraction:.6f}",
            f"max_row_nonzeros: {max(self.row_nonzeros)}",
            f"row_nonzeros: {' '.join(str(c) for c in self.row_nonzeros)}",
            f"per_node_max: {' '.join(str(c) for c in self.per_node_max)}",
            "pattern:",
        ]
        lines.extend("  " + row for row in self.pattern)
        return "\n".join(lines) + "\n"

    def to_tsv_rows(self) -> list[str]:
        alpha = len(self.row_nonzeros) // self.n
        return [
            "\t".join(
                [
                    self.label,
                    f"{self.n}/{self.k}/{self.d}/{self.q}",
                    str(t // alpha),
                    str(t % alpha),
                    str(nnz),
                ]
            )
            for t, nnz in enumerate(self.row_nonzeros)
        ]


def sparsity_report(code: LinearCode) -> SparsityReport:
    p = code.params
    g = code.generator
    counts = g.nonzeros_per_row()
    alpha = p.alpha
    per_node = tuple(
        max(counts[i * alpha : (i + 1) * alpha]) for i in range(p.n)
    )
    total = g.rows * g.cols
    zeros = total - sum(counts)
    parity_rows = g.data[p.k * alpha :]
    parity_total = len(parity_rows) * g.cols
    parity_zeros = sum(1 for row in parity_rows for x in row if x == 0)
    pattern = tuple(
        "".join("*" if x else "." for x in row) for row in g.data
    )
    return SparsityReport(
        label=code.label,
        n=p.n,
        k=p.k,
        d=p.d,
        q=p.field.order,
        row_nonzeros=tuple(counts),
        per_node_max=per_node,
        zero_fraction=zeros / total,
        parity_zero_fraction=parity_zeros / parity_total,
        pattern=pattern,
    )


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    mode: str      # "exhaustive", "sampled", or "skipped"
    cases: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class CertificationRecord:
    label: str
    n: int
    k: int
    d: int
    q: int
    seed: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_text(self) -> str:
        lines = [
            f"label: {self.label}",
            f"params: [{self.n},{self.k},{self.d}] q={self.q}",
            f"seed: {self.seed}",
            f"passed: {self.passed}",
        ]
        for c in self.checks:
            status = "ok" if c.ok else f"FAILED {list(c.failures[:5])}"
            lines.append(f"check {c.name}: {c.mode} cases={c.cases} {status}")
        return "\n".join(lines) + "\n"

    def to_tsv_rows(self) -> list[str]:
        return [
            "\t".join(
                [self.label, c.name, c.mode, str(c.cases), str(len(c.failures)), "ok" if c.ok else "fail"]
            )
            for c in self.checks
        ]


def underlying_encoding(code: LinearCode):
    """Walk wrapper chains down to the direct construction, if there is one."""
    seen = set()
    while id(code) not in seen:
        seen.add(id(code))
        if isinstance(code, PmVandermondeCode):
            return code.enc
        code = getattr(code, "base", None) or getattr(code, "parent", None) or code
    return None


def _subset_cases(n: int, size: int, limit: int, samples: int, rng: random.Random):
    total = math.comb(n, size)
    if total <= limit:
        return "exhaustive", list(itertools.combinations(range(n), size))
    return "sampled", [tuple(sorted(rng.sample(range(n), size))) for _ in range(samples)]


def certify(
    code: LinearCode,
    seed: int = 0,
    subset_limit: int = 1000,
    samples: int = 50,
    decode_samples: int = 10,
    repair_limit: int = 1000,
    property_limit: int = 100_000,
) -> CertificationRecord:
    """Re-derive the code's guarantees from scratch and report every failure.

    Checks: construction properties (when an underlying encoding matrix
    exists), data reconstruction from k-node subsets (rank plus decode
    round-trips), exact repair from d-helper sets with exactly d transferred
    scalars, and the systematic layout of the top block when one is claimed.
    """
    p = code.params
    rng = random.Random(seed)
    checks = []

    enc = underlying_encoding(code)
    if enc is not None:
        failures = ()
        try:
            validate_properties(
                enc.params, enc.phi, list(enc.lam),
                exhaustive_limit=property_limit, samples=samples, seed=seed,
            )
        except PmCodeError as exc:
            failures = (str(exc),)
        checks.append(CheckResult("construction-properties", "recomputed", 3, failures))

    # reconstruction: every k-subset's stacked block must have rank B
    mode, cases = _subset_cases(p.n, p.k, subset_limit, samples, rng)
    bad = []
    for ids in cases:
        block = Matrix.vstack([code.node_block(i) for i in ids])
        if block.rank() < p.B:
            bad.append(ids)
    checks.append(CheckResult("k-subset-rank", mode, len(cases), tuple(bad)))

    m = random_message(p, rng)
    stored = code.stored_rows(m)

    bad = []
    decode_cases = cases[:decode_samples] if len(cases) > decode_samples else cases
    for ids in decode_cases:
        if code.decode(ids, [stored[i] for i in ids]) != m:
            bad.append(ids)
    checks.append(CheckResult("decode-roundtrip", mode, len(decode_cases), tuple(bad)))

    # repair: exact rebuild, d scalars moved
    total_repairs = p.n * math.comb(p.n - 1, p.d)
    bad = []
    if total_repairs <= repair_limit:
        mode = "exhaustive"
        repair_cases = [
            (f, helpers)
            for f in range(p.n)
            for helpers in itertools.combinations([x for x in range(p.n) if x != f], p.d)
        ]
    else:
        mode = "sampled"
        repair_cases = []
        for _ in range(samples):
            f = rng.randrange(p.n)
            helpers = tuple(sorted(rng.sample([x for x in range(p.n) if x != f], p.d)))
            repair_cases.append((f, helpers))
    for f, helpers in repair_cases:
        bundle = code.run_repair(stored, f, helpers)
        if list(bundle.rebuilt) != stored[f] or len(bundle.symbols) != p.d:
            bad.append((f, helpers))
    checks.append(CheckResult("repair-exact", mode, len(repair_cases), tuple(bad)))

    perm = getattr(code, "column_permutation", None)
    if perm is not None or stored_is_systematic_claimed(code):
        bad = []
        for t in range(p.B):
            row = code.generator.data[t]
            expect = perm[t] if perm is not None else t
            if any(x != (1 if s == expect else 0) for s, x in enumerate(row)):
                bad.append(t)
                if len(bad) >= 5:
                    break
        checks.append(CheckResult("systematic-top-block", "exhaustive", p.B, tuple(bad)))

    return CertificationRecord(
        label=code.label, n=p.n, k=p.k, d=p.d, q=p.field.order, seed=seed, checks=tuple(checks),
    )


def stored_is_systematic_claimed(code: LinearCode) -> bool:
    from .construct import ShortenedCode

    return isinstance(code, ShortenedCode)


# ---------------------------------------------------------------------------
# bulk kernels
# ---------------------------------------------------------------------------

_MUL_TABLES: dict = {}


def gf256_mul_table(field) -> np.ndarray:
    """256x256 uint8 product table, cached per modulus polynomial."""
    table = _MUL_TABLES.get(field.poly)
    if table is None:
        exp = np.array(field.exp + field.exp, dtype=np.uint8)  # doubled: no mod needed
        log = np.array([0] + [field.log[a] for a in range(1, 256)], dtype=np.int64)
        table = exp[log[:, None] + log[None, :]]
        table[0, :] = 0
        table[:, 0] = 0
        _MUL_TABLES[field.poly] = table
    return table


def _row_terms(mat: Matrix, skip_zeros: bool) -> list[list[tuple[int, int]]]:
    if skip_zeros:
        return [[(j, x) for j, x in enumerate(row) if x] for row in mat.data]
    return [list(enumerate(row)) for row in mat.data]


def apply_rows_bulk(field, mat: Matrix, data: np.ndarray, skip_zeros: bool = True) -> np.ndarray:
    """mat @ data over the field, data columns being independent stripes."""
    if data.shape[0] != mat.cols:
        raise DimensionMismatch(f"data has {data.shape[0]} rows, matrix wants {mat.cols}")
    terms = _row_terms(mat, skip_zeros)
    if field.kind == "binary8":
        table = gf256_mul_table(field)
        out = np.zeros((mat.rows, data.shape[1]), dtype=np.uint8)
        for r, row_terms in enumerate(terms):
            acc = out[r]
            for j, c in row_terms:
                if c == 1:
                    acc ^= data[j]
                else:
                    acc ^= table[c][data[j]]
        return out
    q = field.q
    # keep partial sums below 2^62 before reducing
    stride = max(1, (1 << 62) // (q * q))
    out = np.zeros((mat.rows, data.shape[1]), dtype=np.int64)
    for r, row_terms in enumerate(terms):
        acc = out[r]
        since_mod = 0
        for j, c in row_terms:
            acc += c * data[j]
            since_mod += 1
            if since_mod >= stride:
                acc %= q
                since_mod = 0
        acc %= q
    return out


def encode_stripes(code: LinearCode, data: np.ndarray, skip_zeros: bool = True) -> np.ndarray:
    """All node contents for a (B x S) stripe batch: (n*alpha x S)."""
    return apply_rows_bulk(code.params.field, code.generator, data, skip_zeros)


def random_stripes(field, rows: int, stripes: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    if field.kind == "binary8":
        return rng.integers(0, 256, size=(rows, stripes), dtype=np.uint8)
    return rng.integers(0, field.q, size=(rows, stripes), dtype=np.int64)


# ---------------------------------------------------------------------------
# benchmark
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BenchResult:
    label: str
    n: int
    k: int
    d: int
    q: int
    stripes: int
    message_bytes: int
    reps: int
    seconds_median: float
    seconds_all: tuple
    throughput_mib_s: float
    generator_nonzeros: int
    parity_nonzeros: int

    def to_text(self) -> str:
        return (
            f"label: {self.label}\n"
            f"params: [{self.n},{self.k},{self.d}] q={self.q}\n"
            f"stripes: {self.stripes}\n"
            f"message_bytes: {self.message_bytes}\n"
            f"reps: {self.reps}\n"
            f"seconds_median: {self.seconds_median:.6f}\n"
            f"seconds_all: {' '.join(f'{s:.6f}' for s in self.seconds_all)}\n"
            f"throughput_mib_s: {self.throughput_mib_s:.3f}\n"
            f"generator_nonzeros: {self.generator_nonzeros}\n"
            f"parity_nonzeros: {self.parity_nonzeros}\n"
        )

    def to_tsv_row(self) -> str:
        return "\t".join(
            [
                self.label,
                f"{self.n}/{self.k}/{self.d}/{self.q}",
                str(self.stripes),
                str(self.message_bytes),
                f"{self.seconds_median:.6f}",
                f"{self.throughput_mib_s:.3f}",
                str(self.parity_nonzeros),
            ]
        )


def _symbol_bytes(field) -> int:
    return 1 if field.kind == "binary8" else 4


def parity_nonzeros(code: LinearCode) -> int:
    p = code.params
    return sum(
        sum(1 for x in row if x) for row in code.generator.data[p.k * p.alpha :]
    )


def predicted_speedup(sparse: LinearCode, dense: LinearCode) -> float:
    """Arithmetic-count model: encoding work scales with parity nonzeros."""
    return parity_nonzeros(dense) / parity_nonzeros(sparse)


def benchmark_encode(
    code: LinearCode,
    workload_mib: float = 64.0,
    reps: int = 5,
    seed: int = 0,
    skip_zeros: bool = True,
) -> BenchResult:
    """Median-of-reps single-threaded encode timing on a seeded workload.

    The workload is at least ``workload_mib`` of message data, padded up to
    whole stripes.  One warmup pass runs untimed.
    """
    p = code.params
    sym = _symbol_bytes(p.field)
    stripe_bytes = p.B * sym
    stripes = max(1, math.ceil(workload_mib * (1 << 20) / stripe_bytes))
    data = random_stripes(p.field, p.B, stripes, seed)
    encode_stripes(code, data, skip_zeros)  # warmup
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        encode_stripes(code, data, skip_zeros)
        times.append(time.perf_counter() - t0)
    med = statistics.median(times)
    message_bytes = stripes * stripe_bytes
    g = code.generator
    return BenchResult(
        label=code.label,
        n=p.n,
        k=p.k,
        d=p.d,
        q=p.field.order,
        stripes=stripes,
        message_bytes=message_bytes,
        reps=reps,
        seconds_median=med,
        seconds_all=tuple(times),
        throughput_mib_s=message_bytes / (1 << 20) / med if med > 0 else float("inf"),
        generator_nonzeros=sum(g.nonzeros_per_row()),
        parity_nonzeros=parity_nonzeros(code),
    )


def benchmark_pair(
    sparse: LinearCode,
    dense: LinearCode,
    workload_mib: float = 64.0,
    reps: int = 5,
    seed: int = 0,
) -> tuple[BenchResult, BenchResult, float, float]:
    """Benchmark a sparse code against its dense counterpart.

    Returns (sparse result, dense result, measured speedup, predicted
    speedup); the prediction is the parity nonzero-count ratio.
    """
    rs = benchmark_encode(sparse, workload_mib, reps, seed)
    rd = benchmark_encode(dense, workload_mib, reps, seed)
    measured = rd.seconds_median / rs.seconds_median
    return rs, rd, measured, predicted_speedup(sparse, dense)
