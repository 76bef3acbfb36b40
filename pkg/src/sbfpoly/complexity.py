"""Operation counting and benchmarks: combinatorial method vs. triangle.

Op counts are deterministic and are the primary metric; wall times are
medians over repetitions and only illustrative.

CSV header (``CSV_HEADER``)::

    n,index_set,method,measured_ops,formula_ops,wall_time_ns

``index_set`` is semicolon-separated (``2;3;4``); ``formula_ops`` is empty
when no closed form applies.
"""
from __future__ import annotations

import csv
import io
import math
import statistics
import time
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .core import ReducedVector
from .baseline import triangle_transform
from .lucas import cost_bit_length
from .transform import carrier_from_set

__all__ = [
    "COMBINATORIAL",
    "TRIANGLE",
    "CSV_HEADER",
    "BenchRow",
    "TableRow",
    "REFERENCE_TABLE",
    "s1_formula",
    "st_reference",
    "measure_combinatorial",
    "measure_triangle",
    "bench_suite",
    "op_ratios",
    "table_comparison",
    "emit_csv",
    "parse_csv",
    "emit_table_csv",
    "emit_svg_plot",
]

COMBINATORIAL = "combinatorial"
TRIANGLE = "triangle"
CSV_HEADER = ("n", "index_set", "method", "measured_ops", "formula_ops", "wall_time_ns")


@dataclass(frozen=True)
class BenchRow:
    n: int
    index_set: tuple[int, ...]
    method: str
    measured_ops: int
    formula_ops: int | None
    wall_time_ns: int

    def __post_init__(self):
        if self.measured_ops < 0 or self.wall_time_ns < 0:
            raise ValueError("op counts and wall times are nonnegative")
        if self.method not in (COMBINATORIAL, TRIANGLE):
            raise ValueError(f"unknown method {self.method!r}")


def s1_formula(n: int, b: int) -> int:
    """``(ceil(log2 b) + 1) * (n - b)``, the per-bit cost of one degree.

    ``b == 0`` has no closed form; one comparison per index is charged
    (``n``) and a warning is issued.
    """
    if not 0 <= b <= n:
        raise ValueError(f"need 0 <= b <= n, got b={b}, n={n}")
    if b == 0:
        warnings.warn("s1_formula is undefined for b=0; returning the convention cost n",
                      stacklevel=2)
        return n
    return cost_bit_length(b) * (n - b)


def st_reference(n: int) -> int:
    """Triangle XOR count ``n (n + 1) / 2``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * (n + 1) // 2


def _timed(fn: Callable[[], object], repetitions: int, warmup: int) -> tuple[object, int]:
    for _ in range(warmup):
        fn()
    samples = []
    result = None
    for _ in range(max(repetitions, 1)):
        t0 = time.perf_counter_ns()
        result = fn()
        samples.append(time.perf_counter_ns() - t0)
    return result, int(statistics.median(samples))


def measure_combinatorial(
    n: int, index_set: Sequence[int], repetitions: int = 1, warmup: int = 0
) -> BenchRow:
    """Run ``carrier_from_set`` and record checks + XORs.

    For a singleton ``{b}`` with ``b >= 1`` the closed form is filled in and
    the measured comparison count must equal it.
    """
    index_set = tuple(index_set)
    res, wall = _timed(lambda: carrier_from_set(n, index_set), repetitions, warmup)
    formula = None
    if len(index_set) == 1 and index_set[0] >= 1:
        formula = s1_formula(n, index_set[0])
        if res.ops.primitive_checks != formula:
            raise AssertionError(
                f"measured {res.ops.primitive_checks} checks, closed form gives {formula}")
    return BenchRow(n, index_set, COMBINATORIAL, res.ops.total, formula, wall)


def measure_triangle(
    n: int, index_set: Sequence[int], repetitions: int = 1, warmup: int = 0
) -> BenchRow:
    index_set = tuple(index_set)
    v = ReducedVector.from_indices(n, index_set)
    run, wall = _timed(lambda: triangle_transform(v), repetitions, warmup)
    return BenchRow(n, index_set, TRIANGLE, run.xor_ops, st_reference(n), wall)


IndexSets = Union[Sequence[int], Callable[[int], Sequence[int]]]


def bench_suite(
    ns: Iterable[int],
    index_sets: IndexSets,
    repetitions: int = 3,
    warmup: int = 1,
) -> list[BenchRow]:
    """One combinatorial and one triangle row per ``n``.

    ``index_sets`` is either a fixed set or a callable ``n -> set``.
    """
    rows = []
    for n in ns:
        chosen = index_sets(n) if callable(index_sets) else index_sets
        rows.append(measure_combinatorial(n, chosen, repetitions, warmup))
        rows.append(measure_triangle(n, chosen, repetitions, warmup))
    return rows


def op_ratios(rows: Sequence[BenchRow], method: str) -> list[float]:
    """Successive ``measured_ops`` ratios for one method, ordered by ``n``.

    A zero-cost predecessor gives ``inf``.
    """
    ops = [r.measured_ops for r in sorted(rows, key=lambda r: r.n) if r.method == method]
    return [b / a if a else math.inf for a, b in zip(ops, ops[1:])]


# (n, polynomial numbers, published combinatorial count, published triangle count)
REFERENCE_TABLE: tuple[tuple[int, range, int, int], ...] = (
    (10, range(2, 5), 53, 55),
    (20, range(4, 9), 235, 210),
    (30, range(4, 10), 483, 465),
    (40, range(8, 15), 836, 820),
    (50, range(11, 19), 1266, 1275),
    (60, range(16, 25), 1840, 1830),
    (70, range(16, 26), 2520, 2485),
    (80, range(16, 27), 3295, 3240),
    (90, range(16, 28), 4765, 4095),
    (100, range(16, 29), 5130, 5050),
    (255, range(32, 58), 32988, 32640),
    (511, range(64, 108), 131355, 130816),
    (1023, range(128, 204), 521960, 523776),
    (2047, range(256, 391), 2095866, 2096128),
    (4095, range(512, 754), 8381660, 8386560),
)


@dataclass(frozen=True)
class TableRow:
    """Measured counts next to the published reference values.

    The published combinatorial counts are not reproduced by any closed form
    available here; both measured decompositions are given for comparison.
    """

    n: int
    index_set: tuple[int, ...]
    reference_s2: int
    reference_st: int
    measured_checks: int
    measured_xors: int
    measured_st: int

    @property
    def measured_s2(self) -> int:
        return self.measured_checks + self.measured_xors


def table_comparison() -> list[TableRow]:
    rows = []
    for n, degrees, ref_s2, ref_st in REFERENCE_TABLE:
        ops = carrier_from_set(n, list(degrees)).ops
        tri = triangle_transform(ReducedVector.from_indices(n, degrees))
        rows.append(TableRow(n, tuple(degrees), ref_s2, ref_st,
                             ops.primitive_checks, ops.accumulation_xors, tri.xor_ops))
    return rows


def _fmt_set(index_set: Sequence[int]) -> str:
    return ";".join(str(i) for i in index_set)


def emit_csv(rows: Iterable[BenchRow]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([r.n, _fmt_set(r.index_set), r.method, r.measured_ops,
                         "" if r.formula_ops is None else r.formula_ops, r.wall_time_ns])
    return buf.getvalue().encode()


def parse_csv(data: bytes | str) -> list[BenchRow]:
    text = data.decode() if isinstance(data, bytes) else data
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    rows = []
    for rec in reader:
        n, idx, method, ops, formula, wall = rec
        rows.append(BenchRow(
            int(n),
            tuple(int(i) for i in idx.split(";")) if idx else (),
            method,
            int(ops),
            int(formula) if formula else None,
            int(wall),
        ))
    return rows


def emit_table_csv(rows: Iterable[TableRow]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "index_set", "reference_s2", "measured_checks", "measured_xors",
                     "measured_s2", "reference_st", "measured_st"])
    for r in rows:
        writer.writerow([r.n, _fmt_set(r.index_set), r.reference_s2, r.measured_checks,
                         r.measured_xors, r.measured_s2, r.reference_st, r.measured_st])
    return buf.getvalue().encode()


_COLORS = {COMBINATORIAL: "#1f77b4", TRIANGLE: "#d62728"}


def emit_svg_plot(rows: Sequence[BenchRow], width: int = 640, height: int = 420) -> bytes:
    """Log-log chart of ``measured_ops`` against ``n``, one polyline per method."""
    pts = [(r.n, r.measured_ops, r.method) for r in rows if r.n > 0 and r.measured_ops > 0]
    if not pts:
        raise ValueError("nothing to plot: need rows with positive n and op counts")
    left, right, top, bottom = 70, 20, 20, 50
    lx = [math.log10(p[0]) for p in pts]
    ly = [math.log10(p[1]) for p in pts]
    x0, x1 = min(lx), max(lx)
    y0, y1 = min(ly), max(ly)
    x1 = x1 if x1 > x0 else x0 + 1
    y1 = y1 if y1 > y0 else y0 + 1

    def sx(v):
        return left + (math.log10(v) - x0) / (x1 - x0) * (width - left - right)

    def sy(v):
        return height - bottom - (math.log10(v) - y0) / (y1 - y0) * (height - top - bottom)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{left}" y1="{height - bottom}" x2="{width - right}" '
        f'y2="{height - bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{height - bottom}" stroke="black"/>',
        f'<text x="{(width + left) / 2:.1f}" y="{height - 12}" text-anchor="middle" '
        f'font-size="13">n (variables, log scale)</text>',
        f'<text x="16" y="{(height - bottom + top) / 2:.1f}" text-anchor="middle" '
        f'font-size="13" transform="rotate(-90 16 {(height - bottom + top) / 2:.1f})">'
        f'operations (log scale)</text>',
    ]
    for d in range(math.floor(x0), math.ceil(x1) + 1):
        if x0 <= d <= x1:
            x = sx(10 ** d)
            out.append(f'<text x="{x:.1f}" y="{height - bottom + 16}" text-anchor="middle" '
                       f'font-size="11">1e{d}</text>')
    for d in range(math.floor(y0), math.ceil(y1) + 1):
        if y0 <= d <= y1:
            y = sy(10 ** d)
            out.append(f'<text x="{left - 6}" y="{y + 4:.1f}" text-anchor="end" '
                       f'font-size="11">1e{d}</text>')
    methods = sorted({p[2] for p in pts})
    for k, method in enumerate(methods):
        series = sorted((p[0], p[1]) for p in pts if p[2] == method)
        coords = " ".join(f"{sx(n):.1f},{sy(ops):.1f}" for n, ops in series)
        color = _COLORS.get(method, "black")
        out.append(f'<polyline class="{method}" fill="none" stroke="{color}" '
                   f'stroke-width="2" points="{coords}"/>')
        out.append(f'<text x="{left + 10}" y="{top + 14 + 16 * k}" fill="{color}" '
                   f'font-size="12">{method}</text>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()
