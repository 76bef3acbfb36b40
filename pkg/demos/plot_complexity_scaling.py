"""
Linear vs. quadratic operation counts
-------------------------------------

For a single degree ``b`` the combinatorial method spends
``(ceil(log2 b) + 1) * (n - b)`` bit comparisons; the transeunt triangle
always spends ``n (n + 1) / 2`` XORs.  Doubling ``n`` roughly doubles the
first and quadruples the second.  Writes ``scaling.csv``, ``scaling.svg`` and
``table.csv`` to the working directory.
"""
from pathlib import Path

from sbfpoly.complexity import (
    COMBINATORIAL,
    TRIANGLE,
    bench_suite,
    emit_csv,
    emit_svg_plot,
    emit_table_csv,
    op_ratios,
    table_comparison,
)

ns = [32 * 2 ** k for k in range(8)]
rows = bench_suite(ns, [16], repetitions=3)
for r in rows:
    print(f"{r.method:>13} n={r.n:5d} ops={r.measured_ops:9d}")
print("combinatorial ratios:", [round(x, 3) for x in op_ratios(rows, COMBINATORIAL)])
print("triangle ratios:     ", [round(x, 3) for x in op_ratios(rows, TRIANGLE)])

Path("scaling.csv").write_bytes(emit_csv(rows))
Path("scaling.svg").write_bytes(emit_svg_plot(rows))

###############################################################################
# Multi-degree sets near the break-even point.  The reference combinatorial
# counts do not follow from any closed form we have, so the measured
# comparisons and XORs are listed next to them without a claim of agreement.

table = table_comparison()
for t in table:
    print(f"n={t.n:5d} |B|={len(t.index_set):3d} reference={t.reference_s2:8d} "
          f"measured={t.measured_checks:8d}+{t.measured_xors:7d}  triangle={t.measured_st:8d}")
Path("table.csv").write_bytes(emit_table_csv(table))
