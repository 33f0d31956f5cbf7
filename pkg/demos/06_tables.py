"""Regenerate the bundled nullity tables and diff them cell for cell.

Table 1: base GF(3), exponents up to 4 (121 functions).
Table 2: base GF(5), exponents up to 3 (156 functions).
Each row lists the monic coefficient vector, the splitting exponent s, and
(m, l_m) for every divisor m of s.
"""

import time

from quadsums import diff_reference, generate_table, reference_path

for p, amax, name in [(3, 4, "table1"), (5, 3, "table2")]:
    t0 = time.monotonic()
    rows = generate_table(p, amax)
    dt = time.monotonic() - t0
    rep = diff_reference(rows, reference_path(name))
    print(f"GF({p}), exponents <= {amax}: {len(rows)} rows in {dt:.2f}s -> {rep}")

print("\nfirst rows of the GF(3) table:")
for row in generate_table(3, 1):
    print("  ", row.csv_line())

print("\nrows with the largest splitting exponents over GF(5):")
rows = generate_table(5, 3)
for row in sorted(rows, key=lambda r: -r.s)[:5]:
    print("  ", row.csv_line())
