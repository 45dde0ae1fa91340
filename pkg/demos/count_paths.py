"""How the valley restriction thins out the Dyck paths.

For each d, count d-Dyck paths by semi-length.  Large negative d approaches
the Catalan numbers; the first |d| + 3 terms already agree with them.
"""
from ddyck.genfuncs import series_L_nonneg, solve_Le_system
from ddyck.recurrences import catalan

N = 12

rows = {"-inf": [catalan(n) for n in range(1, N + 1)]}
for e in (4, 3, 2, 1):
    rows[str(-e)] = solve_Le_system(e, N).L.at_marker(1)[1:]
for d in (0, 1, 2):
    rows[str(d)] = series_L_nonneg(d, N).at_marker(1)[1:]

width = len(str(catalan(N)))
print("d     " + " ".join(str(n).rjust(width) for n in range(1, N + 1)))
for d, vals in rows.items():
    print(d.ljust(5), " ".join(str(v).rjust(width) for v in vals))

# where each negative d first falls below Catalan
for e in (1, 2, 3, 4):
    first = next(n for n, v in enumerate(rows[str(-e)], 1) if v != catalan(n))
    print(f"d = {-e}: matches Catalan up to n = {first - 1}")
