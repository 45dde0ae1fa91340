"""Peak and area distributions for d = -1, from the series and by brute force."""
from ddyck.enumeration import PathFilter, statistic_distribution
from ddyck.genfuncs import series_L_closed_minus1, solve_area_system

N = 7
L = series_L_closed_minus1(N)
for n in range(1, N + 1):
    print(f"x^{n}: {L.coefficient(n).format('y')}")

area = solve_area_system(N).A
print()
n = 5
hist = area.coefficient(n).as_dict()
brute = statistic_distribution(n, PathFilter(d=-1), "area")
print(f"area histogram at n = {n} (series == enumeration: {hist == brute})")
for k, c in hist.items():
    print(f"  area {k:2d}  {'#' * c}")

tot = area.marker_derivative_at(1)
print("total area a(n):", " ".join(str(v) for v in tot[1:]))
