"""r(n) grows like rho^-n n^-3/2.  The estimate overshoots for moderate n
and closes in slowly, since a pole of the rational prefactor sits just
below rho."""
import mpmath

from ddyck.asymptotics import asymptotic_table, compute_rho

data = compute_rho(30)
print("rho       =", mpmath.nstr(data.rho, 20))
print("1/rho     =", mpmath.nstr(1 / data.rho, 20))
print("amplitude =", mpmath.nstr(data.amplitude, 12))
print()
for row in asymptotic_table([10, 25, 50, 100, 200, 400, 800], precision=30):
    ratio = row["estimate"] / row["exact"]
    print(f"n = {row['n']:4d}   estimate/exact = {mpmath.nstr(ratio, 8)}")
