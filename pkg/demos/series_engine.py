"""The exact series engine on its own: radicals, inverses, and a functional equation."""
from fractions import Fraction

from ddyck.series import BivariateSeries

N = 10
x = BivariateSeries.x(N)

# Catalan numbers from (1 - sqrt(1 - 4x)) / 2x
cat = (1 - (1 - 4 * x).sqrt()).div_x() * Fraction(1, 2)
print("Catalan  ", cat.at_marker(1))

# Motzkin numbers from the fixed point M = 1 + xM + x^2 M^2
M = BivariateSeries.constant(0, N)
for _ in range(N + 1):
    M = 1 + x * M + x * x * M * M
print("Motzkin  ", M.at_marker(1))

# Fibonacci from a rational function
print("Fibonacci", (x / (1 - x - x * x)).at_marker(1))
