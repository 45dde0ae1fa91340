"""Decompose a few (-1)-Dyck paths into pyramids, empties and grounded pieces."""
from ddyck import parse_path, phi, phi_inverse
from ddyck.bijection import component_kind, minus1_valley_positions
from ddyck.paths import valley_vector

samples = ["UUDUDDUD", "UDUUDUDDUUUUDUUDUDDUUDDDUDDD", "UUDDUUDUDD", "UUUDDUDUDD"]

for s in samples:
    p = parse_path(s)
    enc = phi_inverse(p)
    print(s)
    print("  valleys       ", valley_vector(p))
    print("  (-1)-valleys at", minus1_valley_positions(p))
    print("  exponents     ", enc.exponents)
    for c in enc.components:
        print(f"  component {c.steps or '(empty)':<12} {component_kind(c)}")
    assert phi(enc) == p
