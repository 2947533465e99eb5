#!/usr/bin/env python3
"""Homological probes: Koszul complexes, Ext tables, dual dimensions.

The polynomial part of the algebra carries the standard Koszul resolution;
pushing it through adjunctions computes self-extensions of induced modules
(binomial numbers, nonzero all the way up to dim t + 1) and the graded
dimensions of the Ext algebra of the degree-zero part, which see only the
group order, never the parameters.
"""

from fractions import Fraction

from gradedhecke import build_preset, ext_self_induced, koszul_dual_dims, \
    koszul_resolution, projective_resolution_H0

print("The Koszul resolution on two variables (x, r):")
complex_ = koszul_resolution(2)
print("  ranks:", complex_.ranks)
evaluated = complex_.evaluate((Fraction(3), Fraction(5)))
print("  homology at a generic point:", evaluated.homology_dims())

print("\nSelf-extensions of induced modules at regular weights:")
for name, weight in (("A1", (Fraction(2),)), ("B2", (Fraction(1), Fraction(3)))):
    H = build_preset(name, mode="r1")
    table = ext_self_induced(H, weight)
    print(f"  {name} at {tuple(str(c) for c in weight)}: {table.to_json()}")
print("  (rows of binomial coefficients: the top degree dim t + 1 never dies)")

print("\nThe same dimensions are blind to sign twists of the parameters:")
for kvals in (["2", "1"], ["-2", "1"], ["2", "-1"]):
    H = build_preset("B2", k=kvals, mode="r1")
    print(f"  k = {kvals}: {ext_self_induced(H, (Fraction(2), Fraction(5))).as_tuple()}")

print("\nGraded dimensions of the Ext algebra of the degree-zero part:")
for name in ("A1", "A2", "A2flip-tw"):
    H = build_preset(name)
    print(f"  {name}: {koszul_dual_dims(H)}")
print("  (binomials times the group order, independent of k and the cocycle)")

print("\nThe free resolution generating those numbers:")
res = projective_resolution_H0(build_preset("A2"))
print("  ranks over the algebra:", res.ranks)
print("  every differential entry is a degree-two generator; d.d = 0 holds")
res.validate()
print("  validated.")
