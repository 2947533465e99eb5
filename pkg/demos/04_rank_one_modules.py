#!/usr/bin/env python3
"""Finite dimensional modules at rank one: weights, cones, and matching.

Inducing a character of the polynomial part gives a module with basis
indexed by the group; its weights are the orbit of the inducing point.  The
antidominant cone sorts modules into tempered and essentially-discrete-
series classes, and peeling restriction multiplicities matches the tempered
real-weight modules with the irreducible characters of the finite group.
"""

from fractions import Fraction

from gradedhecke import build_preset, classify_rank_one, induce_from_character, \
    is_essentially_discrete_series, is_tempered, restrict_to_group_algebra, \
    weight_decomposition, zeta_rank_one

H = build_preset("A1", k=["1"], mode="r1")
print("algebra:", H.describe())

print("\nInduction from the regular point 3:")
mod = induce_from_character(H, (Fraction(3),))
for datum in weight_decomposition(mod):
    print(f"  weight {datum.weight[0]} with multiplicity {datum.multiplicity}")

print("\nInduction from 0 (the weight picks up multiplicity two):")
ind0 = induce_from_character(H, (Fraction(0),))
print("  x acts by", ind0.x[0])
print("  weights:", [(str(d.weight[0]), d.multiplicity)
                     for d in weight_decomposition(ind0)])
print("  tempered:", is_tempered(ind0),
      "/ essentially discrete series:", is_essentially_discrete_series(ind0))

print("\nRestriction to the group algebra:")
table, mults = restrict_to_group_algebra(ind0)
for block, m in zip(table.blocks, mults):
    print(f"  {block.label()}: multiplicity {m}")

print("\nThe complete list with real weights:")
for rec in classify_rank_one(H):
    print("  " + rec.summary())

print("\nPeeling the restriction matrix yields the canonical matching:")
_, zeta, rows = zeta_rank_one(H)
print("  restriction rows:", rows)
for label, block in zeta.items():
    print(f"  {label} -> {block.label()}")

print("\nAt k = 0 the matching degenerates to the identity on characters:")
H0 = build_preset("A1", k=["0"], mode="r1")
_, zeta0, _ = zeta_rank_one(H0)
for label, block in zeta0.items():
    print(f"  {label} -> {block.label()}")
