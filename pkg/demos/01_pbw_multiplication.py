#!/usr/bin/env python3
"""Normal forms and straightening, starting from the rank-one algebra.

Every element is a finite sum N_w * p_w with the group part on the left and
an exact polynomial on the right.  Multiplication moves polynomials through
group generators, picking up divided-difference corrections weighted by the
parameter function and the degree-two variable r.
"""

from fractions import Fraction

from gradedhecke import build_preset, parse_element

H = build_preset("A1", k=["1"])
print("algebra:", H.describe())

x, Ns, r = H.x(0), H.N(0), H.r()

print("\nThe defining exchange move, with k = 1:")
print("  x * N[s]      =", (x * Ns).to_string())
print("  N[s] * x      =", (Ns * x).to_string())
print("  N[s] * N[s]   =", (Ns * Ns).to_string())

print("\nThe same computation through the expression grammar:")
print("  parse('x * N[s]') ->", parse_element(H, "x * N[s]").to_string())

print("\nHigher powers pick up nested corrections:")
print("  x^2 * N[s]    =", (x * x * Ns).to_string())
print("  x^3 * N[s]    =", (x * x * x * Ns).to_string())

print("\nWith the parameter set to zero the corrections disappear")
H0 = build_preset("A1", k=["0"], mode="k0")
print("  (crossed product) x * N[s] =",
      (H0.x(0) * H0.N(0)).to_string())

print("\nA twisted example: the hexagonal system with a diagram flip and")
print("the nontrivial order-two cocycle, where N[g1]^2 = -N[e]:")
T = build_preset("A2flip-tw")
g = T.N(T.group.gamma_element(1))
print("  N[g1] * N[g1] =", (g * g).to_string())
a = parse_element(T, "N[s1*g1] * (x1 - x2)")
b = parse_element(T, "N[s2] * x1 + r")
print("  a             =", a.to_string())
print("  b             =", b.to_string())
print("  a * b         =", (a * b).to_string())
print("  (a*b)*a == a*(b*a):", (a * b) * a == a * (b * a))

print("\nGradings: group terms sit in degree 0, every variable in degree 2")
elt = T.x(0) * T.r() + T.N(0) * T.x(1) * T.x(1) * T.x(0).scale(Fraction(1, 2))
grading = T.grading(elt)
for degree, part in grading.components.items():
    print(f"  degree {degree}: {part.to_string()}")
