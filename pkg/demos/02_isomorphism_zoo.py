#!/usr/bin/env python3
"""Transporting elements between algebras with different parameters.

Four families of maps: the scaling isomorphisms (rescale the coordinates,
divide the parameters), the two canonical involutions, the sign-character
twists phi_eps (flip the parameter on chosen reflection classes), and the
specialization r -> 1 onto the filtered algebra with its crossed-product
limit.
"""

from fractions import Fraction

from gradedhecke import build_preset

B2 = build_preset("B2", k=["-2", "3"])
print("start:", B2.describe())

a = B2.x(0) * B2.N(0) + B2.r() * B2.N(1)
print("\nelement a =", a.to_string())

print("\nScaling by z = 3 divides every parameter by 3:")
image = B2.scale_iso(Fraction(3), a)
print("  lands in", image.algebra.describe())
print("  m_3(a) =", image.to_string())
back = image.algebra.scale_iso(Fraction(1, 3), image, target=B2)
print("  round trip recovers a:", back == a)

print("\nThe two involutions:")
print("  IM(a)  =", B2.im_involution(a).to_string())
print("  sgn(a) =", B2.sgn_involution(a).to_string())
print("  IM(IM(a)) == a:", B2.im_involution(B2.im_involution(a)) == a)

print("\nSign characters, one per conjugacy class of simple reflections:")
for eps in B2.group.epsilon_characters():
    twisted = B2.k.twisted(eps)
    print(f"  {eps.label():8s} sends k to {[str(v) for v in twisted.simple_values()]}")

eps = next(e for e in B2.group.epsilon_characters()
           if all(v >= 0 for v in B2.k.twisted(e).simple_values()))
print(f"\nReal parameters always positivize: {eps.label()} turns (-2, 3) into",
      [str(v) for v in B2.k.twisted(eps).simple_values()])
moved = B2.phi_epsilon(eps, a)
print("  phi(a) =", moved.to_string(), "in", moved.algebra.describe())

print("\nSpecializing r to 1 and passing to leading terms:")
spec = B2.specialize_r(a)
print("  r = 1:", spec.to_string())
lt = spec.algebra.leading_term(spec)
print("  leading term in the crossed product:", lt.to_string())
