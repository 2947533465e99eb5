#!/usr/bin/env python3
"""Parameters from Lie-algebra data: the ad-nilpotency rule.

Pick a block Levi inside a split matrix algebra and a nilpotent element of
it.  Each restricted root space (merging alpha with 2 alpha when both
occur) is a nilpotent stage for ad(v); the parameter attached to the root
is one more than the nilpotency degree, so v = 0 always gives 2.
"""

from gradedhecke import CuspidalSupportDescriptor, build_sl, build_sp, \
    compute_parameters, f4_ratio_admissible, restricted_root_spaces, \
    support_weyl_data

print("sl3 with the gl2 block Levi")
L = build_sl(3, [2, 1])
spaces = restricted_root_spaces(L)
for alpha, idxs in sorted(spaces.items()):
    names = [L.basis_names[i] for i in idxs]
    print(f"  restricted root {tuple(str(c) for c in alpha)}: space {names}")

print("\n  v = 0:", {str(k): v for k, v in compute_parameters(L, {}).items()})
print("  v = E12:", {str(k): v for k, v in
                     compute_parameters(L, {"E12": 1}).items()})
print("  (ad(E12) maps E23 -> E13 -> 0: two steps, so k = 3)")

print("\nsp4 with the torus as Levi: the full two-parameter system")
S = build_sp(4, [1, 1, 1, 1])
print("  restricted roots:", len(restricted_root_spaces(S)))
print("  v = 0 parameters:", sorted(set(compute_parameters(S, {}).values())))

print("\nsp4 with the gl1 x sp2 Levi: a non-reduced restricted system")
M = build_sp(4, [1, 2, 1])
for alpha, idxs in sorted(restricted_root_spaces(M).items()):
    print(f"  indivisible root {tuple(str(c) for c in alpha)}: "
          f"merged space of dimension {len(idxs)}")
values = compute_parameters(M, {"X23.1": 1})
print("  with v a root vector of the sp2 block:",
      sorted(set(values.values())))

print("\nFrom the parameters to a ready-to-use extended Weyl group:")
data = support_weyl_data(CuspidalSupportDescriptor(S, {}))
print("  group order:", len(data.group))
print("  parameter function:", data.parameters)

print("\nThe admissible two-length ratio table (short, long):")
for pair in ((2, 1), (4, 1), (3, 1), (1, 2)):
    print(f"  {pair}: {'admissible' if f4_ratio_admissible(*pair) else 'rejected'}")
