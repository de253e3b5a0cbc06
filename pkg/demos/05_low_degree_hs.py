"""
HS_0 and HS_1 of finite algebras
================================

The partial resolution gives a three-term complex
A <- A⊗A⊗A <- A⊗A⊗A⊗A ⊕ A whose homology is HS_0 and HS_1.
"""

from symhom import hslow
from symhom.algebra import preset

rows = ["integers", "trunc_poly(2)", "trunc_poly(3)", "trunc_poly(4)", "cyclic_group(2)",
        "cyclic_group(3)", "cyclic_group(4)", "trunc_poly(3,2)", "matrix_ring(2)",
        "lipschitz_quaternions", "quaternion_units", "symmetric_group(3)"]
for name in rows:
    A = preset(name)
    cx = hslow.build_partial_complex(A)
    print(f"{name:24} dim {A.dim}  HS_0 = {cx.hs0()!s:10} HS_1 = {cx.hs1()}")

# HS_0 is A modulo the two-sided ideal generated by commutators
H = preset("lipschitz_quaternions")
print("via the commutator ideal:", hslow.hs0_via_ideal(H), "| via the complex:", hslow.hs0(H))

# layers of a commutative monoid algebra
report = hslow.hs_layered(preset("abelian_group(2,2)"))
for label, (h0, h1) in report.layers.items():
    print(f"  layer {label}: HS_0 = {h0}, HS_1 = {h1}")
print("  merged:", *report.merged())
print("HS_1(Z[t]) by layer t^0..t^12:", [str(hslow.free_monoid_layer(m)) for m in range(13)])

# HS_1 as a module over HS_0
for n in (2, 3):
    act = hslow.hs0_action_on_hs1(preset(f"trunc_poly({n})"))
    gen, rel = act.cyclic_generator()
    print(f"Z[t]/(t^{n}): HS_1 generated by {gen}; annihilator (basis 1, t, ...) = {rel}")
