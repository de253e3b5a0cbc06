"""
Comparison with cyclic homology
===============================

Maps from the low-degree cyclic complex to the symmetric one.  The squares
are checked entry by entry; the sign variant of the boundary is reported as
a diagnostic.
"""

from symhom import hslow
from symhom.algebra import preset

for name in ["integers", "trunc_poly(2)", "trunc_poly(3)", "cyclic_group(3)", "matrix_ring(2)",
             "lipschitz_quaternions"]:
    c = hslow.cyclic_low_complex(preset(name))
    print(f"{name}: HC_0={c.hc0} -> HS_0={c.hs0}, HC_1={c.hc1} -> HS_1={c.hs1}")
    print(f"   induced on H_1: {c.induced1}   diagnostics: {c.diagnostics}")
