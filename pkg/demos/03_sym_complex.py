"""
The complexes Sym^(p)
=====================

Basis elements are unordered collections of ordered blocks covering
0..p; the differential cuts a block in two.  Their homology is computed
exactly over Z and over prime fields.
"""

import time

from symhom import sym
from symhom.sym import SymElement

print("canonical form of z1 ⊗ z0z2:", sym.canonicalize([[1], [0, 2]]))
w = SymElement.from_blocks([[1, 0, 2]])
print("d(z1z0z2) =", sym.format_element(w.d()))

for p in range(6):
    start = time.perf_counter()
    dims = [len(sym.sym_basis(p, i)) for i in range(p + 1)]
    poly = sym.format_polynomial(sym.poincare_polynomial(p))
    print(f"p={p}  dims={dims}  P(t)={poly}  ({time.perf_counter() - start:.2f}s)")

# integral homology is torsion-free in this range
print("H_*(Sym^(4); Z):", [str(sym.integral_homology(4, i)) for i in range(5)])

# the top class b_p and its translates
b3 = sym.b_cycle(3)
print("b_3 =", sym.format_element(b3), "| d(b_3) = 0:", b3.d().is_zero())
print("p! translates of b_p:", [len(sym.top_generators(p)) for p in range(1, 5)])

# ⊠ and the decomposition by block sizes
x, y = SymElement.from_blocks([[1, 0]]), SymElement.from_blocks([[0], [1]])
print("z1z0 ⊠ (z0 ⊗ z1) =", sym.format_element(sym.boxtimes(x, y)))
for lam, elems in sym.decompose_by_partition(4, 2).items():
    alt, triv = sym.special_reps(lam)
    print(f"  λ={list(lam)} dim={len(elems)} alternating={alt} trivial={triv}")
print("lowest degree with an alternating summand, p=0..6:",
      [sym.lowest_alternating_degree(p) for p in range(7)])
