"""
Finite algebras and the symmetric bar construction
==================================================

Algebras are given by integer structure constants.  A ΔS morphism acts on a
simple tensor by multiplying the factors listed in each block.
"""

import json

from symhom.algebra import AlgebraTensor, apply_morphism, build_algebra, layer_of, preset
from symhom.deltas import parse_morphism
from symhom.errors import NotAssociative

A = preset("trunc_poly(3,2)")       # Z[t,u]/(t^3, u^2)
print(A, "basis:", A.basis_names)
idx = {name: k for k, name in enumerate(A.basis_names)}


def show(tensor):
    return " + ".join(f"{c}*(" + " ⊗ ".join(A.basis_names[i] for i in key) + ")"
                      for key, c in tensor.terms.items()) or "0"


v = AlgebraTensor.simple(idx["t*u"], idx["1"], idx["t^2"])
for literal in ["[[2],[],[0],[1]]", "[[2],[0,1]]", "[[2,0],[1]]"]:
    print(literal, ":", show(v), "->", show(apply_morphism(parse_morphism(literal), v, A)))

# commutative monoid algebras carry a grading by monoid elements
print("layer of t ⊗ t ⊗ 1 in Z[t]/(t^4):", layer_of((1, 1, 0), preset("trunc_poly(4)")))
print("layer of t ⊗ t in Z[t]/(t^2):", layer_of((1, 1), preset("trunc_poly(2)")))

# the JSON file format used by `symhom hs --algebra FILE`
print(json.dumps(preset("cyclic_group(2)").to_json()))

# validation catches a non-associative table: (b1 b1) b1 = b2 but b1 (b1 b1) = 0
table = {(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (1, 0): [0, 1, 0], (0, 2): [0, 0, 1],
         (2, 0): [0, 0, 1], (1, 1): [0, 0, 1], (2, 1): [0, 0, 1]}
try:
    build_algebra(3, [1, 0, 0], table)
except NotAssociative as exc:
    print("rejected:", exc, "| witness:", exc.witness)
