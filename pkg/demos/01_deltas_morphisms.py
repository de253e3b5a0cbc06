"""
Morphisms of ΔS in tensor notation
==================================

A morphism [n] -> [m] is a list of m+1 blocks; block j lists the source
points sent to j, in order.  Composition substitutes monomials.
"""

from symhom import deltas
from symhom.deltas import compose, parse_morphism

# how many morphisms [6] -> [4]?  (m+n+1)!/m!
print("count(6, 4) =", deltas.count(6, 4))

# the full listing of [2] -> [2] and the epimorphisms among them
all_22 = deltas.enumerate_morphisms(2, 2)
epi_22 = deltas.enumerate_morphisms(2, 2, epi_only=True)
print(len(all_22), "morphisms, first three:", *all_22[:3])
print(len(epi_22), "epimorphisms:", *epi_22)

# composition: x4x0 ⊗ 1 ⊗ x2x3 ⊗ x1  after  x1x6x0 ⊗ x7x4 ⊗ 1 ⊗ x3 ⊗ x2x5
f = parse_morphism("[[4,0],[],[2,3],[1]]")
g = parse_morphism("[[1,6,0],[7,4],[],[3],[2,5]]")
print(f, "∘", g, "=", compose(f, g))

# every morphism is an epimorphism followed by an order-preserving injection
h = parse_morphism("[[2,3],[],[1],[],[0]]")
epi, mono = deltas.epi_mono_factor(h)
print("factor", h, "->", epi, "then", mono)
assert compose(mono, epi) == h

# the permutative structure: juxtaposition and the block transposition
a = parse_morphism("[[],[2,1,0],[3,4]]")
b = parse_morphism("[[],[],[],[1,3,2,0]]")
print("a ⊙ b =", deltas.monoidal_product(a, b))
print("β(1,2) as a point map:", deltas.block_transposition(1, 2).point_map())
