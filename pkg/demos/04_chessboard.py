"""
The cycle-free chessboard complex
=================================

Rook placements with no closed chain i -> j -> ... -> i.  Reading rooks as
arrows, maximal paths become monomials, which identifies the suspended
complex with Sym^(p) on the (p+1) x (p+1) board.
"""

from symhom import sym
from symhom.chessboard import chess_basis, chessboard_complex, omega, verify_omega

print("rooks on the 2x2 board:", chess_basis(2, 1))
print("omega of {(3,1),(1,2)} on the 3x3 board:", omega(((3, 1), (1, 2)), 3))

for p in range(5):
    report = verify_omega(p)
    cx = chessboard_complex(p + 1)
    print(f"p={p} dims={report['dims']} bijective={report['bijective']} "
          f"chain map={report['chain_map']} betti={cx.betti_numbers()} "
          f"(Sym: {sym.betti_numbers(p)})")

# connectivity: reduced homology vanishes up to floor(2(p-1)/3)
for p in range(1, 6):
    print(f"p={p} bound={sym.connectivity_bound(p)} first non-zero degree="
          f"{next(i for i, b in enumerate(sym.betti_numbers(p)) if b)}")
