"""The cycle-free chessboard complex and its identification with Sym_*^{(p)}.

A simplex of ``Omega_n`` is a set of rooks ``(i, j)`` on an ``n x n`` board
(1-based) with distinct rows and distinct columns such that no subset closes
up into a chain ``(l0, l1), (l1, l2), ..., (lt, l0)``.  Reading a rook as an
arrow ``i -> j``, this says the rooks form a disjoint union of directed paths
("queues").  A diagonal rook ``(i, i)`` is already a closed chain of length
one, so it never occurs.

Simplices are stored as tuples of rooks sorted by row.  The boundary deletes
one rook at a time with sign ``(-1)^s`` for the rook in position ``s``.
Chains are indexed by the number of rooks, which is the degree in the
suspension ``S Omega^+_n`` (the empty board sits in degree 0).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .deltas import Permutation
from .errors import NotCycleFree
from .linalg.homology import HomologyGroup, homology
from .linalg.snf import rank_over_field
from .linalg.sparse import SparseIntMatrix
from .sym import _basis_index, canonicalize, differential, sym_basis

Rook = tuple[int, int]
Simplex = tuple[Rook, ...]


def is_cycle_free(rooks) -> bool:
    rooks = list(rooks)
    rows = [i for i, _ in rooks]
    cols = [j for _, j in rooks]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return False
    succ = dict(rooks)
    for start in succ:
        seen = {start}
        x = succ[start]
        while x in succ:
            if x in seen:
                return False
            seen.add(x)
            x = succ[x]
        if x in seen:
            return False
    return True


@lru_cache(maxsize=None)
def chess_basis(n: int, rooks: int) -> tuple[Simplex, ...]:
    """Cycle-free placements of ``rooks`` rooks on the ``n x n`` board, sorted."""
    out = []
    for rows in itertools.combinations(range(1, n + 1), rooks):
        for cols in itertools.permutations(range(1, n + 1), rooks):
            simplex = tuple(zip(rows, cols))
            if is_cycle_free(simplex):
                out.append(simplex)
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _chess_index(n: int, rooks: int) -> dict[Simplex, int]:
    return {s: k for k, s in enumerate(chess_basis(n, rooks))}


@lru_cache(maxsize=None)
def chess_boundary(n: int, rooks: int) -> SparseIntMatrix:
    """Boundary from ``rooks``-rook placements to ``rooks - 1``-rook placements."""
    target = _chess_index(n, rooks - 1)
    entries = {}
    for col, simplex in enumerate(chess_basis(n, rooks)):
        for s in range(len(simplex)):
            face = simplex[:s] + simplex[s + 1:]
            entries[target[face], col] = -1 if s % 2 else 1
    return SparseIntMatrix(len(target), len(chess_basis(n, rooks)), entries)


class ChessComplex:
    """Bases and boundaries of ``S Omega^+_n`` in degrees ``0 .. n - 1``."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"board size must be >= 1, got {n}")
        self.n = n
        self.top = n - 1
        self.bases = [chess_basis(n, r) for r in range(n)]
        self.boundaries = {r: chess_boundary(n, r) for r in range(1, n)}

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def is_complex(self) -> bool:
        return all((self.boundaries[r - 1] @ self.boundaries[r]).is_zero()
                   for r in range(2, self.top + 1))

    def _d_out(self, r):
        return self.boundaries[r] if r else SparseIntMatrix.zeros(0, len(self.bases[0]))

    def _d_in(self, r):
        if r < self.top:
            return self.boundaries[r + 1]
        return SparseIntMatrix.zeros(len(self.bases[r]), 0)

    def betti_numbers(self, characteristic: int = 0) -> list[int]:
        ranks = [0] + [rank_over_field(self.boundaries[r], characteristic)
                       for r in range(1, self.top + 1)] + [0]
        return [len(self.bases[r]) - ranks[r] - ranks[r + 1] for r in range(self.top + 1)]

    def homology(self, r: int) -> HomologyGroup:
        return homology(self._d_out(r), self._d_in(r))


def chessboard_complex(n: int) -> ChessComplex:
    return ChessComplex(n)


def queues(simplex) -> list[list[Rook]]:
    """Maximal paths of rooks, each listed head to tail, ordered by smallest letter."""
    simplex = list(simplex)
    if not is_cycle_free(simplex):
        raise NotCycleFree(f"{simplex} is not a cycle-free rook placement")
    succ = dict(simplex)
    targets = set(succ.values())
    heads = [i for i in succ if i not in targets]
    paths = []
    for h in heads:
        path, x = [], h
        while x in succ:
            path.append((x, succ[x]))
            x = succ[x]
        paths.append(path)
    paths.sort(key=lambda q: min(min(r) for r in q))
    return paths


def omega(simplex, n: int) -> tuple[int, tuple]:
    """``omega`` for a placement on the ``n x n`` board.

    A queue ``(l0, l1), ..., (l_{t-1}, l_t)`` becomes the monomial
    ``z_{l0-1} ... z_{lt-1}``; letters touched by no rook are singleton blocks.
    The sign is the sign of the permutation that lists the rooks queue by
    queue (queues in the order of their blocks after canonical sorting)
    instead of by row, times the sign of the canonical sort.

    >>> omega((), 3)
    (1, ((0,), (1,), (2,)))
    >>> omega(((2, 1),), 3)
    (1, ((1, 0), (2,)))
    """
    simplex = tuple(sorted(simplex))
    if any(not (1 <= i <= n and 1 <= j <= n) for i, j in simplex):
        raise NotCycleFree(f"{simplex} does not fit on a {n}x{n} board")
    paths = queues(simplex)
    used = {x for r in simplex for x in r}
    blocks = []
    order = []
    for path in paths:
        word = [path[0][0]] + [j for _, j in path]
        blocks.append(tuple(x - 1 for x in word))
        order.extend(path)
    blocks += [(x - 1,) for x in range(1, n + 1) if x not in used]
    sign, key = canonicalize(blocks)
    position = {r: k for k, r in enumerate(simplex)}
    perm = Permutation(position[r] for r in order)
    return sign * perm.sign(), key


def omega_matrix(p: int, rooks: int) -> SparseIntMatrix:
    """``omega`` from ``rooks``-rook placements on the ``(p+1)``-board to ``Sym_rooks^{(p)}``."""
    index = _basis_index(p, rooks)
    entries = {}
    for col, simplex in enumerate(chess_basis(p + 1, rooks)):
        sign, key = omega(simplex, p + 1)
        entries[index[key], col] = sign
    return SparseIntMatrix(len(index), len(chess_basis(p + 1, rooks)), entries)


def omega_iso(p: int) -> dict[int, SparseIntMatrix]:
    """Degree-wise matrices of ``omega : S Omega^+_{p+1} -> Sym^{(p)}``."""
    return {r: omega_matrix(p, r) for r in range(p + 1)}


def verify_omega(p: int) -> dict:
    """Check bijectivity and the chain-map identity ``d omega = omega d``."""
    mats = omega_iso(p)
    bijective = True
    for r, m in mats.items():
        if m.rows != m.cols or len(set(c for (_, c) in m.entries)) != m.cols \
                or len(set(rr for (rr, _) in m.entries)) != m.rows:
            bijective = False
    chain_map = all(
        differential(p, r) @ mats[r] == mats[r - 1] @ chess_boundary(p + 1, r)
        for r in range(1, p + 1))
    return {"p": p, "bijective": bijective, "chain_map": chain_map,
            "dims": [len(sym_basis(p, r)) for r in range(p + 1)]}
