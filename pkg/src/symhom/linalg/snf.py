"""Sparse elimination: Smith normal form over Z and ranks over Q and F_p.

The integer path works in two phases.  Phase one repeatedly takes a unit pivot
(entry ±1) in the sparsest live column, choosing the shortest row among the
candidates (a Markowitz-style heuristic), and replaces the matrix by its Schur
complement.  A unit pivot contributes an invariant factor 1 and keeps all
arithmetic integral.  Boundary matrices of combinatorial complexes are mostly
consumed by this phase.

Phase two handles whatever is left with no unit entries: take the entry of
smallest absolute value, reduce its row and column by integer division, and
repeat until it is isolated.  Each isolated pivot is a diagonal entry of a
matrix unimodularly equivalent to the input; the diagonal is then normalised
to invariant factors with gcd/lcm exchanges.

Pivot choices depend only on the matrix, never on timing, so results are
deterministic.
"""

from __future__ import annotations

import heapq
from math import gcd
from typing import Iterable

from ..errors import CompositeCharacteristic
from .sparse import SparseIntMatrix


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_characteristic(characteristic: int) -> None:
    if characteristic != 0 and not _is_prime(characteristic):
        raise CompositeCharacteristic(
            f"characteristic must be 0 or a prime, got {characteristic}")


class _Eliminator:
    """Mutable row/column view of a matrix used during elimination."""

    def __init__(self, matrix: SparseIntMatrix, modulus: int | None):
        self.modulus = modulus
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for (r, c), v in matrix.items():
            if modulus:
                v %= modulus
                if not v:
                    continue
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, set()).add(r)
        self.diagonal: list[int] = []

    def _is_unit(self, v: int) -> bool:
        return bool(v) if self.modulus else v in (1, -1)

    def _inverse(self, v: int) -> int:
        if self.modulus:
            return pow(v, -1, self.modulus)
        return v  # ±1 is its own inverse

    def _drop_row(self, r: int) -> dict[int, int]:
        row = self.rows.pop(r)
        for c in row:
            s = self.cols[c]
            s.discard(r)
        return row

    def _pivot_unit(self, r: int, c: int) -> set[int]:
        """Eliminate with the unit pivot at ``(r, c)``; return touched columns."""
        mod = self.modulus
        prow = self._drop_row(r)
        inv = self._inverse(prow[c])
        others = self.cols.pop(c)
        touched = set(prow)
        touched.discard(c)
        for i in others:
            row = self.rows[i]
            factor = row.pop(c) * inv
            if mod:
                factor %= mod
            for c2, v in prow.items():
                if c2 == c:
                    continue
                nv = row.get(c2, 0) - factor * v
                if mod:
                    nv %= mod
                if nv:
                    if c2 not in row:
                        self.cols[c2].add(i)
                    row[c2] = nv
                elif c2 in row:
                    del row[c2]
                    self.cols[c2].discard(i)
            if not row:
                del self.rows[i]
        for c2 in touched:
            if not self.cols[c2]:
                del self.cols[c2]
        self.diagonal.append(1)
        return touched

    def unit_phase(self) -> None:
        heap = [(len(s), c) for c, s in self.cols.items()]
        heapq.heapify(heap)
        while heap:
            n, c = heapq.heappop(heap)
            s = self.cols.get(c)
            if s is None or len(s) != n:
                continue
            best = None
            for r in s:
                if self._is_unit(self.rows[r][c]):
                    key = (len(self.rows[r]), r)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            for c2 in self._pivot_unit(best[1], c):
                if c2 in self.cols:
                    heapq.heappush(heap, (len(self.cols[c2]), c2))

    def general_step(self) -> None:
        """Isolate one pivot of minimal absolute value (integer mode only)."""
        r, c = min(((r, c) for r, row in self.rows.items() for c in row),
                   key=lambda rc: (abs(self.rows[rc[0]][rc[1]]),
                                   (len(self.rows[rc[0]]) - 1) * (len(self.cols[rc[1]]) - 1), rc))
        while True:
            v = self.rows[r][c]
            # clear column c with row operations
            for i in sorted(self.cols[c] - {r}):
                row = self.rows[i]
                q = row[c] // v
                self._add_row_multiple(i, r, -q)
            rest = self.cols[c] - {r}
            if rest:
                r = min(rest | {r}, key=lambda i: (abs(self.rows[i][c]), i))
                continue
            # column c now only meets row r: column operations touch row r only
            row = self.rows[r]
            for j in sorted(set(row) - {c}):
                q = row[j] // v
                nv = row[j] - q * v
                if nv:
                    row[j] = nv
                else:
                    del row[j]
                    self.cols[j].discard(r)
                    if not self.cols[j]:
                        del self.cols[j]
            if len(row) > 1:
                c = min(row, key=lambda j: (abs(row[j]), j))
                continue
            break
        self.diagonal.append(abs(self.rows[r][c]))
        del self.rows[r]
        del self.cols[c]

    def _add_row_multiple(self, target: int, source: int, factor: int) -> None:
        if not factor:
            return
        row = self.rows[target]
        for c2, v in self.rows[source].items():
            nv = row.get(c2, 0) + factor * v
            if nv:
                if c2 not in row:
                    self.cols[c2].add(target)
                row[c2] = nv
            else:
                del row[c2]
                self.cols[c2].discard(target)
        if not row:
            del self.rows[target]

    def run(self) -> list[int]:
        while self.rows:
            self.unit_phase()
            if not self.rows:
                break
            if self.modulus:
                raise AssertionError("field elimination left entries behind")
            self.general_step()
        return self.diagonal


def diagonal_to_invariant_factors(diagonal: Iterable[int]) -> list[int]:
    """Turn the diagonal of a diagonal matrix into invariant factors ``d1 | d2 | ...``."""
    ones = 0
    rest = []
    for d in diagonal:
        d = abs(d)
        if d == 1:
            ones += 1
        elif d:
            rest.append(d)
    rest.sort()
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    out = [1] * ones + sorted(rest)
    # gcd/lcm exchanges can create new units
    return sorted(out)


def elimination_diagonal(matrix: SparseIntMatrix, modulus: int | None = None) -> list[int]:
    """Nonzero pivots of a unimodular diagonalisation (integer) or of Gaussian elimination mod p."""
    return _Eliminator(matrix, modulus).run()


def invariant_factors(matrix: SparseIntMatrix) -> list[int]:
    """Nonzero invariant factors of ``matrix`` in divisibility order."""
    return diagonal_to_invariant_factors(elimination_diagonal(matrix))


def smith_normal_form(matrix: SparseIntMatrix) -> list[int]:
    """Diagonal of the Smith normal form, padded with zeros to ``min(rows, cols)``."""
    inv = invariant_factors(matrix)
    return inv + [0] * (min(matrix.rows, matrix.cols) - len(inv))


def rank_over_field(matrix: SparseIntMatrix, characteristic: int = 0) -> int:
    """Rank over Q (``characteristic == 0``) or over F_p."""
    check_characteristic(characteristic)
    return len(elimination_diagonal(matrix, characteristic or None))
