"""Exact sparse integer matrices."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from ..errors import ShapeMismatch


class SparseIntMatrix:
    """An immutable ``rows x cols`` integer matrix stored as ``{(r, c): v}``.

    Zero entries are never stored.  Values are Python ints, so there is no
    overflow.
    """

    __slots__ = ("rows", "cols", "_entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ShapeMismatch(f"negative shape {rows}x{cols}")
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ShapeMismatch(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = int(v)
            if v:
                clean[r, c] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean
        self._hash = None

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, int]]) -> SparseIntMatrix:
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                if v:
                    entries[r, c] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> SparseIntMatrix:
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ShapeMismatch("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    entries[r, c] = int(v)
        return cls(rows, cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> SparseIntMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> SparseIntMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return dict(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        return self._entries.items()

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def is_zero(self) -> bool:
        return not self._entries

    def row_dicts(self) -> list[dict[int, int]]:
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def column_dicts(self) -> list[dict[int, int]]:
        out = [dict() for _ in range(self.cols)]
        for (r, c), v in self._entries.items():
            out[c][r] = v
        return out

    def column(self, c: int) -> dict[int, int]:
        return {r: v for (r, cc), v in self._entries.items() if cc == c}

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> SparseIntMatrix:
        return SparseIntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def permute(self, row_perm: Sequence[int] | None = None,
                col_perm: Sequence[int] | None = None) -> SparseIntMatrix:
        """Entry ``(r, c)`` moves to ``(row_perm[r], col_perm[c])``."""
        rp = row_perm or range(self.rows)
        cp = col_perm or range(self.cols)
        return SparseIntMatrix(self.rows, self.cols,
                               {(rp[r], cp[c]): v for (r, c), v in self._entries.items()})

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> SparseIntMatrix:
        rmap = {r: i for i, r in enumerate(rows)}
        cmap = {c: i for i, c in enumerate(cols)}
        return SparseIntMatrix(len(rows), len(cols), {
            (rmap[r], cmap[c]): v for (r, c), v in self._entries.items() if r in rmap and c in cmap})

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        by_col = defaultdict(list)
        for (r, k), v in self._entries.items():
            by_col[k].append((r, v))
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (k, c), w in other._entries.items():
            for r, v in by_col.get(k, ()):
                out[r, c] += v * w
        return SparseIntMatrix(self.rows, other.cols, out)

    def __add__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        out = dict(self._entries)
        for key, v in other._entries.items():
            out[key] = out.get(key, 0) + v
        return SparseIntMatrix(self.rows, self.cols, out)

    def __neg__(self) -> SparseIntMatrix:
        return SparseIntMatrix(self.rows, self.cols, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        return self + (-other)

    def scale(self, factor: int) -> SparseIntMatrix:
        return SparseIntMatrix(self.rows, self.cols, {k: factor * v for k, v in self._entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    # -- coordinate triplet text format ---------------------------------

    def to_triplets(self) -> str:
        """``rows cols nnz`` header followed by ``r c v`` lines in row-major order."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines += [f"{r} {c} {v}" for (r, c), v in sorted(self._entries.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplets(cls, text: str) -> SparseIntMatrix:
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ShapeMismatch("empty triplet file")
        rows, cols, nnz = map(int, lines[0])
        body = lines[1:]
        if len(body) != nnz:
            raise ShapeMismatch(f"header announces {nnz} entries, found {len(body)}")
        entries: dict[tuple[int, int], int] = {}
        for r, c, v in body:
            key = (int(r), int(c))
            entries[key] = entries.get(key, 0) + int(v)
        return cls(rows, cols, entries)
