"""Homology of chain complexes of free abelian groups.

Two routes are provided and the tests play them against each other.

* :func:`homology` uses ranks and the invariant factors of the incoming
  boundary only.  This is valid because the kernel of an integer matrix is a
  direct summand, so the torsion of ``ker d_out / im d_in`` equals the torsion
  of ``coker d_in``.  It runs on the sparse engine and is what large complexes
  use.
* :func:`homology_presentation` builds a saturated kernel basis of ``d_out``,
  writes the columns of ``d_in`` in that basis and takes a Smith form with
  transforms.  It is dense and slower, but it returns explicit cycle
  representatives for the generators, which module actions need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import NotAComplex, ShapeMismatch
from . import dense
from .snf import (check_characteristic, diagonal_to_invariant_factors, elimination_diagonal,
                  rank_over_field)
from .sparse import SparseIntMatrix


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group ``Z^free_rank + Z/d_1 + ... + Z/d_k``.

    >>> print(HomologyGroup.from_orders(2, [6, 2, 2]))
    Z^2 + (Z/2)^2 + Z/6
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(x < 2 for x in t):
            raise ValueError(f"torsion coefficients must be > 1, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not in divisibility order")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> HomologyGroup:
        """Normalise an arbitrary list of cyclic orders (1s are dropped)."""
        inv = diagonal_to_invariant_factors(orders)
        return cls(free_rank, tuple(d for d in inv if d > 1))

    def direct_sum(self, other: HomologyGroup) -> HomologyGroup:
        return HomologyGroup.from_orders(self.free_rank + other.free_rank,
                                         self.torsion + other.torsion)

    __add__ = direct_sum

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def primary_parts(self) -> dict[int, list[int]]:
        """Elementary divisors: prime ``q`` -> sorted prime powers."""
        out: dict[int, list[int]] = {}
        for d in self.torsion:
            q = 2
            while d > 1:
                if d % q == 0:
                    pw = 1
                    while d % q == 0:
                        d //= q
                        pw *= q
                    out.setdefault(q, []).append(pw)
                q += 1
        return {q: sorted(v) for q, v in sorted(out.items())}

    def as_dict(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        runs: list[list[int]] = []
        for d in self.torsion:
            if runs and runs[-1][0] == d:
                runs[-1][1] += 1
            else:
                runs.append([d, 1])
        for d, k in runs:
            parts.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
        return " + ".join(parts) or "0"


def _as_sparse(m) -> SparseIntMatrix:
    if isinstance(m, SparseIntMatrix):
        return m
    return SparseIntMatrix.from_dense(m)


def check_composable(d_out: SparseIntMatrix, d_in: SparseIntMatrix) -> None:
    """Raise unless ``d_out @ d_in`` is defined and zero."""
    if d_out.cols != d_in.rows:
        raise ShapeMismatch(
            f"d_out has {d_out.cols} columns but d_in has {d_in.rows} rows")
    prod = d_out @ d_in
    if not prod.is_zero():
        col = min(c for (_, c) in prod.entries)
        raise NotAComplex(f"d_out @ d_in is nonzero in column {col}", column=col)


def homology(d_out, d_in, check: bool = True) -> HomologyGroup:
    """``ker d_out / im d_in`` for integer boundary matrices.

    ``d_out`` maps the chain group to the next lower degree and ``d_in`` maps
    the next higher degree into it.
    """
    d_out, d_in = _as_sparse(d_out), _as_sparse(d_in)
    if check:
        check_composable(d_out, d_in)
    elif d_out.cols != d_in.rows:
        raise ShapeMismatch(f"d_out has {d_out.cols} columns but d_in has {d_in.rows} rows")
    n = d_out.cols
    rank_out = len(elimination_diagonal(d_out))
    diag_in = elimination_diagonal(d_in)
    inv = diagonal_to_invariant_factors(diag_in)
    return HomologyGroup(n - rank_out - len(inv), tuple(d for d in inv if d > 1))


def betti_number(d_out, d_in, characteristic: int = 0) -> int:
    """Dimension of homology with coefficients in Q or F_p."""
    check_characteristic(characteristic)
    d_out, d_in = _as_sparse(d_out), _as_sparse(d_in)
    return (d_out.cols - rank_over_field(d_out, characteristic)
            - rank_over_field(d_in, characteristic))


def complex_homology(dims: Sequence[int], boundaries: dict[int, SparseIntMatrix],
                     check: bool = True) -> list[HomologyGroup]:
    """Homology in every degree of ``C_0 <- C_1 <- ... <- C_top``.

    ``boundaries[k]`` maps degree ``k`` to degree ``k - 1``; missing entries
    are zero maps.
    """
    out = []
    for k, n in enumerate(dims):
        d_out = boundaries.get(k) or SparseIntMatrix.zeros(dims[k - 1] if k else 0, n)
        up = dims[k + 1] if k + 1 < len(dims) else 0
        d_in = boundaries.get(k + 1) or SparseIntMatrix.zeros(n, up)
        out.append(homology(d_out, d_in, check=check))
    return out


# -- explicit presentations ----------------------------------------------

def _lattice_coordinates(basis_cols: list[list[int]], targets: list[list[int]]
                         ) -> list[list[int]]:
    """Coordinates of each target in a saturated lattice basis (all given as columns)."""
    k = len(basis_cols)
    if not targets:
        return []
    if k == 0:
        for t in targets:
            if any(t):
                raise NotAComplex("image is not contained in the kernel", column=targets.index(t))
        return [[] for _ in targets]
    n = len(basis_cols[0])
    mat = [[basis_cols[j][i] for j in range(k)] for i in range(n)]
    diag, u, v = dense.smith_decomposition(mat, k)
    if diag[:k] != [1] * k:
        raise ValueError("lattice basis is not saturated")
    out = []
    for idx, t in enumerate(targets):
        ut = [sum(ur[r] * t[r] for r in range(n) if t[r]) for ur in u]
        if any(ut[k:]):
            raise NotAComplex("image is not contained in the kernel", column=idx)
        out.append([sum(v[j][i] * ut[i] for i in range(k)) for j in range(k)])
    return out


@dataclass
class HomologyPresentation:
    """``ker d_out / im d_in`` together with explicit generators.

    ``generators[g]`` is a cycle (ambient coordinates) and ``orders[g]`` its
    order, ``0`` meaning infinite.  :meth:`reduce` writes any cycle in terms
    of these generators.
    """

    group: HomologyGroup
    kernel: list[list[int]]
    generators: list[list[int]]
    orders: list[int]
    _u: list[list[int]] = field(repr=False, default_factory=list)
    _keep: list[int] = field(repr=False, default_factory=list)

    def kernel_coordinates(self, cycle: Sequence[int]) -> list[int]:
        return _lattice_coordinates(self.kernel, [list(cycle)])[0]

    def reduce(self, cycle: Sequence[int]) -> list[int]:
        """Coordinates of the class of ``cycle`` (reduced mod each generator's order)."""
        x = self.kernel_coordinates(cycle)
        z = [sum(row[j] * x[j] for j in range(len(x))) for row in self._u]
        out = []
        for pos, order in zip(self._keep, self.orders):
            out.append(z[pos] % order if order else z[pos])
        return out


def homology_presentation(d_out, d_in, check: bool = True) -> HomologyPresentation:
    d_out, d_in = _as_sparse(d_out), _as_sparse(d_in)
    if check:
        check_composable(d_out, d_in)
    n = d_out.cols
    kernel = dense.kernel_basis(d_out.to_dense(), n) if d_out.rows else \
        [[int(i == j) for i in range(n)] for j in range(n)]
    k = len(kernel)
    cols = [[0] * n for _ in range(d_in.cols)]
    for (r, c), v in d_in.items():
        cols[c][r] = v
    coords = _lattice_coordinates(kernel, cols)
    # coordinate matrix: k x m
    cmat = [[coords[c][i] for c in range(d_in.cols)] for i in range(k)]
    diag, u, _ = dense.smith_decomposition(cmat, d_in.cols)
    diag = diag + [0] * (k - len(diag))
    uinv = dense.inverse_unimodular(u) if k else []
    keep, orders, gens = [], [], []
    for i in range(k):
        if diag[i] == 1:
            continue
        keep.append(i)
        orders.append(diag[i])
        # generator i is kernel @ uinv[:, i]
        w = [uinv[j][i] for j in range(k)]
        gens.append([sum(kernel[j][r] * w[j] for j in range(k)) for r in range(n)])
    torsion = sorted(d for d in orders if d)
    group = HomologyGroup(sum(1 for d in orders if d == 0), tuple(torsion))
    return HomologyPresentation(group, kernel, gens, orders, _u=u, _keep=keep)

