"""Dense integer normal forms with explicit unimodular transforms.

These routines are deliberately plain: they follow the textbook Smith
algorithm on lists of Python ints.  They serve two purposes.  Small
presentations (HS₁ generators, module actions) need the transforms, and the
test-suite uses them as an oracle independent of the sparse engine in
:mod:`symhom.linalg.snf`.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(map(int, row)) for row in a]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, target, source, k):
    # row[target] += k * row[source]
    src = m[source]
    tgt = m[target]
    for c in range(len(tgt)):
        if src[c]:
            tgt[c] += k * src[c]


def _add_col(m, target, source, k):
    for row in m:
        if row[source]:
            row[target] += k * row[source]


def smith_decomposition(a: Sequence[Sequence[int]], ncols: int | None = None
                        ) -> tuple[list[int], Matrix, Matrix]:
    """Return ``(diag, U, V)`` with ``U @ a @ V`` diagonal, diagonal entries ``diag``.

    ``diag`` has length ``min(rows, cols)``; its nonzero entries are the
    invariant factors in divisibility order, followed by zeros.  ``U`` and
    ``V`` are unimodular.
    """
    m = copy(a)
    rows = len(m)
    cols = ncols if ncols is not None else (len(m[0]) if rows else 0)
    u = identity(rows)
    v = identity(cols)
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero |entry| in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = m[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        _swap_rows(m, t, i)
        _swap_rows(u, t, i)
        _swap_cols(m, t, j)
        _swap_cols(v, t, j)
        while True:
            p = m[t][t]
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // p
                    _add_row(m, i, t, -q)
                    _add_row(u, i, t, -q)
                    if m[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // p
                    _add_col(m, j, t, -q)
                    _add_col(v, j, t, -q)
                    if m[t][j]:
                        done = False
            if not done:
                # move the smallest remainder in row/column t to the pivot
                cand = [(abs(m[i][t]), i, t) for i in range(t + 1, rows) if m[i][t]]
                cand += [(abs(m[t][j]), t, j) for j in range(t + 1, cols) if m[t][j]]
                _, i, j = min(cand)
                if j == t:
                    _swap_rows(m, t, i)
                    _swap_rows(u, t, i)
                else:
                    _swap_cols(m, t, j)
                    _swap_cols(v, t, j)
                continue
            # enforce divisibility of the trailing block by the pivot
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(m, t, bad, 1)
            _add_row(u, t, bad, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diag = [m[i][i] for i in range(min(rows, cols))]
    return diag, u, v


def smith_diagonal(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    return smith_decomposition(a, ncols)[0]


def inverse_unimodular(u: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a unimodular matrix by Gauss-Jordan over Z."""
    n = len(u)
    m = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(u)]
    for col in range(n):
        while True:
            nz = [(abs(m[i][col]), i) for i in range(col, n) if m[i][col]]
            if not nz:
                raise ValueError("matrix is singular")
            _, piv = min(nz)
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            clean = True
            for i in range(col + 1, n):
                if m[i][col]:
                    q = m[i][col] // p
                    _add_row(m, i, col, -q)
                    if m[i][col]:
                        clean = False
            if clean:
                break
        if abs(m[col][col]) != 1:
            raise ValueError("matrix is not unimodular")
        if m[col][col] == -1:
            m[col] = [-x for x in m[col]]
    for col in range(n - 1, -1, -1):
        for i in range(col):
            if m[i][col]:
                _add_row(m, i, col, -m[i][col])
    return [row[n:] for row in m]


def hermite_normal_form(generators: Sequence[Sequence[int]], width: int) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``generators``.

    Returns a canonical basis (one row per basis vector) of the row lattice,
    upper triangular with positive pivots and reduced entries above each pivot.
    """
    m = [list(map(int, g)) for g in generators if any(g)]
    out: Matrix = []
    col = 0
    while m and col < width:
        nz = [r for r in m if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in m if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            new = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col]:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        m = rest
        col += 1
    # reduce entries above pivots
    for i in range(len(out)):
        pc = next(c for c, x in enumerate(out[i]) if x)
        for k in range(i):
            q = out[k][pc] // out[i][pc]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def kernel_basis(a: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Columns (returned as a list of column vectors) spanning the integer kernel of ``a``.

    The basis is saturated: the kernel lattice is a direct summand of Z^ncols.
    """
    diag, _, v = smith_decomposition(a, ncols)
    rank = sum(1 for d in diag if d)
    return [[v[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def solve_in_lattice(basis: Sequence[Sequence[int]], target: Sequence[int]) -> list[int]:
    """Coordinates ``x`` with ``sum x_j basis[j] == target``; ``basis`` is a list of columns.

    Raises ``ValueError`` if ``target`` is not in the lattice.
    """
    n = len(target)
    k = len(basis)
    if k == 0:
        if any(target):
            raise ValueError("target is not in the zero lattice")
        return []
    mat = [[basis[j][i] for j in range(k)] for i in range(n)]
    diag, u, v = smith_decomposition(mat, k)
    ut = [sum(u[i][r] * target[r] for r in range(n)) for i in range(n)]
    y = []
    for i in range(k):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if ut[i]:
                raise ValueError("target is not in the lattice")
            y.append(0)
        else:
            if ut[i] % d:
                raise ValueError("target is not in the lattice")
            y.append(ut[i] // d)
    if any(ut[i] for i in range(k, n)):
        raise ValueError("target is not in the lattice")
    return [sum(v[j][i] * y[i] for i in range(k)) for j in range(k)]
