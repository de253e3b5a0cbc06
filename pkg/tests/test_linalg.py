import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symhom.errors import CompositeCharacteristic, NotAComplex, ShapeMismatch
from symhom.linalg import (HomologyGroup, SparseIntMatrix, complex_homology, homology,
                           homology_presentation, invariant_factors, rank_over_field,
                           smith_normal_form)
from symhom.linalg import dense
from symhom.linalg.snf import diagonal_to_invariant_factors


def det(m):
    """Bareiss fraction-free determinant."""
    m = [row[:] for row in m]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def determinantal_factors(a, rows, cols):
    """Invariant factors from gcds of k x k minors (textbook oracle)."""
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, det([[a[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def random_matrix(rng, max_size=8):
    rows, cols = rng.randint(1, max_size), rng.randint(1, max_size)
    density = rng.choice([0.2, 0.4, 0.7])
    scale = rng.choice([1, 2, 3, 6])
    a = [[rng.randint(-scale, scale) if rng.random() < density else 0 for _ in range(cols)]
         for _ in range(rows)]
    return a, rows, cols


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_snf_small_examples():
    assert smith_normal_form(SparseIntMatrix.identity(3)) == [1, 1, 1]
    assert smith_normal_form(SparseIntMatrix.from_dense([[2, 0], [0, 3]])) == [1, 6]
    assert smith_normal_form(SparseIntMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])) == [2, 6, 12]
    assert smith_normal_form(SparseIntMatrix.zeros(2, 3)) == [0, 0]


def test_snf_agrees_with_dense_oracles_on_200_random_matrices():
    rng = random.Random(20240611)
    for _ in range(200):
        a, rows, cols = random_matrix(rng)
        sparse = invariant_factors(SparseIntMatrix.from_dense(a))
        diag, u, v = dense.smith_decomposition(a, cols)
        # dense route: U a V is diagonal with U, V unimodular
        d = matmul(matmul(u, a), v)
        assert all(d[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
        assert abs(det(u)) == 1 and abs(det(v)) == 1
        assert sparse == diagonal_to_invariant_factors(d[i][i] for i in range(min(rows, cols)))
        if min(rows, cols) <= 5:
            assert sparse == determinantal_factors(a, rows, cols)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_snf_matches_minor_gcds(a):
    rows, cols = len(a), len(a[0])
    assert invariant_factors(SparseIntMatrix.from_dense(a)) == determinantal_factors(a, rows, cols)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=4, max_size=4),
       st.sampled_from([2, 3, 5, 7]))
def test_rank_over_field_against_minors(a, p):
    # rank mod p is the largest k with some k x k minor not divisible by p
    def rank_from_minors(mod):
        for k in range(4, 0, -1):
            for rs in itertools.combinations(range(4), k):
                for cs in itertools.combinations(range(5), k):
                    dt = det([[a[r][c] for c in cs] for r in rs])
                    if (dt % mod if mod else dt):
                        return k
        return 0
    m = SparseIntMatrix.from_dense(a)
    assert rank_over_field(m, 0) == rank_from_minors(0)
    assert rank_over_field(m, p) == rank_from_minors(p)


def test_rank_examples_and_errors():
    assert rank_over_field(SparseIntMatrix.zeros(3, 3)) == 0
    assert rank_over_field(SparseIntMatrix.from_dense([[2]]), 2) == 0
    assert rank_over_field(SparseIntMatrix.from_dense([[2]]), 0) == 1
    with pytest.raises(CompositeCharacteristic):
        rank_over_field(SparseIntMatrix.from_dense([[2]]), 4)


def test_sparse_matrix_operations():
    a = SparseIntMatrix.from_dense([[1, 2], [0, 3]])
    b = SparseIntMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [3, 0]]
    assert (a + b - b) == a
    assert a.transpose().to_dense() == [[1, 0], [2, 3]]
    assert a.scale(0).is_zero()
    assert SparseIntMatrix.from_triplets(a.to_triplets()) == a
    with pytest.raises(ShapeMismatch):
        a @ SparseIntMatrix.zeros(3, 1)
    with pytest.raises(ShapeMismatch):
        SparseIntMatrix.from_triplets("2 2 2\n0 0 1\n")


def test_triplet_format():
    text = "2 3 2\n0 2 5\n1 0 -1\n"
    m = SparseIntMatrix.from_triplets(text)
    assert m.to_dense() == [[0, 0, 5], [-1, 0, 0]]
    assert m.to_triplets() == text


def test_homology_trivial_and_circle():
    assert homology(SparseIntMatrix.zeros(1, 4), SparseIntMatrix.zeros(4, 0)) == HomologyGroup(4)
    # triangle boundary: vertices 0,1,2, edges 01, 12, 02
    d1 = SparseIntMatrix.from_dense([[-1, 0, -1], [1, -1, 0], [0, 1, 1]])
    assert homology(d1, SparseIntMatrix.zeros(3, 0)) == HomologyGroup(1)
    groups = complex_homology([3, 3], {1: d1})
    assert groups[0] == HomologyGroup(1) and groups[1] == HomologyGroup(1)


def test_homology_projective_plane_torsion():
    # Z --2--> Z: H_0 = Z/2
    assert homology(SparseIntMatrix.zeros(0, 1), SparseIntMatrix.from_dense([[2]])) == HomologyGroup(0, (2,))


def test_homology_rejects_non_complex():
    with pytest.raises(NotAComplex):
        homology(SparseIntMatrix.from_dense([[1]]), SparseIntMatrix.from_dense([[1]]))
    with pytest.raises(ShapeMismatch):
        homology(SparseIntMatrix.zeros(1, 2), SparseIntMatrix.zeros(3, 1))


def test_homology_group_normalisation():
    g = HomologyGroup.from_orders(1, [6, 4, 1])
    assert g.torsion == (2, 12)
    assert str(g) == "Z + Z/2 + Z/12"
    assert g.primary_parts() == {2: [2, 4], 3: [3]}
    assert str(HomologyGroup()) == "0"
    assert (HomologyGroup(1, (2,)) + HomologyGroup(0, (3,))) == HomologyGroup(1, (6,))
    with pytest.raises(ValueError):
        HomologyGroup(0, (4, 2))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_presentation_agrees_with_fast_route(data):
    # random complex Z^a <- Z^b <- Z^c built as d_in = K @ X with K a kernel basis of d_out
    a, b, c = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 5)), data.draw(st.integers(0, 4))
    entries = st.integers(-3, 3)
    d_out = [[data.draw(entries) for _ in range(b)] for _ in range(a)]
    ker = dense.kernel_basis(d_out, b)
    x = [[data.draw(entries) for _ in range(c)] for _ in range(len(ker))]
    d_in = [[sum(ker[k][i] * x[k][j] for k in range(len(ker))) for j in range(c)] for i in range(b)]
    D_out = SparseIntMatrix.from_dense(d_out)
    D_in = SparseIntMatrix(b, c, {(i, j): d_in[i][j] for i in range(b) for j in range(c)})
    fast = homology(D_out, D_in)
    pres = homology_presentation(D_out, D_in)
    assert pres.group == fast
    for g, order in zip(pres.generators, pres.orders):
        assert all(sum(d_out[r][i] * g[i] for i in range(b)) == 0 for r in range(a))
        assert pres.reduce(g).count(0) == len(pres.orders) - 1
    for j in range(c):
        assert all(v == 0 for v in pres.reduce([d_in[i][j] for i in range(b)]))


def test_hermite_normal_form_is_canonical():
    h1 = dense.hermite_normal_form([[2, 4], [0, 6]], 2)
    h2 = dense.hermite_normal_form([[2, 10], [2, 4], [0, 12]], 2)
    assert h1 == h2 == [[2, 4], [0, 6]]
    assert dense.solve_in_lattice([[2, 0], [4, 6]], [6, 12]) == [-1, 2]
    with pytest.raises(ValueError):
        dense.solve_in_lattice([[2, 0]], [1, 0])
