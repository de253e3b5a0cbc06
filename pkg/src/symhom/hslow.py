"""Symmetric homology in degrees 0 and 1 from the explicit partial resolution.

For an algebra ``A`` the complex is

    0 <- A <-d1- A⊗A⊗A <-d2- (A⊗A⊗A⊗A) ⊕ A

with ``d1(a⊗b⊗c) = abc - cba`` and

    d2(a⊗b⊗c⊗d) = ab⊗c⊗d + d⊗ca⊗b + bca⊗1⊗d + d⊗bc⊗a,   d2(a) = 1⊗a⊗1.

Basis tensors of ``A^{⊗k}`` are index tuples, ordered lexicographically.  The
``A`` summand in degree 2 comes after the 4-tensors and its keys are
1-tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import FinAlgebra, tensor_of_vectors
from .errors import ChainMapViolation, NonCommutativeMonoid, UngradedAlgebra
from .linalg import dense
from .linalg.homology import (HomologyGroup, HomologyPresentation, check_composable, homology,
                              homology_presentation)
from .linalg.sparse import SparseIntMatrix

Key = tuple[int, ...]
Vec = Mapping[int, int]
# a formula turns a domain key into a list of (coefficient, tensor factors)
Formula = Callable[[Key], list[tuple[int, list[Vec]]]]


def _e(i: int) -> dict[int, int]:
    return {i: 1}


def tensor_keys(dim: int, arity: int) -> list[Key]:
    return list(itertools.product(range(dim), repeat=arity))


def assemble(domain: Sequence[Key], codomain: Sequence[Key], formula: Formula) -> SparseIntMatrix:
    """Matrix of a linear map given on basis keys by ``formula``.

    Output terms whose key is missing from ``codomain`` raise ``KeyError``;
    this catches maps that leave a layer.
    """
    index = {k: n for n, k in enumerate(codomain)}
    entries: dict[tuple[int, int], int] = {}
    for col, key in enumerate(domain):
        acc: dict[Key, int] = {}
        for coeff, factors in formula(key):
            for out, c in tensor_of_vectors(factors).items():
                acc[out] = acc.get(out, 0) + coeff * c
        for out, c in acc.items():
            if c:
                entries[index[out], col] = c
    return SparseIntMatrix(len(codomain), len(domain), entries)


# -- the two boundary maps -------------------------------------------------

def _d1_formula(A: FinAlgebra) -> Formula:
    def f(key):
        a, b, c = key
        return [(1, [A.product((a, b, c))]), (-1, [A.product((c, b, a))])]
    return f


def _d2_formula(A: FinAlgebra, variant_sign: int = 1) -> Formula:
    unit = A.unit

    def f(key):
        if len(key) == 1:
            (a,) = key
            return [(1, [unit, _e(a), unit])]
        a, b, c, d = key
        return [(1, [A.product((a, b)), _e(c), _e(d)]),
                (variant_sign, [_e(d), A.product((c, a)), _e(b)]),
                (1, [A.product((b, c, a)), unit, _e(d)]),
                (1, [_e(d), A.product((b, c)), _e(a)])]
    return f


@dataclass
class PartialComplex:
    """``d1 : A^{⊗3} -> A`` and ``d2 : A^{⊗4} ⊕ A -> A^{⊗3}`` with their bases."""

    algebra: FinAlgebra
    keys0: list[Key]
    keys1: list[Key]
    keys2: list[Key]
    d1: SparseIntMatrix
    d2: SparseIntMatrix
    label: str | None = None

    def hs0(self) -> HomologyGroup:
        return homology(SparseIntMatrix.zeros(0, len(self.keys0)), self.d1, check=False)

    def hs1(self) -> HomologyGroup:
        return homology(self.d1, self.d2, check=False)


def build_partial_complex(A: FinAlgebra, keys: tuple[list[Key], list[Key], list[Key]] | None = None,
                          label: str | None = None) -> PartialComplex:
    """Assemble the complex, optionally restricted to given bases, and check ``d1 d2 = 0``."""
    if keys is None:
        n = A.dim
        keys = (tensor_keys(n, 1), tensor_keys(n, 3), tensor_keys(n, 4) + tensor_keys(n, 1))
    k0, k1, k2 = keys
    d1 = assemble(k1, k0, _d1_formula(A))
    d2 = assemble(k2, k1, _d2_formula(A))
    check_composable(d1, d2)
    return PartialComplex(A, list(k0), list(k1), list(k2), d1, d2, label)


def hs0(A: FinAlgebra) -> HomologyGroup:
    return build_partial_complex(A).hs0()


def hs1(A: FinAlgebra) -> HomologyGroup:
    return build_partial_complex(A).hs1()


# -- HS_0 through the commutator ideal ---------------------------------------

def commutator_ideal(A: FinAlgebra, max_passes: int = 50) -> tuple[list[list[int]], int]:
    """Hermite basis of the two-sided ideal generated by all ``xy - yx``, and the pass count.

    Starts from the span of basis commutators and multiplies by basis
    elements on both sides until the lattice stops growing.  The pass count
    includes the final pass that confirms stability.
    """
    d = A.dim

    def vec(v: Mapping[int, int]) -> list[int]:
        return [v.get(k, 0) for k in range(d)]

    gens = []
    for i in range(d):
        for j in range(i + 1, d):
            v = dict(A.basis_product(i, j))
            for k, c in A.basis_product(j, i).items():
                v[k] = v.get(k, 0) - c
            if any(v.values()):
                gens.append(vec(v))
    lattice = dense.hermite_normal_form(gens, d)
    for passes in range(1, max_passes + 1):
        more = list(lattice)
        for row in lattice:
            x = {k: c for k, c in enumerate(row) if c}
            for b in range(d):
                more.append(vec(A.multiply({b: 1}, x)))
                more.append(vec(A.multiply(x, {b: 1})))
        new = dense.hermite_normal_form(more, d)
        if new == lattice:
            return lattice, passes
        lattice = new
    raise RuntimeError("commutator ideal did not stabilise")


def quotient_group(lattice: Sequence[Sequence[int]], dim: int) -> HomologyGroup:
    """``Z^dim / lattice`` for a lattice given by generating rows."""
    if not lattice:
        return HomologyGroup(dim)
    diag = dense.smith_diagonal([list(r) for r in lattice], dim)
    nonzero = [x for x in diag if x]
    return HomologyGroup.from_orders(dim - len(nonzero), nonzero)


def hs0_via_ideal(A: FinAlgebra) -> HomologyGroup:
    lattice, _ = commutator_ideal(A)
    return quotient_group(lattice, A.dim)


# -- layers --------------------------------------------------------------------

def _grading(A: FinAlgebra):
    g = A.grading
    if g is None:
        raise UngradedAlgebra(f"{A.name} carries no monoid grading")
    if not g.is_commutative():
        raise NonCommutativeMonoid(f"the grading monoid of {A.name} is not commutative")
    return g


def _reachable(g) -> dict[str, set[str]]:
    """Labels reachable from each label by multiplying further basis labels."""
    labels = set(g.layer_of_basis)
    if g.zero is not None:
        labels.add(g.zero)
    step = {u: {g.multiply(u, v) for v in g.layer_of_basis} for u in labels}
    out = {}
    for u in labels:
        seen, todo = {u}, [u]
        while todo:
            x = todo.pop()
            for y in step.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        out[u] = seen
    return out


def layer_keys(A: FinAlgebra, arity: int, label: str, reach=None) -> list[Key]:
    """Basis tuples of ``A^{⊗arity}`` whose product lies in layer ``label``, lexicographic."""
    g = _grading(A)
    reach = reach or _reachable(g)
    out: list[Key] = []

    def walk(prefix: list[int], current: str):
        if len(prefix) == arity:
            if current == label:
                out.append(tuple(prefix))
            return
        for b in range(A.dim):
            nxt = g.multiply(current, g.layer_of_basis[b])
            if label in reach.get(nxt, {nxt}):
                prefix.append(b)
                walk(prefix, nxt)
                prefix.pop()

    walk([], g.identity)
    return out


def layer_labels(A: FinAlgebra) -> list[str]:
    """Layer labels in basis order, then the absorbing zero (if any)."""
    g = _grading(A)
    out = list(dict.fromkeys(g.layer_of_basis))
    if g.zero is not None:
        out.append(g.zero)
    return out


def layer_complex(A: FinAlgebra, label: str) -> PartialComplex:
    reach = _reachable(_grading(A))
    keys = (layer_keys(A, 1, label, reach), layer_keys(A, 3, label, reach),
            layer_keys(A, 4, label, reach) + layer_keys(A, 1, label, reach))
    return build_partial_complex(A, keys, label=label)


def hs_layer(A: FinAlgebra, label: str) -> tuple[HomologyGroup, HomologyGroup]:
    cx = layer_complex(A, label)
    return cx.hs0(), cx.hs1()


@dataclass
class LayeredReport:
    algebra: str
    layers: dict[str, tuple[HomologyGroup, HomologyGroup]]
    zero_label: str | None = None

    def merged(self) -> tuple[HomologyGroup, HomologyGroup]:
        h0, h1 = HomologyGroup(), HomologyGroup()
        for a, b in self.layers.values():
            h0, h1 = h0 + a, h1 + b
        return h0, h1

    def as_dict(self) -> dict:
        return {label: {"hs0": a.as_dict(), "hs1": b.as_dict()}
                for label, (a, b) in self.layers.items()}


def hs_layered(A: FinAlgebra) -> LayeredReport:
    g = _grading(A)
    layers = {label: hs_layer(A, label) for label in layer_labels(A)}
    return LayeredReport(A.name, layers, g.zero)


def free_monoid_layer(m: int) -> HomologyGroup:
    """``HS_1(Z[t])`` in the layer ``t^m``, read off ``Z[M]`` with ``M = <s | s^{m+2} = s^{m+1}>``."""
    from .algebra import cyclic_monoid
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    A = cyclic_monoid(m + 2, m + 1)
    label = A.grading.layer_of_basis[m]
    return hs_layer(A, label)[1]


# -- HS_0-module structure on HS_1 -----------------------------------------------

def _action_formula(A: FinAlgebra, a: Vec, side: str) -> Formula:
    def f(key):
        x, y, z = key
        if side == "left":
            return [(1, [A.multiply(a, _e(x)), _e(y), _e(z)]),
                    (-1, [_e(x), A.multiply(_e(y), a), _e(z)]),
                    (1, [_e(x), _e(y), A.multiply(a, _e(z))])]
        return [(1, [A.multiply(_e(x), a), _e(y), _e(z)]),
                (-1, [_e(x), A.multiply(a, _e(y)), _e(z)]),
                (1, [_e(x), _e(y), A.multiply(_e(z), a)])]
    return f


@dataclass
class ModuleAction:
    """Action of each basis element of ``A`` on the generators of ``HS_1``.

    ``left[k]`` is a square matrix whose column ``j`` holds the coordinates of
    ``b_k . g_j``; coordinates of torsion generators are reduced mod their
    order.
    """

    presentation: HomologyPresentation
    left: list[list[list[int]]]
    right: list[list[list[int]]]
    basis_names: tuple[str, ...]

    @property
    def orders(self) -> list[int]:
        return self.presentation.orders

    def sides_agree(self) -> bool:
        return self.left == self.right

    def unit_acts_trivially(self, unit: Mapping[int, int]) -> bool:
        r = len(self.orders)
        total = [[sum(c * self.left[k][i][j] for k, c in unit.items()) for j in range(r)]
                 for i in range(r)]
        reduced = [[x % o if o else x for x in row] for row, o in zip(total, self.orders)]
        ident = [[int(i == j) % o if o else int(i == j) for j in range(r)]
                 for i, o in zip(range(r), self.orders)]
        return reduced == ident

    def orbit_map(self, g: Sequence[int]) -> list[list[int]]:
        """Columns ``b_k . g`` for a class ``g`` given in generator coordinates."""
        r = len(self.orders)
        cols = []
        for mat in self.left:
            col = [sum(mat[i][j] * g[j] for j in range(r)) for i in range(r)]
            cols.append([x % o if o else x for x, o in zip(col, self.orders)])
        return cols

    def relations_of(self, g: Sequence[int]) -> list[list[int]] | None:
        """Hermite basis of ``{x in Z^dim : x . g = 0}``, or ``None`` if ``g`` does not generate."""
        cols = self.orbit_map(g)
        r, d = len(self.orders), len(cols)
        tors = [i for i, o in enumerate(self.orders) if o]
        # [phi | diag(orders)] : Z^{d + #tors} -> Z^r
        mat = [[cols[k][i] for k in range(d)] + [self.orders[i] if i == t else 0 for t in tors]
               for i in range(r)]
        width = d + len(tors)
        image = dense.hermite_normal_form([[mat[i][j] for i in range(r)] for j in range(width)], r)
        if len(image) != r or any(image[i][i] != 1 for i in range(r)):
            return None
        kernel = dense.kernel_basis(mat, width) if r else [[int(i == j) for i in range(width)]
                                                          for j in range(width)]
        return dense.hermite_normal_form([col[:d] for col in kernel], d)

    def cyclic_generator(self) -> tuple[list[int], list[list[int]]] | None:
        """First class (in a fixed search order) generating ``HS_1`` as a module, with its relations."""
        r = len(self.orders)
        if any(o == 0 for o in self.orders):
            ranges = [range(-1, 2) if o == 0 else range(o) for o in self.orders]
        else:
            ranges = [range(o) for o in self.orders]
        candidates = [[int(i == j) for i in range(r)] for j in range(r)]
        count = 1
        for rg in ranges:
            count *= len(rg)
        if count <= 4096:
            candidates += [list(c) for c in itertools.product(*ranges)]
        for g in candidates:
            rel = self.relations_of(g)
            if rel is not None:
                return g, rel
        return None


def hs0_action_on_hs1(A: FinAlgebra) -> ModuleAction:
    cx = build_partial_complex(A)
    pres = homology_presentation(cx.d1, cx.d2, check=False)
    left, right = [], []
    for k in range(A.dim):
        for side, store in (("left", left), ("right", right)):
            act = assemble(cx.keys1, cx.keys1, _action_formula(A, _e(k), side)).column_dicts()
            mat_cols = []
            for gen in pres.generators:
                image = [0] * len(cx.keys1)
                for j, c in enumerate(gen):
                    if c:
                        for row, v in act[j].items():
                            image[row] += v * c
                mat_cols.append(pres.reduce(image))
            r = len(pres.generators)
            store.append([[mat_cols[j][i] for j in range(r)] for i in range(r)])
    return ModuleAction(pres, left, right, A.basis_names)


def ideal_lattice(A: FinAlgebra, generators: Iterable[Mapping[int, int]]) -> list[list[int]]:
    """Hermite basis of the two-sided ideal of ``A`` generated by the given elements."""
    d = A.dim
    rows = []
    for g in generators:
        for i in range(d):
            left = A.multiply({i: 1}, g)
            for j in range(d):
                v = A.multiply(left, {j: 1})
                rows.append([v.get(k, 0) for k in range(d)])
    return dense.hermite_normal_form(rows, d)


# -- comparison with cyclic homology ------------------------------------------------

@dataclass
class CyclicComparison:
    algebra: str
    d1c: SparseIntMatrix
    d2c: SparseIntMatrix
    gamma0: SparseIntMatrix
    gamma1: SparseIntMatrix
    gamma2: SparseIntMatrix
    hc0: HomologyGroup
    hc1: HomologyGroup
    hs0: HomologyGroup
    hs1: HomologyGroup
    induced0: list[list[int]]
    induced1: list[list[int]]
    diagnostics: dict = field(default_factory=dict)


def _first_bad_column(lhs: SparseIntMatrix, rhs: SparseIntMatrix) -> int | None:
    diff = lhs - rhs
    if diff.is_zero():
        return None
    return min(c for (_, c) in diff.entries)


def cyclic_low_complex(A: FinAlgebra) -> CyclicComparison:
    """Build the low-degree cyclic complex, the comparison map, and check both squares."""
    n = A.dim
    unit = A.unit
    k0, k1c = tensor_keys(n, 1), tensor_keys(n, 2)
    k2c = tensor_keys(n, 3) + tensor_keys(n, 1)
    sym = build_partial_complex(A)

    def d1c(key):
        a, b = key
        return [(1, [A.product((a, b))]), (-1, [A.product((b, a))])]

    def d2c(key):
        if len(key) == 1:
            (a,) = key
            return [(1, [unit, _e(a)]), (-1, [_e(a), unit])]
        a, b, c = key
        return [(1, [A.product((a, b)), _e(c)]), (-1, [_e(a), A.product((b, c))]),
                (1, [A.product((c, a)), _e(b)])]

    def g0(key):
        return [(1, [_e(key[0])])]

    def g1(key):
        a, b = key
        return [(1, [_e(a), _e(b), unit])]

    def g2(key):
        if len(key) == 1:
            (a,) = key
            return [(-1, [unit, unit, _e(a), unit]), (4, [_e(a)])]
        a, b, c = key
        return [(1, [_e(a), _e(b), _e(c), unit]),
                (-1, [unit, _e(a), A.product((b, c)), unit]),
                (1, [unit, A.product((c, a)), _e(b), unit]),
                (1, [unit, unit, A.product((a, b, c)), unit]),
                (-1, [_e(b), A.product((c, a)), unit, unit]),
                (-2, [A.product((a, b, c))]),
                (-1, [A.product((c, a, b))])]

    D1 = assemble(k1c, k0, d1c)
    D2 = assemble(k2c, k1c, d2c)
    check_composable(D1, D2)
    G0 = assemble(k0, sym.keys0, g0)
    G1 = assemble(k1c, sym.keys1, g1)
    G2 = assemble(k2c, sym.keys2, g2)

    bad = _first_bad_column(sym.d1 @ G1, G0 @ D1)
    if bad is not None:
        raise ChainMapViolation(f"square in degree 1 fails at {k1c[bad]}", witness=k1c[bad])
    bad = _first_bad_column(sym.d2 @ G2, G1 @ D2)
    if bad is not None:
        raise ChainMapViolation(f"square in degree 2 fails at {k2c[bad]}", witness=k2c[bad])

    # the restated boundary with "- d⊗ca⊗b": is it a complex, does gamma fit it?
    variant = assemble(sym.keys2, sym.keys1, _d2_formula(A, variant_sign=-1))
    diagnostics = {
        "variant_d2_is_complex": (sym.d1 @ variant).is_zero(),
        "variant_square_commutes": (variant @ G2) == (G1 @ D2),
    }

    zero0 = SparseIntMatrix.zeros(0, n)
    hc0p = homology_presentation(zero0, D1, check=False)
    hs0p = homology_presentation(zero0, sym.d1, check=False)
    hc1p = homology_presentation(D1, D2, check=False)
    hs1p = homology_presentation(sym.d1, sym.d2, check=False)
    induced0 = _induced(G0, hc0p, hs0p)
    induced1 = _induced(G1, hc1p, hs1p)
    return CyclicComparison(A.name, D1, D2, G0, G1, G2, hc0p.group, hc1p.group,
                            hs0p.group, hs1p.group, induced0, induced1, diagnostics)


def _induced(gamma: SparseIntMatrix, src: HomologyPresentation,
             dst: HomologyPresentation) -> list[list[int]]:
    """Matrix of the map on homology: column ``j`` is the image of source generator ``j``."""
    cols = []
    dense_gamma = gamma.to_dense()
    for gen in src.generators:
        image = [sum(row[k] * gen[k] for k in range(len(gen)) if gen[k]) for row in dense_gamma]
        cols.append(dst.reduce(image))
    r = len(dst.generators)
    return [[cols[j][i] for j in range(len(cols))] for i in range(r)]
