"""Finite-rank unital associative algebras over the integers.

An algebra is given by structure constants on a basis ``b_0 .. b_{d-1}``:
``b_i * b_j = sum_k c[i,j,k] b_k``.  Commutative monoid algebras additionally
carry a :class:`MonoidGrading`, which is what the layered computations in
:mod:`symhom.hslow` need.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .deltas import DeltaSMorphism
from .errors import (ArityMismatch, NoIdentity, NotAssociative, NotUnital, ShapeMismatch,
                     UngradedAlgebra)

Vector = dict[int, int]


@dataclass(frozen=True)
class MonoidGrading:
    """Grading of a basis by a finite commutative monoid (optionally with zero).

    ``zero`` names an absorbing element that is *not* part of the algebra
    basis: products landing there are zero in the algebra.
    """

    layer_of_basis: tuple[str, ...]
    layer_product: Mapping[tuple[str, str], str]
    identity: str
    zero: str | None = None

    def multiply(self, u: str, v: str) -> str:
        if u == self.zero or v == self.zero:
            return self.zero
        return self.layer_product[u, v]

    @property
    def labels(self) -> list[str]:
        seen = dict.fromkeys(self.layer_of_basis)
        for (u, v), w in self.layer_product.items():
            seen.setdefault(u)
            seen.setdefault(v)
            seen.setdefault(w)
        if self.zero is not None:
            seen.pop(self.zero, None)
        return list(seen)

    def is_commutative(self) -> bool:
        return all(self.layer_product.get((v, u)) == w
                   for (u, v), w in self.layer_product.items())


class FinAlgebra:
    """A validated algebra given by structure constants.

    ``structure`` maps ``(i, j)`` to the coefficient vector of ``b_i * b_j``,
    either as a dense sequence of length ``dim`` or a sparse ``{k: c}`` map.
    Missing pairs multiply to zero.
    """

    def __init__(self, dim: int, unit: Sequence[int],
                 structure: Mapping[tuple[int, int], Sequence[int] | Mapping[int, int]],
                 basis_names: Sequence[str] | None = None,
                 grading: MonoidGrading | None = None,
                 name: str | None = None, check: bool = True):
        if dim < 1:
            raise ShapeMismatch("an algebra needs dim >= 1")
        if len(unit) != dim:
            raise ShapeMismatch(f"unit has length {len(unit)}, expected {dim}")
        self.dim = dim
        self.name = name or f"algebra(dim={dim})"
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"b{i}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise ShapeMismatch("basis_names has the wrong length")
        self.unit: Vector = {k: int(c) for k, c in enumerate(unit) if c}
        table: list[list[tuple[tuple[int, int], ...]]] = [[() for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ShapeMismatch(f"structure index ({i}, {j}) out of range")
            if isinstance(vec, Mapping):
                items = {int(k): int(c) for k, c in vec.items() if c}
            else:
                if len(vec) != dim:
                    raise ShapeMismatch(f"product vector for ({i}, {j}) has length {len(vec)}")
                items = {k: int(c) for k, c in enumerate(vec) if c}
            if any(not 0 <= k < dim for k in items):
                raise ShapeMismatch(f"product vector for ({i}, {j}) out of range")
            table[i][j] = tuple(sorted(items.items()))
        self._table = table
        self.grading = grading
        self._prod_cache: dict[tuple[int, ...], Vector] = {}
        if check:
            self._check_unit()
            self._check_associative()
            if grading is not None:
                self._check_grading()

    # -- structure -------------------------------------------------------

    def basis_product(self, i: int, j: int) -> Vector:
        return dict(self._table[i][j])

    def multiply(self, x: Mapping[int, int], y: Mapping[int, int]) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self._table[i][j]:
                    v = out.get(k, 0) + a * b * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def product(self, indices: Sequence[int]) -> Vector:
        """Ordered product of basis elements; the empty product is the unit."""
        key = tuple(indices)
        hit = self._prod_cache.get(key)
        if hit is not None:
            return hit
        if not key:
            res = dict(self.unit)
        elif len(key) == 1:
            res = {key[0]: 1}
        else:
            res = self.multiply(self.product(key[:-1]), {key[-1]: 1})
        self._prod_cache[key] = res
        return res

    def is_commutative(self) -> bool:
        return all(self._table[i][j] == self._table[j][i]
                   for i in range(self.dim) for j in range(i))

    def _check_unit(self) -> None:
        for i in range(self.dim):
            e = {i: 1}
            if self.multiply(self.unit, e) != e:
                raise NotUnital(f"unit * {self.basis_names[i]} != {self.basis_names[i]}", witness=i)
            if self.multiply(e, self.unit) != e:
                raise NotUnital(f"{self.basis_names[i]} * unit != {self.basis_names[i]}", witness=i)

    def _check_associative(self) -> None:
        d = self.dim
        for i, j, k in itertools.product(range(d), repeat=3):
            left = self.multiply(dict(self._table[i][j]), {k: 1})
            right = self.multiply({i: 1}, dict(self._table[j][k]))
            if left != right:
                names = self.basis_names
                raise NotAssociative(
                    f"({names[i]}*{names[j]})*{names[k]} != {names[i]}*({names[j]}*{names[k]})",
                    witness=(i, j, k))

    def _check_grading(self) -> None:
        g = self.grading
        if len(g.layer_of_basis) != self.dim:
            raise ShapeMismatch("grading must label every basis element")
        for i, j in itertools.product(range(self.dim), repeat=2):
            w = g.multiply(g.layer_of_basis[i], g.layer_of_basis[j])
            for k, _ in self._table[i][j]:
                if g.layer_of_basis[k] != w:
                    raise UngradedAlgebra(
                        f"{self.basis_names[i]}*{self.basis_names[j]} leaves layer {w}")

    def __repr__(self) -> str:
        return f"FinAlgebra({self.name!r}, dim={self.dim})"

    # -- serialisation ---------------------------------------------------

    def to_json(self) -> dict:
        structure = [[i, j, k, c] for i in range(self.dim) for j in range(self.dim)
                     for k, c in self._table[i][j]]
        doc = {"name": self.name, "dim": self.dim, "basis": list(self.basis_names),
               "unit": [self.unit.get(k, 0) for k in range(self.dim)],
               "structure": structure}
        if self.grading is not None:
            g = self.grading
            doc["grading"] = {
                "layer_of_basis": list(g.layer_of_basis),
                "product": [[u, v, w] for (u, v), w in sorted(g.layer_product.items())],
                "identity": g.identity,
                "zero": g.zero,
            }
        return doc

    @classmethod
    def from_json(cls, doc: Mapping | str) -> FinAlgebra:
        if isinstance(doc, str):
            doc = json.loads(doc)
        dim = int(doc["dim"])
        structure: dict[tuple[int, int], dict[int, int]] = defaultdict(dict)
        for i, j, k, c in doc["structure"]:
            structure[i, j][k] = structure[i, j].get(k, 0) + c
        grading = None
        if doc.get("grading"):
            g = doc["grading"]
            grading = MonoidGrading(
                layer_of_basis=tuple(map(str, g["layer_of_basis"])),
                layer_product={(str(u), str(v)): str(w) for u, v, w in g["product"]},
                identity=str(g["identity"]),
                zero=None if g.get("zero") is None else str(g["zero"]))
        return cls(dim, doc["unit"], structure, basis_names=doc.get("basis"),
                   grading=grading, name=doc.get("name"))


def build_algebra(dim: int, unit: Sequence[int],
                  structure: Mapping[tuple[int, int], Sequence[int] | Mapping[int, int]]
                  | Iterable[Sequence[int]], **kwargs) -> FinAlgebra:
    """Validate and build an algebra.

    ``structure`` is either a mapping ``(i, j) -> vector`` or an iterable of
    ``(i, j, k, c)`` quadruples as in the JSON file format.
    """
    if not isinstance(structure, Mapping):
        quads: dict[tuple[int, int], dict[int, int]] = defaultdict(dict)
        for i, j, k, c in structure:
            quads[i, j][k] = quads[i, j].get(k, 0) + c
        structure = quads
    return FinAlgebra(dim, unit, structure, **kwargs)


# -- tensors -------------------------------------------------------------

@dataclass
class AlgebraTensor:
    """Element of ``A^{⊗ arity}`` as a sparse map from basis-index tuples."""

    arity: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, c in self.terms.items():
            key = tuple(key)
            if len(key) != self.arity:
                raise ArityMismatch(f"tensor term {key} does not have arity {self.arity}")
            if c:
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def simple(cls, *indices: int) -> AlgebraTensor:
        return cls(len(indices), {tuple(indices): 1})

    def __add__(self, other: AlgebraTensor) -> AlgebraTensor:
        if other.arity != self.arity:
            raise ArityMismatch("cannot add tensors of different arity")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return AlgebraTensor(self.arity, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraTensor) and self.arity == other.arity
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms


def tensor_of_vectors(factors: Sequence[Mapping[int, int]]) -> dict[tuple[int, ...], int]:
    """Expand ``v_0 ⊗ v_1 ⊗ ...`` into basis tuples."""
    out: dict[tuple[int, ...], int] = {(): 1}
    for vec in factors:
        nxt: dict[tuple[int, ...], int] = {}
        for key, c in out.items():
            for k, a in vec.items():
                nk = key + (k,)
                v = nxt.get(nk, 0) + c * a
                if v:
                    nxt[nk] = v
                else:
                    nxt.pop(nk, None)
        out = nxt
        if not out:
            break
    return out


def apply_morphism(f: DeltaSMorphism, t: AlgebraTensor, A: FinAlgebra) -> AlgebraTensor:
    """Act on ``t`` by the symmetric bar construction: multiply factors block by block."""
    if f.source + 1 != t.arity:
        raise ArityMismatch(f"{f} needs a tensor of arity {f.source + 1}, got {t.arity}")
    out: dict[tuple[int, ...], int] = {}
    for key, c in t.terms.items():
        parts = [A.product([key[x] for x in block]) for block in f.blocks]
        for nk, a in tensor_of_vectors(parts).items():
            out[nk] = out.get(nk, 0) + c * a
    return AlgebraTensor(f.target + 1, out)


def layer_of(t: Sequence[int], grading_or_algebra: MonoidGrading | FinAlgebra) -> str:
    """Monoid label of the product of the tuple's factors."""
    g = grading_or_algebra
    if isinstance(g, FinAlgebra):
        if g.grading is None:
            raise UngradedAlgebra(f"{g.name} carries no monoid grading")
        g = g.grading
    label = g.identity
    for i in t:
        label = g.multiply(label, g.layer_of_basis[i])
    return label


# -- presets -------------------------------------------------------------

_VARS = "tuvw"


def _monomial_name(expo: Sequence[int]) -> str:
    names = _VARS if len(expo) <= len(_VARS) else [f"x{i + 1}" for i in range(len(expo))]
    parts = []
    for var, e in zip(names, expo):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) or "1"


def trunc_poly(exponents: Sequence[int]) -> FinAlgebra:
    """``Z[x_1..x_r]/(x_1^{e_1}, ..., x_r^{e_r})`` with its monomial grading.

    The basis is the exponent vectors in lexicographic order, so
    ``trunc_poly([3, 2])`` has basis ``1, u, t, t*u, t^2, t^2*u``.
    """
    exponents = list(exponents)
    if not exponents or any(e < 2 for e in exponents):
        raise ShapeMismatch("truncation exponents must all be >= 2")
    monos = list(itertools.product(*(range(e) for e in exponents)))
    index = {m: i for i, m in enumerate(monos)}
    names = [_monomial_name(m) for m in monos]
    structure = {}
    product = {}
    for (i, a), (j, b) in itertools.product(enumerate(monos), repeat=2):
        c = tuple(x + y for x, y in zip(a, b))
        if c in index:
            structure[i, j] = {index[c]: 1}
            product[names[i], names[j]] = names[index[c]]
        else:
            product[names[i], names[j]] = "0"
    grading = MonoidGrading(tuple(names), product, identity=names[0], zero="0")
    unit = [1] + [0] * (len(monos) - 1)
    label = ",".join(map(str, exponents))
    return FinAlgebra(len(monos), unit, structure, basis_names=names, grading=grading,
                      name=f"trunc_poly({label})")


def monoid_ring(table: Sequence[Sequence[int]], labels: Sequence[str],
                zero: int | None = None, name: str | None = None) -> FinAlgebra:
    """``Z[M]`` from a multiplication table ``table[a][b] = index of a*b``.

    If ``zero`` is given, that element is absorbing and identified with the
    zero of the algebra (a contracted monoid algebra).  Commutative tables
    produce a graded algebra.
    """
    n = len(labels)
    if len(table) != n or any(len(row) != n for row in table):
        raise ShapeMismatch("multiplication table must be square of size len(labels)")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociative(f"({labels[a]}{labels[b]}){labels[c]} != "
                                 f"{labels[a]}({labels[b]}{labels[c]})", witness=(a, b, c))
    ident = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not ident:
        raise NoIdentity("monoid table has no two-sided identity")
    e = ident[0]
    if zero is not None and any(table[zero][x] != zero or table[x][zero] != zero for x in range(n)):
        raise NotAssociative(f"{labels[zero]} is not absorbing")
    elems = [x for x in range(n) if x != zero]
    index = {x: i for i, x in enumerate(elems)}
    structure = {}
    for a, b in itertools.product(elems, repeat=2):
        c = table[a][b]
        if c != zero:
            structure[index[a], index[b]] = {index[c]: 1}
    unit = [0] * len(elems)
    unit[index[e]] = 1
    names = [labels[x] for x in elems]
    commutative = all(table[a][b] == table[b][a] for a in range(n) for b in range(n))
    grading = None
    if commutative:
        prod = {(labels[a], labels[b]): labels[table[a][b]]
                for a in range(n) for b in range(n)}
        grading = MonoidGrading(tuple(names), prod, identity=labels[e],
                                zero=None if zero is None else labels[zero])
    return FinAlgebra(len(elems), unit, structure, basis_names=names, grading=grading,
                      name=name or f"monoid_ring({n})")


def _power_name(sym: str, k: int) -> str:
    return "1" if k == 0 else sym if k == 1 else f"{sym}^{k}"


def cyclic_group(n: int) -> FinAlgebra:
    labels = [_power_name("g", k) for k in range(n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return monoid_ring(table, labels, name=f"cyclic_group({n})")


def abelian_group(*orders: int) -> FinAlgebra:
    """Group ring of ``C_{n1} x C_{n2} x ...``; elements in lexicographic order."""
    elems = list(itertools.product(*(range(n) for n in orders)))
    index = {x: i for i, x in enumerate(elems)}
    gens = "ghkl" if len(orders) <= 4 else [f"g{i + 1}" for i in range(len(orders))]
    labels = ["*".join(_power_name(s, k) for s, k in zip(gens, x) if k) or "1" for x in elems]
    table = [[index[tuple((a + b) % n for a, b, n in zip(x, y, orders))] for y in elems]
             for x in elems]
    return monoid_ring(table, labels, name=f"abelian_group({','.join(map(str, orders))})")


def cyclic_monoid(p: int, q: int) -> FinAlgebra:
    """``Z[M^p_q]`` where ``M^p_q = <s | s^p = s^q>``, ``0 <= q < p``; dimension ``p``."""
    if not 0 <= q < p:
        raise ShapeMismatch(f"cyclic monoid needs 0 <= q < p, got p={p}, q={q}")

    def reduce(k):
        return k if k < p else q + (k - q) % (p - q)

    labels = [_power_name("s", k) for k in range(p)]
    table = [[reduce(a + b) for b in range(p)] for a in range(p)]
    return monoid_ring(table, labels, name=f"cyclic_monoid({p},{q})")


def symmetric_group(n: int) -> FinAlgebra:
    perms = list(itertools.permutations(range(n)))
    index = {x: i for i, x in enumerate(perms)}
    labels = ["".join(map(str, x)) for x in perms]
    # (a*b)(i) = a(b(i))
    table = [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    return monoid_ring(table, labels, name=f"symmetric_group({n})")


def matrix_ring(n: int) -> FinAlgebra:
    """``M_n(Z)`` on the elementary matrices ``E_ij`` (row-major order)."""
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    structure = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                structure[a, b] = {idx[i, l]: 1}
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    names = [f"E{i}{j}" for i in range(n) for j in range(n)]
    return FinAlgebra(n * n, unit, structure, basis_names=names, name=f"matrix_ring({n})")


def _quaternion_group() -> tuple[list[str], list[list[int]]]:
    # elements (sign, unit) with unit in 1, i, j, k
    mult = {("1", x): (1, x) for x in "1ijk"}
    mult.update({(x, "1"): (1, x) for x in "1ijk"})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    index = {x: n for n, x in enumerate(elems)}
    table = []
    for s, u in elems:
        row = []
        for t, v in elems:
            r, w = mult[u, v]
            row.append(index[(s * t * r, w)])
        table.append(row)
    return labels, table


def quaternion_units() -> FinAlgebra:
    """Group ring ``Z[Q_8]`` of the eight quaternion units (dimension 8)."""
    labels, table = _quaternion_group()
    return monoid_ring(table, labels, name="quaternion_units")


def lipschitz_quaternions() -> FinAlgebra:
    """``Z<i,j,k>`` with ``i^2 = j^2 = k^2 = ijk = -1`` (dimension 4)."""
    names = ["1", "i", "j", "k"]
    signs = {("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
             ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
             ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
    structure = {}
    for a, x in enumerate(names):
        for b, y in enumerate(names):
            if x == "1":
                s, z = 1, y
            elif y == "1":
                s, z = 1, x
            else:
                s, z = signs[x, y]
            structure[a, b] = {names.index(z): s}
    return FinAlgebra(4, [1, 0, 0, 0], structure, basis_names=names,
                      name="lipschitz_quaternions")


def integers() -> FinAlgebra:
    return FinAlgebra(1, [1], {(0, 0): [1]}, basis_names=["1"], name="integers",
                      grading=MonoidGrading(("1",), {("1", "1"): "1"}, identity="1"))


PRESETS = {
    "trunc_poly": lambda *e: trunc_poly(e),
    "cyclic_group": cyclic_group,
    "abelian_group": abelian_group,
    "symmetric_group": symmetric_group,
    "matrix_ring": matrix_ring,
    "cyclic_monoid": cyclic_monoid,
    "quaternion_units": quaternion_units,
    "lipschitz_quaternions": lipschitz_quaternions,
    "integers": integers,
}


def preset(spec: str) -> FinAlgebra:
    """Build a preset from text like ``trunc_poly(3,2)`` or ``quaternion_units``."""
    spec = spec.strip()
    name, _, rest = spec.partition("(")
    name = name.strip()
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}")
    args: list[int] = []
    if rest:
        if not rest.endswith(")"):
            raise ValueError(f"malformed preset {spec!r}")
        inner = rest[:-1].strip()
        if inner:
            args = [int(a) for a in inner.split(",")]
    return PRESETS[name](*args)
