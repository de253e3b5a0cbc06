"""The complexes Sym_*^{(p)} and their symmetric-group structure.

A basis element of ``Sym_i^{(p)}`` is an unordered collection of disjoint,
non-empty *ordered* blocks (monomials in ``z_0 .. z_p``) covering all
letters, with ``p + 1 - i`` blocks.  Unordered means: swapping two adjacent
blocks of degrees ``a`` and ``b`` (degree = length - 1) costs a sign
``(-1)^{ab}``.  We store the representative whose blocks are sorted by their
smallest letter; :func:`canonicalize` returns that representative together with
the sign relating it to the input order.

The differential splits one monomial at one cut.  Cuts are numbered left to
right through the whole tensor word (block ``j`` owns the next ``deg Z_j``
numbers) and ``d = sum_c (-1)^c (cut c)``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from math import factorial, isqrt
from typing import Iterable, Iterator, Mapping, Sequence

from .deltas import Permutation, block_transposition
from .errors import ArityMismatch, DegreeOutOfRange, InvalidCover
from .linalg.homology import HomologyGroup, homology
from .linalg.snf import check_characteristic, rank_over_field
from .linalg.sparse import SparseIntMatrix

Block = tuple[int, ...]
Basis = tuple[Block, ...]


def _validate_cover(blocks: Sequence[Sequence[int]]) -> int:
    letters = [x for b in blocks for x in b]
    if any(len(b) == 0 for b in blocks):
        raise InvalidCover("blocks must be non-empty")
    if sorted(letters) != list(range(len(letters))):
        raise InvalidCover(f"blocks {list(map(list, blocks))} do not cover 0..p exactly once")
    return len(letters) - 1


def canonicalize(blocks: Iterable[Sequence[int]], check: bool = True) -> tuple[int, Basis]:
    """Sort blocks by smallest letter; return ``(sign, sorted blocks)``.

    Only pairs of odd-degree blocks (even length) contribute to the sign.

    >>> canonicalize([[1], [0, 2]])
    (1, ((0, 2), (1,)))
    >>> canonicalize([[2, 3], [0, 1]])
    (-1, ((0, 1), (2, 3)))
    """
    blocks = [tuple(b) for b in blocks]
    if check:
        _validate_cover(blocks)
    order = sorted(range(len(blocks)), key=lambda k: min(blocks[k]))
    odd = [k for k in order if len(blocks[k]) % 2 == 0]
    # inversions among odd-degree blocks between input order and sorted order
    inv = 0
    for x in range(len(odd)):
        for y in range(x + 1, len(odd)):
            if odd[x] > odd[y]:
                inv += 1
    return (-1 if inv % 2 else 1), tuple(blocks[k] for k in order)


def degree_of(element: Sequence[Sequence[int]]) -> int:
    return sum(len(b) - 1 for b in element)


def _check_degree(p: int, i: int) -> None:
    if p < 0 or not 0 <= i <= p:
        raise DegreeOutOfRange(f"Sym_i^(p) needs 0 <= i <= p, got p={p}, i={i}")


def _set_partitions(items: list[int], k: int) -> Iterator[list[list[int]]]:
    """Set partitions of ``items`` into exactly ``k`` blocks (blocks keep item order)."""
    if k == 0:
        if not items:
            yield []
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    # first item alone
    for part in _set_partitions(rest, k - 1):
        yield [[first]] + part
    # first item joins a block of a k-partition of the rest
    for part in _set_partitions(rest, k):
        for j in range(k):
            yield part[:j] + [[first] + part[j]] + part[j + 1:]


@lru_cache(maxsize=None)
def sym_basis(p: int, i: int) -> tuple[Basis, ...]:
    """Canonical basis of ``Sym_i^{(p)}``, sorted.

    >>> len(sym_basis(2, 1))
    6
    """
    _check_degree(p, i)
    k = p + 1 - i
    out = []
    for part in _set_partitions(list(range(p + 1)), k):
        part.sort(key=min)
        for words in itertools.product(*(itertools.permutations(b) for b in part)):
            out.append(tuple(words))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(p: int, i: int) -> dict[Basis, int]:
    return {b: n for n, b in enumerate(sym_basis(p, i))}


def lah(n: int, k: int) -> int:
    """Lah number ``L(n, k) = C(n-1, k-1) n! / k!``."""
    if n == k == 0:
        return 1
    if k < 1 or k > n:
        return 0
    return factorial(n - 1) // (factorial(k - 1) * factorial(n - k)) * factorial(n) // factorial(k)


def boundary_terms(element: Basis) -> dict[Basis, int]:
    """``d`` of a single (canonical or not) basis word, canonicalized."""
    out: dict[Basis, int] = {}
    c = 0
    for j, block in enumerate(element):
        for cut in range(1, len(block)):
            pieces = element[:j] + (block[:cut], block[cut:]) + element[j + 1:]
            sign, key = canonicalize(pieces, check=False)
            v = out.get(key, 0) + (-sign if c % 2 else sign)
            if v:
                out[key] = v
            else:
                del out[key]
            c += 1
    return out


@lru_cache(maxsize=None)
def differential(p: int, i: int) -> SparseIntMatrix:
    """Matrix of ``d : Sym_i^{(p)} -> Sym_{i-1}^{(p)}`` in the canonical bases."""
    _check_degree(p, i)
    if i == 0:
        raise DegreeOutOfRange("there is no differential out of degree 0")
    target = _basis_index(p, i - 1)
    entries = {}
    for col, element in enumerate(sym_basis(p, i)):
        for key, v in boundary_terms(element).items():
            entries[target[key], col] = v
    return SparseIntMatrix(len(target), len(sym_basis(p, i)), entries)


def _d_out(p: int, i: int) -> SparseIntMatrix:
    n = len(sym_basis(p, i))
    return differential(p, i) if i > 0 else SparseIntMatrix.zeros(0, n)


def _d_in(p: int, i: int) -> SparseIntMatrix:
    n = len(sym_basis(p, i))
    return differential(p, i + 1) if i < p else SparseIntMatrix.zeros(n, 0)


def betti_numbers(p: int, characteristic: int = 0) -> list[int]:
    check_characteristic(characteristic)
    if p < 0:
        raise DegreeOutOfRange(f"p must be >= 0, got {p}")
    ranks = [0] + [rank_over_field(differential(p, i), characteristic) for i in range(1, p + 1)] + [0]
    return [len(sym_basis(p, i)) - ranks[i] - ranks[i + 1] for i in range(p + 1)]


def poincare_polynomial(p: int, characteristic: int = 0) -> list[int]:
    """Coefficient list ``[b_0, b_1, ..., b_p]`` of the Poincaré polynomial."""
    return betti_numbers(p, characteristic)


def format_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    """Highest power first.

    >>> format_polynomial([0, 0, 0, 1, 272, 120])
    '120*t^5+272*t^4+t^3'
    >>> format_polynomial([1])
    '1'
    """
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def integral_homology(p: int, i: int) -> HomologyGroup:
    _check_degree(p, i)
    return homology(_d_out(p, i), _d_in(p, i), check=False)


def verify_square_zero(p: int) -> bool:
    for i in range(2, p + 1):
        if not (differential(p, i - 1) @ differential(p, i)).is_zero():
            return False
    return True


# -- chains ----------------------------------------------------------------

class SymElement:
    """A homogeneous integer combination of basis elements of ``Sym_i^{(p)}``."""

    __slots__ = ("p", "degree", "terms")

    def __init__(self, p: int, degree: int, terms: Mapping[Basis, int] | None = None):
        self.p = p
        self.degree = degree
        self.terms: dict[Basis, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_blocks(cls, blocks: Iterable[Sequence[int]], coeff: int = 1) -> SymElement:
        blocks = [tuple(b) for b in blocks]
        p = _validate_cover(blocks)
        sign, key = canonicalize(blocks, check=False)
        return cls(p, degree_of(key), {key: sign * coeff})

    @classmethod
    def from_vector(cls, p: int, degree: int, vec: Mapping[int, int] | Sequence[int]) -> SymElement:
        basis = sym_basis(p, degree)
        items = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
        return cls(p, degree, {basis[k]: v for k, v in items if v})

    def to_vector(self) -> dict[int, int]:
        index = _basis_index(self.p, self.degree)
        return {index[k]: v for k, v in self.terms.items()}

    def is_zero(self) -> bool:
        return not self.terms

    def _combine(self, other: SymElement, scale: int) -> SymElement:
        if (self.p, self.degree) != (other.p, other.degree):
            raise ArityMismatch("cannot add elements of different (p, degree)")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + scale * v
        return SymElement(self.p, self.degree, out)

    def __add__(self, other: SymElement) -> SymElement:
        return self._combine(other, 1)

    def __sub__(self, other: SymElement) -> SymElement:
        return self._combine(other, -1)

    def __neg__(self) -> SymElement:
        return SymElement(self.p, self.degree, {k: -v for k, v in self.terms.items()})

    def __rmul__(self, c: int) -> SymElement:
        return SymElement(self.p, self.degree, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymElement) and (self.p, self.degree) == (other.p, other.degree)
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"SymElement(p={self.p}, degree={self.degree}, {format_element(self)})"

    def d(self) -> SymElement:
        out: dict[Basis, int] = defaultdict(int)
        for k, v in self.terms.items():
            for key, c in boundary_terms(k).items():
                out[key] += v * c
        return SymElement(self.p, self.degree - 1, out)

    def permute(self, sigma: Permutation) -> SymElement:
        return permute(sigma, self)

    def boxtimes(self, other: SymElement) -> SymElement:
        return boxtimes(self, other)


def format_element(w: SymElement) -> str:
    parts = []
    for k in sorted(w.terms):
        v = w.terms[k]
        word = "⊗".join("".join(f"z{x}" for x in b) for b in k)
        coeff = "" if v == 1 else "-" if v == -1 else f"{v}*"
        parts.append(f"{coeff}{word}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def permute(sigma: Permutation, w: SymElement) -> SymElement:
    """Relabel ``z_k -> z_{sigma(k)}`` in every term and canonicalize."""
    if len(sigma) != w.p + 1:
        raise ArityMismatch(f"permutation on {len(sigma)} letters cannot act on Sym^({w.p})")
    out: dict[Basis, int] = defaultdict(int)
    im = sigma.images
    for k, v in w.terms.items():
        sign, key = canonicalize([tuple(im[x] for x in b) for b in k], check=False)
        out[key] += sign * v
    return SymElement(w.p, w.degree, out)


def boxtimes(w: SymElement, v: SymElement) -> SymElement:
    """``W ⊠ V``: shift the letters of ``V`` past those of ``W`` and juxtapose."""
    shift = w.p + 1
    out: dict[Basis, int] = defaultdict(int)
    for a, x in w.terms.items():
        for b, y in v.terms.items():
            blocks = a + tuple(tuple(t + shift for t in blk) for blk in b)
            sign, key = canonicalize(blocks, check=False)
            out[key] += sign * x * y
    return SymElement(w.p + v.p + 1, w.degree + v.degree, out)


def skew_twist(p: int, q: int) -> Permutation:
    """The block transposition carrying ``V ⊠ W`` to the letters of ``W ⊠ V`` (``W`` on ``p + 1`` letters)."""
    return block_transposition(q, p).as_permutation()


def b_cycle(p: int) -> SymElement:
    """``b_p = sum_j (-1)^{jp} tau^j (z_0 z_1 ... z_p)`` with ``tau = (0, p, p-1, ..., 1)``."""
    if p < 0:
        raise DegreeOutOfRange(f"p must be >= 0, got {p}")
    tau = Permutation.cycle(p + 1)
    top = SymElement(p, p, {(tuple(range(p + 1)),): 1})
    out = SymElement(p, p)
    power = Permutation.identity(p + 1)
    for j in range(p + 1):
        out = out + ((-1) ** (j * p)) * permute(power, top)
        power = tau * power
    return out


def top_generators(p: int) -> list[SymElement]:
    """``sigma(b_p)`` for ``sigma`` fixing ``0``: one per coset of the cyclic subgroup."""
    b = b_cycle(p)
    out = []
    for rest in itertools.permutations(range(1, p + 1)):
        out.append(permute(Permutation((0,) + rest), b))
    return out


# -- partition decomposition and special representations -------------------

def block_type(element: Basis) -> tuple[int, ...]:
    return tuple(sorted((len(b) for b in element), reverse=True))


def decompose_by_partition(p: int, i: int) -> dict[tuple[int, ...], list[Basis]]:
    """Group the basis of ``Sym_i^{(p)}`` by multiset of block sizes."""
    _check_degree(p, i)
    out: dict[tuple[int, ...], list[Basis]] = defaultdict(list)
    for element in sym_basis(p, i):
        out[block_type(element)].append(element)
    return dict(sorted(out.items(), reverse=True))


def partition_dimension(lam: Sequence[int]) -> int:
    """``(p+1)! / prod_s m_s!`` where ``m_s`` counts parts equal to ``s``."""
    n = sum(lam)
    out = factorial(n)
    for s in set(lam):
        out //= factorial(list(lam).count(s))
    return out


def special_reps(lam: Sequence[int]) -> tuple[bool, bool]:
    """``(has_alternating, has_trivial)`` for ``Sym_lambda``.

    >>> special_reps([2, 1]), special_reps([2, 2]), special_reps([3, 3])
    ((True, True), (False, False), (False, True))
    """
    lam = list(lam)
    repeated = {s for s in lam if lam.count(s) > 1}
    return (not repeated, not any(s % 2 == 0 for s in repeated))


def standard_element(lam: Sequence[int]) -> SymElement:
    """The element whose blocks are runs of consecutive letters with sizes ``lam``."""
    blocks, start = [], 0
    for s in lam:
        blocks.append(tuple(range(start, start + s)))
        start += s
    return SymElement.from_blocks(blocks)


def reynolds_sum(w: SymElement, alternating: bool = True) -> SymElement:
    """``sum_sigma sign(sigma)^e sigma(w)`` over the whole symmetric group."""
    out = SymElement(w.p, w.degree)
    for images in itertools.permutations(range(w.p + 1)):
        sigma = Permutation(images)
        term = permute(sigma, w)
        out = out + (sigma.sign() if alternating else 1) * term
    return out


def lowest_alternating_degree(p: int) -> int:
    """``p + 1 - r`` where ``r`` is the largest integer with ``r(r+1)/2 <= p + 1``."""
    if p < 0:
        raise DegreeOutOfRange(f"p must be >= 0, got {p}")
    r = (isqrt(8 * (p + 1) + 1) - 1) // 2
    return p + 1 - r


def connectivity_bound(p: int) -> int:
    """Degrees ``i <= floor(2(p-1)/3)`` carry no reduced homology."""
    return (2 * (p - 1)) // 3
