"""Morphisms of the categories ΔS and ΔS₊ in tensor (block) notation.

A morphism ``[n] -> [m]`` is stored as ``m + 1`` blocks.  Block ``j`` lists,
in order, the source points sent to ``j``; reading a block left to right gives
the ordered monomial ``x_{i0} x_{i1} ...`` of that tensor factor.  An empty
block is the factor ``1``.

>>> f = DeltaSMorphism([[4, 0], [], [2, 3], [1]])
>>> g = DeltaSMorphism([[1, 6, 0], [7, 4], [], [3], [2, 5]])
>>> print(compose(f, g))
[[2,5,1,6,0],[],[3],[7,4]]
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch, DomainError, InvalidMorphism

__all__ = [
    "DeltaSMorphism",
    "Permutation",
    "identity",
    "iota",
    "compose",
    "enumerate_morphisms",
    "count",
    "epi_mono_factor",
    "monoidal_product",
    "block_transposition",
    "parse_morphism",
    "format_morphism",
]


@dataclass(frozen=True)
class DeltaSMorphism:
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        blocks = tuple(tuple(int(x) for x in b) for b in blocks)
        points = [x for b in blocks for x in b]
        if sorted(points) != list(range(len(points))):
            raise InvalidMorphism(
                f"blocks must cover 0..n exactly once, got {list(map(list, blocks))}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def source(self) -> int:
        return sum(len(b) for b in self.blocks) - 1

    @property
    def target(self) -> int:
        return len(self.blocks) - 1

    @property
    def is_epi(self) -> bool:
        return all(self.blocks)

    @property
    def is_mono(self) -> bool:
        return all(len(b) <= 1 for b in self.blocks)

    @property
    def is_iso(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def point_map(self) -> list[int]:
        """Underlying set map: entry ``i`` is the block receiving point ``i``."""
        out = [0] * (self.source + 1)
        for j, b in enumerate(self.blocks):
            for x in b:
                out[x] = j
        return out

    def as_permutation(self) -> Permutation:
        if not self.is_iso:
            raise InvalidMorphism(f"{self} is not an automorphism")
        return Permutation(self.point_map())

    def __matmul__(self, other: DeltaSMorphism) -> DeltaSMorphism:
        return compose(self, other)

    def __str__(self) -> str:
        return format_morphism(self)

    def __repr__(self) -> str:
        return f"DeltaSMorphism({format_morphism(self)})"


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..n}``; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidMorphism(f"not a permutation: {list(images)}")
        object.__setattr__(self, "images", images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        return Permutation(self.images[j] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def sign(self) -> int:
        seen = [False] * len(self.images)
        s = 1
        for i in range(len(self.images)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(range(size))

    @classmethod
    def cycle(cls, size: int) -> Permutation:
        """The cycle ``(0, n, n-1, ..., 1)`` on ``size = n + 1`` letters."""
        return cls((i - 1) % size for i in range(size))

    def to_morphism(self) -> DeltaSMorphism:
        blocks = [[] for _ in self.images]
        for i, j in enumerate(self.images):
            blocks[j].append(i)
        return DeltaSMorphism(blocks)


def identity(n: int) -> DeltaSMorphism:
    return DeltaSMorphism([i] for i in range(n + 1))


def iota(m: int) -> DeltaSMorphism:
    """The unique morphism ``[-1] -> [m]``."""
    return DeltaSMorphism([] for _ in range(m + 1))


def compose(f: DeltaSMorphism, g: DeltaSMorphism) -> DeltaSMorphism:
    """Return ``f ∘ g`` (apply ``g`` first) by monomial substitution."""
    if g.target != f.source:
        raise ArityMismatch(
            f"cannot compose: target of {g} is [{g.target}], source of {f} is [{f.source}]")
    return DeltaSMorphism(
        [x for j in block for x in g.blocks[j]] for block in f.blocks)


def enumerate_morphisms(n: int, m: int, epi_only: bool = False) -> list[DeltaSMorphism]:
    """All morphisms ``[n] -> [m]`` in canonical order.

    The order is lexicographic in the non-decreasing map ``[n] -> [m]``
    (as a vector), then lexicographic in the word obtained by reading the
    blocks left to right.  This reproduces the listing order of the GAP
    ``EnumerateDeltaS`` transcript.
    """
    return list(iter_morphisms(n, m, epi_only))


def iter_morphisms(n: int, m: int, epi_only: bool = False) -> Iterator[DeltaSMorphism]:
    if n < -1 or m < -1:
        raise DomainError(f"objects are [k] with k >= -1, got n={n}, m={m}")
    if n == -1:
        if not epi_only or m == -1:
            yield iota(m)
        return
    for phi in itertools.combinations_with_replacement(range(m + 1), n + 1):
        sizes = [0] * (m + 1)
        for j in phi:
            sizes[j] += 1
        if epi_only and 0 in sizes:
            continue
        for word in itertools.permutations(range(n + 1)):
            blocks, pos = [], 0
            for s in sizes:
                blocks.append(word[pos:pos + s])
                pos += s
            yield DeltaSMorphism(blocks)


def count(n: int, m: int) -> int:
    """Number of morphisms ``[n] -> [m]``, namely ``(m+n+1)!/m!``."""
    if n == -1 and m >= -1:
        return 1
    if m == -1 and n >= 0:
        return 0
    if n < 0 or m < 0:
        raise DomainError(f"count is undefined for n={n}, m={m}")
    return factorial(m + n + 1) // factorial(m)


def epi_mono_factor(f: DeltaSMorphism) -> tuple[DeltaSMorphism, DeltaSMorphism]:
    """Split ``f`` as ``mono ∘ epi`` with ``mono`` an order-preserving injection."""
    epi = DeltaSMorphism(b for b in f.blocks if b)
    mono, k = [], 0
    for b in f.blocks:
        if b:
            mono.append([k])
            k += 1
        else:
            mono.append([])
    return epi, DeltaSMorphism(mono)


def monoidal_product(f: DeltaSMorphism, g: DeltaSMorphism) -> DeltaSMorphism:
    """``f ⊙ g``: ``f`` on the first points, ``g`` shifted onto the rest."""
    shift = f.source + 1
    return DeltaSMorphism(
        list(f.blocks) + [[x + shift for x in b] for b in g.blocks])


def block_transposition(m: int, n: int) -> DeltaSMorphism:
    """The automorphism of ``[m+n+1]`` moving the first ``m+1`` points past the last ``n+1``."""
    if m < -1 or n < -1:
        raise DomainError(f"block sizes must be >= -1, got m={m}, n={n}")
    size = m + n + 2
    images = [i + n + 1 if i <= m else i - m - 1 for i in range(size)]
    return Permutation(images).to_morphism()


def parse_morphism(text: str) -> DeltaSMorphism:
    """Parse a literal such as ``[[4,0],[],[2,3],[1]]``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidMorphism(f"malformed morphism literal {text!r}: {exc.msg}") from None
    if not isinstance(data, list) or not all(
            isinstance(b, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in b)
            for b in data):
        raise InvalidMorphism(f"morphism literal must be a list of integer lists: {text!r}")
    return DeltaSMorphism(data)


def format_morphism(f: DeltaSMorphism | Sequence[Sequence[int]]) -> str:
    blocks = f.blocks if isinstance(f, DeltaSMorphism) else f
    return "[" + ",".join("[" + ",".join(map(str, b)) + "]" for b in blocks) + "]"
