"""Cached computations behind the command line.

Every function here takes a :class:`~symhom.cache.ResultCache` (possibly
disabled) and returns plain JSON-ready data, so reloaded results are
bit-identical to fresh ones.
"""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager

from . import hslow, sym
from .algebra import FinAlgebra
from .cache import ResultCache, digest
from .chessboard import chessboard_complex, verify_omega
from .errors import ChainMapViolation, DegreeOutOfRange
from .linalg.homology import HomologyGroup
from .linalg.snf import (check_characteristic, diagonal_to_invariant_factors,
                         elimination_diagonal, rank_over_field)
from .linalg.sparse import SparseIntMatrix

log = logging.getLogger("symhom.jobs")


@contextmanager
def timed(what: str):
    start = time.perf_counter()
    yield
    log.info("%s in %.3fs", what, time.perf_counter() - start)


def sym_matrix(p: int, i: int, cache: ResultCache) -> SparseIntMatrix:
    key = ["sym-differential", p, i]
    text = cache.load(key)
    if text is not None:
        log.info("loaded d(%d,%d) from cache", p, i)
        return SparseIntMatrix.from_triplets(text)
    with timed(f"assembled d({p},{i})"):
        m = sym.differential(p, i)
    cache.store(key, m.to_triplets())
    return m


def _sym_rank(p: int, i: int, characteristic: int, cache: ResultCache) -> int:
    def compute():
        m = sym_matrix(p, i, cache)
        with timed(f"rank of d({p},{i}) over char {characteristic}"):
            return rank_over_field(m, characteristic)
    return cache.get_or_compute(["sym-rank", p, i, characteristic], compute)


def _sym_factors(p: int, i: int, cache: ResultCache) -> list[int]:
    def compute():
        m = sym_matrix(p, i, cache)
        with timed(f"Smith form of d({p},{i})"):
            return diagonal_to_invariant_factors(elimination_diagonal(m))
    return cache.get_or_compute(["sym-snf", p, i], compute)


def sym_poincare(p: int, characteristic: int, cache: ResultCache) -> list[int]:
    check_characteristic(characteristic)
    if p < 0:
        raise DegreeOutOfRange(f"p must be >= 0, got {p}")
    dims = [sym.lah(p + 1, p + 1 - i) for i in range(p + 1)]
    ranks = [0] + [_sym_rank(p, i, characteristic, cache) for i in range(1, p + 1)] + [0]
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(p + 1)]


def sym_homology(p: int, degree: int, cache: ResultCache) -> HomologyGroup:
    sym._check_degree(p, degree)
    n = sym.lah(p + 1, p + 1 - degree)
    rank_out = len(_sym_factors(p, degree, cache)) if degree > 0 else 0
    factors = _sym_factors(p, degree + 1, cache) if degree < p else []
    return HomologyGroup(n - rank_out - len(factors), tuple(d for d in factors if d > 1))


def sym_chessboard_report(p: int) -> dict:
    report = verify_omega(p)
    report["betti_chessboard"] = chessboard_complex(p + 1).betti_numbers()
    report["betti_sym"] = sym.betti_numbers(p)
    return report


def algebra_key(A: FinAlgebra) -> str:
    return digest(A.to_json())


def hs_report(A: FinAlgebra, degree: str, layered: bool, action: bool,
              cache: ResultCache) -> dict:
    """Result document for the ``hs`` subcommand."""
    key = algebra_key(A)
    doc: dict = {"algebra": A.name}
    cx = None

    def complex_():
        nonlocal cx
        if cx is None:
            with timed(f"assembled partial complex of {A.name}"):
                cx = hslow.build_partial_complex(A)
        return cx

    if degree in ("0", "both"):
        doc["hs0"] = cache.get_or_compute([key, "hs0"], lambda: complex_().hs0().as_dict())
    if degree in ("1", "both"):
        doc["hs1"] = cache.get_or_compute([key, "hs1"], lambda: complex_().hs1().as_dict())
    if layered:
        def layers():
            return hslow.hs_layered(A).as_dict()
        doc["layers"] = cache.get_or_compute([key, "layers"], layers)
    if action:
        act = hslow.hs0_action_on_hs1(A)
        if not act.sides_agree():
            raise ChainMapViolation("left and right actions differ on homology")
        doc["action"] = {name: mat for name, mat in zip(A.basis_names, act.left)}
        doc["action_orders"] = act.orders
        found = act.cyclic_generator()
        if found is not None:
            gen, rel = found
            doc["module_generator"] = gen
            doc["module_relations"] = rel
    return doc


def free_monoid_layers(lo: int, hi: int, cache: ResultCache) -> dict[int, dict]:
    out = {}
    for m in range(lo, hi + 1):
        out[m] = cache.get_or_compute(["free-monoid-layer", m],
                                      lambda m=m: hslow.free_monoid_layer(m).as_dict())
    return out


def cyclic_report(A: FinAlgebra) -> dict:
    c = hslow.cyclic_low_complex(A)
    return {"algebra": A.name, "squares_commute": True,
            "hc0": c.hc0.as_dict(), "hc1": c.hc1.as_dict(),
            "hs0": c.hs0.as_dict(), "hs1": c.hs1.as_dict(),
            "induced0": c.induced0, "induced1": c.induced1,
            "diagnostics": c.diagnostics}
