"""Acceptance suite: criteria 1-11 (gating) and the extended checks (pass/skip).

Each check is recorded by the ``acceptance`` fixture and printed as one line
in the ``acceptance summary`` section at the end of the run.
"""

import itertools
import os
import random
from math import factorial, gcd

import pytest

from symhom import deltas, hslow, sym
from symhom.algebra import preset
from symhom.chessboard import chessboard_complex, verify_omega
from symhom.cli import main
from symhom.deltas import Permutation, compose, parse_morphism
from symhom.linalg import HomologyGroup, SparseIntMatrix, invariant_factors
from symhom.linalg import dense
from symhom.linalg.snf import diagonal_to_invariant_factors
from symhom.sym import SymElement

Z = HomologyGroup

# presets spanning every family in the registry
PRESETS = ["integers", "trunc_poly(2)", "trunc_poly(3)", "trunc_poly(4)", "trunc_poly(5)",
           "trunc_poly(6)", "trunc_poly(2,2)", "trunc_poly(3,2)", "cyclic_group(2)",
           "cyclic_group(3)", "cyclic_group(4)", "cyclic_group(5)", "cyclic_group(6)",
           "abelian_group(2,2)", "abelian_group(3,2)", "cyclic_monoid(2,1)", "cyclic_monoid(3,1)",
           "cyclic_monoid(3,2)", "cyclic_monoid(4,0)", "cyclic_monoid(4,2)",
           "symmetric_group(2)", "symmetric_group(3)", "matrix_ring(2)",
           "lipschitz_quaternions", "quaternion_units"]

POINCARE = {0: [1], 1: [0, 1], 2: [0, 1, 2], 3: [0, 0, 7, 6], 4: [0, 0, 0, 43, 24],
            5: [0, 0, 0, 1, 272, 120]}


def test_criterion_01_deltas_combinatorics(acceptance, capsys):
    with acceptance.check("criterion 1", "ΔS counts, listing, composition, epi-mono factorization"):
        assert main(["count", "6", "4"]) == 0
        assert capsys.readouterr().out.strip() == "1663200"
        assert len(deltas.enumerate_morphisms(2, 2)) == 60
        assert len(deltas.enumerate_morphisms(2, 2, epi_only=True)) == 6
        f = parse_morphism("[[4,0],[],[2,3],[1]]")
        g = parse_morphism("[[1,6,0],[7,4],[],[3],[2,5]]")
        assert compose(f, g) == parse_morphism("[[2,5,1,6,0],[],[3],[7,4]]")
        for n, m in itertools.product(range(-1, 4), repeat=2):
            for h in deltas.iter_morphisms(n, m):
                epi, mono = deltas.epi_mono_factor(h)
                assert epi.is_epi and mono.is_mono and compose(mono, epi) == h


def test_criterion_02_poincare_polynomials(acceptance):
    with acceptance.check("criterion 2", "Poincaré polynomials P0..P5, integral homology torsion-free"):
        for p, expected in POINCARE.items():
            assert sym.poincare_polynomial(p, 0) == expected
            for i in range(p + 1):
                assert sym.integral_homology(p, i) == Z(expected[i])
        assert sym.format_polynomial(POINCARE[5]) == "120*t^5+272*t^4+t^3"


def test_criterion_03_top_homology(acceptance):
    with acceptance.check("criterion 3", "rank H_p = p! and d(b_p) = 0 for p <= 5"):
        for p in range(6):
            assert sym.integral_homology(p, p).free_rank == factorial(p)
            b = sym.b_cycle(p)
            assert not b.is_zero()
            if p:
                assert b.d().is_zero()


def test_criterion_04_connectivity(acceptance):
    with acceptance.check("criterion 4", "reduced homology vanishes up to floor(2(p-1)/3), p <= 5"):
        for p in range(6):
            for i in range(sym.connectivity_bound(p) + 1):
                assert sym.integral_homology(p, i).is_zero()


def test_criterion_05_chessboard(acceptance):
    with acceptance.check("criterion 5", "ω is a basis bijection and chain isomorphism, Betti numbers agree, p <= 4"):
        for p in range(5):
            report = verify_omega(p)
            assert report["bijective"] and report["chain_map"]
            assert chessboard_complex(p + 1).betti_numbers() == sym.betti_numbers(p)


def test_criterion_06_hs_tables(acceptance):
    with acceptance.check("criterion 6", "HS1 tables for Z[t]/(t^n), Z[C_n], Z[t,u]/(t^3,u^2)"):
        expected = {2: (2, 2), 3: (2, 2), 4: (2,) * 4, 5: (2,) * 4, 6: (2,) * 6}
        for n, tors in expected.items():
            assert hslow.hs1(preset(f"trunc_poly({n})")) == Z(0, tors)
        for n in range(2, 7):
            assert hslow.hs1(preset(f"cyclic_group({n})")) == Z(0, (2,) * n if n % 2 == 0 else ())
        assert hslow.hs1(preset("trunc_poly(3,2)")) == Z(2, (2,) * 11 + (6,))


def test_criterion_07_hs0_law(acceptance):
    with acceptance.check("criterion 7", "HS0 equals A modulo the commutator ideal for every preset; HS0(M2) = 0"):
        for name in PRESETS:
            A = preset(name)
            assert hslow.hs0(A) == hslow.hs0_via_ideal(A), name
        assert hslow.hs0(preset("matrix_ring(2)")).is_zero()


def test_criterion_08_layers(acceptance):
    with acceptance.check("criterion 8", "C2xC2 layers and free-monoid layers t^0..t^10"):
        A = preset("abelian_group(2,2)")
        report = hslow.hs_layered(A)
        assert len(report.layers) == 4
        for h0, h1 in report.layers.values():
            assert h0 == Z(1) and h1 == Z(0, (2, 2, 2))
        assert report.merged() == (hslow.hs0(A), hslow.hs1(A))
        layers = [hslow.free_monoid_layer(m) for m in range(11)]
        assert layers[:2] == [Z(), Z()]
        assert all(h == Z(0, (2,)) for h in layers[2:])


def test_criterion_09_module_structure(acceptance):
    with acceptance.check("criterion 9", "HS1 of Z[t]/(t^2), Z[t]/(t^3) is cyclic on u with 2u = 0 (and t^2 u = 0)"):
        for n, relators in ((2, [{0: 2}]), (3, [{0: 2}, {2: 1}])):
            A = preset(f"trunc_poly({n})")
            act = hslow.hs0_action_on_hs1(A)
            assert act.sides_agree() and act.unit_acts_trivially(A.unit)
            found = act.cyclic_generator()
            assert found is not None
            _, relations = found
            assert relations == dense.hermite_normal_form(hslow.ideal_lattice(A, relators), A.dim)


def test_criterion_10_cyclic_comparison(acceptance):
    with acceptance.check("criterion 10", "comparison squares commute for every preset of dim <= 4"):
        small = [name for name in PRESETS if preset(name).dim <= 4]
        assert len(small) >= 15
        diagnostics = {}
        for name in small:
            c = hslow.cyclic_low_complex(preset(name))
            diagnostics[name] = c.diagnostics
        # the restated boundary with the opposite sign on d⊗ca⊗b never fits the comparison map
        assert not any(d["variant_square_commutes"] for d in diagnostics.values())
        assert not diagnostics["matrix_ring(2)"]["variant_d2_is_complex"]


def _determinantal_factors(a, rows, cols):
    def det(m):
        if not m:
            return 1
        return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]])
                   for j in range(len(m)) if m[0][j])
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


def test_criterion_11_property_suites(acceptance):
    with acceptance.check("criterion 11", "d^2 = 0, Lah dimensions p <= 6, SNF vs dense oracle x200, Σ-equivariance p <= 4"):
        for p in range(1, 7):
            assert sym.verify_square_zero(p)
            assert [len(sym.sym_basis(p, i)) for i in range(p + 1)] == \
                [sym.lah(p + 1, p + 1 - i) for i in range(p + 1)]
        for n in range(1, 6):
            assert chessboard_complex(n).is_complex()
        for name in PRESETS:
            cx = hslow.build_partial_complex(preset(name))
            assert (cx.d1 @ cx.d2).is_zero()

        rng = random.Random(11)
        for _ in range(200):
            rows, cols = rng.randint(1, 8), rng.randint(1, 8)
            a = [[rng.choice([0, 0, 0, 1, -1, 2, -2, 3, 4, 6]) for _ in range(cols)] for _ in range(rows)]
            sparse = invariant_factors(SparseIntMatrix.from_dense(a))
            diag = dense.smith_diagonal(a, cols)
            assert sparse == diagonal_to_invariant_factors(diag)
            if min(rows, cols) <= 4:
                assert sparse == _determinantal_factors(a, rows, cols)

        for p in range(1, 5):
            for k in range(p):
                images = list(range(p + 1))
                images[k], images[k + 1] = images[k + 1], images[k]
                sigma = Permutation(images)
                for i in range(1, p + 1):
                    for key in sym.sym_basis(p, i):
                        w = SymElement(p, i, {key: 1})
                        assert w.permute(sigma).d() == w.d().permute(sigma)


# -- extended, non-gating ----------------------------------------------------------

def test_extended_p6(acceptance):
    with acceptance.check("extended P6", "P6 = 36t^4+1847t^5+720t^6"):
        assert sym.poincare_polynomial(6, 0) == [0, 0, 0, 0, 36, 1847, 720]


def test_extended_p7(acceptance):
    with acceptance.check("extended P7", "P7 = 829t^5+13710t^6+5040t^7"):
        if not os.environ.get("SYMHOM_RUN_P7"):
            pytest.skip("the 141120x141120 differential needs more memory than this machine has; "
                        "set SYMHOM_RUN_P7=1 to attempt it")
        assert sym.poincare_polynomial(7, 0) == [0, 0, 0, 0, 0, 829, 13710, 5040]


def test_extended_hs_rows(acceptance):
    with acceptance.check("extended HS rows", "quaternion units, C2xC2, Z[t,u]/(t^2,u^2), S3"):
        assert hslow.hs1(preset("quaternion_units")) == Z(0, (2,) * 8)
        assert hslow.hs1(preset("lipschitz_quaternions")) == Z(0, (2,) * 8)
        assert hslow.hs1(preset("abelian_group(2,2)")) == Z(0, (2,) * 12)
        assert hslow.hs1(preset("trunc_poly(2,2)")) == Z(1, (2,) * 11)
        assert hslow.hs1(preset("symmetric_group(3)")) == Z(0, (2, 2))


def test_extended_free_monoid_layers(acceptance):
    with acceptance.check("extended layers", "free-monoid layers t^11..t^18 are Z/2"):
        assert all(hslow.free_monoid_layer(m) == Z(0, (2,)) for m in range(11, 19))
