import itertools
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symhom import deltas
from symhom.algebra import AlgebraTensor, apply_morphism, trunc_poly
from symhom.deltas import DeltaSMorphism, Permutation, compose, parse_morphism
from symhom.errors import ArityMismatch, InvalidMorphism


def test_count_matches_transcript():
    assert deltas.count(6, 4) == 1663200


@pytest.mark.parametrize("n,m", [(0, 0), (1, 0), (0, 2), (2, 2), (3, 1), (2, 3)])
def test_count_agrees_with_enumeration(n, m):
    mors = deltas.enumerate_morphisms(n, m)
    assert len(mors) == deltas.count(n, m) == factorial(m + n + 1) // factorial(m)
    assert len(set(mors)) == len(mors)


def test_enumerate_2_2_listing_order():
    mors = [f.blocks for f in deltas.enumerate_morphisms(2, 2)]
    assert len(mors) == 60
    assert mors[0] == ((0, 1, 2), (), ())
    assert mors[6] == ((0, 1), (2,), ())
    assert mors[24] == ((0,), (1,), (2,))
    assert mors[-1] == ((), (), (2, 1, 0))
    epis = [f.blocks for f in deltas.enumerate_morphisms(2, 2, epi_only=True)]
    assert epis == [((0,), (1,), (2,)), ((0,), (2,), (1,)), ((1,), (0,), (2,)),
                    ((1,), (2,), (0,)), ((2,), (0,), (1,)), ((2,), (1,), (0,))]


def test_composition_example():
    f = parse_morphism("[[4,0],[],[2,3],[1]]")
    g = parse_morphism("[[1,6,0],[7,4],[],[3],[2,5]]")
    assert deltas.format_morphism(compose(f, g)) == "[[2,5,1,6,0],[],[3],[7,4]]"
    assert f @ g == compose(f, g)


def test_composition_transcript():
    a = parse_morphism("[[0],[2,4,1],[],[3]]")
    b = parse_morphism("[[],[3,0,2],[1]]")
    assert compose(b, a).blocks == ((), (3, 0), (2, 4, 1))
    with pytest.raises(ArityMismatch):
        compose(a, b)


def test_monoidal_product_transcript():
    a = parse_morphism("[[],[2,1,0],[3,4]]")
    b = parse_morphism("[[],[],[],[1,3,2,0]]")
    assert deltas.format_morphism(deltas.monoidal_product(a, b)) == \
        "[[],[2,1,0],[3,4],[],[],[],[6,8,7,5]]"
    assert deltas.format_morphism(deltas.monoidal_product(b, a)) == \
        "[[],[],[],[1,3,2,0],[],[6,5,4],[7,8]]"


def test_action_on_tensors_transcript():
    A = trunc_poly([3, 2])
    idx = {name: k for k, name in enumerate(A.basis_names)}
    v = AlgebraTensor.simple(idx["t*u"], idx["1"], idx["t^2"])
    out = apply_morphism(parse_morphism("[[2],[],[0],[1]]"), v, A)
    assert out == AlgebraTensor.simple(idx["t^2"], idx["1"], idx["t*u"], idx["1"])
    out = apply_morphism(parse_morphism("[[2],[0,1]]"), v, A)
    assert out == AlgebraTensor.simple(idx["t^2"], idx["t*u"])
    assert apply_morphism(parse_morphism("[[2,0],[1]]"), v, A).is_zero()


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(4)])
def test_epi_mono_factor_roundtrip(n, m):
    for f in deltas.iter_morphisms(n, m):
        epi, mono = deltas.epi_mono_factor(f)
        assert epi.is_epi and mono.is_mono
        assert compose(mono, epi) == f


def test_identity_and_iota():
    f = parse_morphism("[[1],[],[0,2]]")
    assert compose(deltas.identity(2), f) == f == compose(f, deltas.identity(2))
    assert deltas.iota(3).source == -1 and deltas.iota(3).target == 3
    assert deltas.count(-1, 3) == 1 and list(deltas.iter_morphisms(-1, 3)) == [deltas.iota(3)]


def test_block_transposition():
    # points 0,1 move to 3,4 and points 2,3,4 move to 0,1,2
    beta = deltas.block_transposition(1, 2)
    assert beta.point_map() == [3, 4, 0, 1, 2]
    assert beta.is_iso
    assert compose(deltas.block_transposition(2, 1), beta) == deltas.identity(4)


def test_permutation_basics():
    c = Permutation.cycle(4)
    assert c.sign() == -1
    assert (c * c.inverse()) == Permutation.identity(4)
    assert c.to_morphism().as_permutation() == c


@pytest.mark.parametrize("text", ["[[0],[0]]", "[[0],[2]]", "[[1]]", "[[0],[1]", "[0,1]", "[[-1]]"])
def test_parse_rejects_bad_literals(text):
    with pytest.raises(InvalidMorphism):
        parse_morphism(text)


def test_parse_is_whitespace_insensitive():
    assert parse_morphism(" [ [1 ,0] , [ ] ] ") == DeltaSMorphism(((1, 0), ()))


morphisms = st.integers(0, 4).flatmap(
    lambda n: st.integers(0, 4).flatmap(
        lambda m: st.permutations(range(n + 1)).flatmap(
            lambda order: st.lists(st.integers(0, m), min_size=n + 1, max_size=n + 1).map(
                lambda cuts: DeltaSMorphism(tuple(
                    tuple(x for x, c in zip(order, cuts) if c == b) for b in range(m + 1)))))))


@settings(max_examples=150, deadline=None)
@given(morphisms, st.data())
def test_composition_is_associative(f, data):
    g = data.draw(st.sampled_from(deltas.enumerate_morphisms(data.draw(st.integers(0, 3)), f.source)))
    h = data.draw(st.sampled_from(deltas.enumerate_morphisms(data.draw(st.integers(0, 2)), g.source)))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@settings(max_examples=100, deadline=None)
@given(morphisms)
def test_format_parse_roundtrip(f):
    assert parse_morphism(deltas.format_morphism(f)) == f


def test_isos_are_permutations():
    isos = [f for f in deltas.iter_morphisms(3, 3) if f.is_iso]
    assert len(isos) == 24
    assert {f.as_permutation().to_morphism() for f in isos} == set(isos)
    assert all(not f.is_iso for f in itertools.islice(deltas.iter_morphisms(3, 2), 50))
