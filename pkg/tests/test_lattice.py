from fractions import Fraction

from hypothesis import given, strategies as st

from a3calogero.lattice import (CARTAN, SIMPLE_ROOTS, RootVector, embed, gram_matrix,
                                inner6, inner_coeff, is_real_root)
from a3calogero import tables

coeffs = st.tuples(*[st.integers(-50, 50)] * 5)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
vec6 = st.tuples(*[rationals] * 6)


def test_inner6_examples():
    assert inner6(SIMPLE_ROOTS[0], SIMPLE_ROOTS[-1]) == -1
    assert inner6((0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 1, 0)) == 0
    assert inner6(SIMPLE_ROOTS[0], SIMPLE_ROOTS[0]) == 2


def test_embed_examples():
    assert embed((0, 0, 1, 0, 0)) == (1, -1, 0, 0, 0, 0)
    assert embed((0, 0, 0, 0, 0)) == (0,) * 6
    assert embed((0, 1, 1, 0, 0)) == (0, -1, 0, 1, 1, 0)


def test_inner_coeff_examples():
    assert inner_coeff(RootVector.unit(2), RootVector.unit(2)) == 2
    assert inner_coeff(RootVector.unit(0), RootVector.unit(2)) == 0
    # by hand: a0 + a1 + 2 a2 + a3 = (0, 1, -1, 0, 1, 0), squared length 1 + 1 = 2
    assert embed((0, 1, 1, 2, 1)) == (0, 1, -1, 0, 1, 0)
    assert inner_coeff((0, 1, 1, 2, 1), (0, 1, 1, 2, 1)) == 2


def test_is_real_root_examples():
    assert is_real_root((0, 0, 1, 0, 0))
    assert not is_real_root((0, 0, 0, 0, 0))
    assert is_real_root((1, 1, 1, 2, 1))


def test_gram_matches_cartan_table():
    assert gram_matrix() == tables.CARTAN
    assert CARTAN == tables.CARTAN
    for a in SIMPLE_ROOTS.values():
        assert inner6(a, a) == 2


@given(coeffs, coeffs)
def test_inner_coeff_agrees_with_embedding(a, b):
    assert inner_coeff(a, b) == inner6(embed(a), embed(b))


@given(coeffs)
def test_real_root_iff_length_two(a):
    assert is_real_root(a) == (inner_coeff(a, a) == 2)


@given(vec6, vec6, vec6, rationals)
def test_inner6_symmetric_bilinear(x, y, z, c):
    assert inner6(x, y) == inner6(y, x)
    xz = tuple(a + c * b for a, b in zip(x, z))
    assert inner6(xz, y) == inner6(x, y) + c * inner6(z, y)
    assert isinstance(inner6(x, y), Fraction)


def test_root_vector_arithmetic():
    a = RootVector(1, 2, 3, 4, 5)
    assert -a == RootVector(-1, -2, -3, -4, -5)
    assert a + a == a.scaled(2)
    assert a - a == RootVector(0, 0, 0, 0, 0)
