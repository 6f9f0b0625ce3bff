from itertools import product

import pytest
from hypothesis import given, strategies as st

from a3calogero.errors import IdentificationError
from a3calogero.lattice import RootVector, inner_coeff, is_real_root
from a3calogero.strings import (SignedString, closure_check, coverage_report,
                                enumerate_real_roots, gamma, identify, identify_all,
                                parity_coefficient, positive_representative,
                                reflect_string, table_image)
from a3calogero.weyl import AFFINE_WORD, apply_word, word_power

SEEDS = {0: RootVector.unit(0), 1: RootVector.unit(1), 2: RootVector.unit(2),
         3: RootVector.unit(3)}


def naive_roots(bound, affine_only):
    """Plain five-fold scan of the box; independent of the quadratic solve."""
    span = range(-bound, bound + 1)
    qs = (0,) if affine_only else span
    return sorted(RootVector(*v) for v in product(qs, span, span, span, span)
                  if is_real_root(v))


@pytest.mark.parametrize("k", range(-100, 101))
def test_parity_coefficient_integral(k):
    for m, n in product((1, -1), repeat=2):
        value = parity_coefficient(m, n, k)
        assert 2 * value == 1 + m * (-1) ** k + 2 * n * k


def test_parity_coefficient_rejects_bad_signs():
    with pytest.raises(ValueError):
        parity_coefficient(2, 1, 0)


def test_gamma_examples():
    assert gamma(0, 0) == (0, 1, 0, 0, 0)
    assert gamma(4, 0) == (0, 0, 1, 1, 0)
    assert gamma(2, 2) == (0, 2, 2, 3, 2)
    assert gamma(2, 2) == apply_word(AFFINE_WORD * 2, RootVector.unit(2))
    with pytest.raises(ValueError):
        gamma(6, 0)


@pytest.mark.parametrize("k", range(-25, 26))
def test_gamma_matches_coxeter_orbits(k):
    word = word_power(AFFINE_WORD, k)
    for i, seed in SEEDS.items():
        assert gamma(i, k) == apply_word(word, seed)
    assert gamma(4, k) == apply_word((2,) + word, RootVector.unit(1))
    assert gamma(5, k) == apply_word((2,) + word, RootVector.unit(3))
    for i in range(6):
        g = gamma(i, k)
        assert inner_coeff(g, g) == 2
        assert g.q == 0


def test_identify_examples():
    assert identify((0, 1, 0, 0, 0)) == SignedString(1, 0, 0)
    assert identify((0, -1, -1, -1, 0)) == SignedString(1, 1, 1)
    assert identify((1, 1, 1, 2, 1)) is None
    assert identify((0, 0, 0, 0, 0)) is None


@given(st.integers(0, 5), st.integers(-10_000, 10_000))
def test_identify_round_trip(i, k):
    assert identify(gamma(i, k)) == SignedString(1, i, k)
    assert identify(-gamma(i, k)) == SignedString(-1, i, k)
    assert len(identify_all(gamma(i, k))) == 1


def test_reflect_string_examples():
    for half in range(-5, 6):
        k = 2 * half
        assert reflect_string(2, SignedString(1, 0, k)) == SignedString(1, 0, k)
        assert reflect_string(3, SignedString(1, 1, k)) == SignedString(1, 1, k)
        assert reflect_string(1, SignedString(1, 5, k + 1)) == SignedString(1, 0, -k - 1)
        assert reflect_string(0, SignedString(1, 0, k)) == SignedString(-1, 0, -k)
        assert reflect_string(1, SignedString(1, 0, k)) == SignedString(-1, 4, k + 1)


def test_reflect_string_sign_propagates():
    s = SignedString(-1, 3, 7)
    assert reflect_string(0, s).vector() == -reflect_string(0, SignedString(1, 3, 7)).vector()


def test_reflect_string_rejects_hyperbolic_reflection():
    # s_{-1} moves gamma_0(1) off the affine sublattice
    with pytest.raises(IdentificationError):
        reflect_string(-1, SignedString(1, 0, 1))


def test_table_image_reads_parity():
    assert table_image(1, SignedString(1, 0, 4)) == SignedString(-1, 4, 5)
    assert table_image(1, SignedString(-1, 0, 4)) == SignedString(1, 4, 5)
    assert table_image(3, SignedString(1, 4, -3)) == SignedString(1, 0, 3)


def test_enumerate_small_examples():
    roots = enumerate_real_roots(1, affine_only=True)
    singles = [r for r in roots if sum(1 for c in r if c) == 1]
    expected = {RootVector.unit(i).scaled(s) for i in (0, 1, 2, 3) for s in (1, -1)}
    assert set(singles) == expected and len(singles) == 8
    assert len(roots) == 24  # frozen from the naive five-fold scan
    assert RootVector(1, 1, 1, 2, 1) in enumerate_real_roots(2, affine_only=False)
    with pytest.raises(ValueError):
        enumerate_real_roots(0)


@pytest.mark.parametrize("bound,affine_only", [(1, True), (2, True), (3, True), (1, False),
                                               (2, False), (3, False)])
def test_enumerate_matches_naive_scan(bound, affine_only):
    assert enumerate_real_roots(bound, affine_only) == naive_roots(bound, affine_only)


def test_enumeration_is_sorted_and_symmetric():
    roots = enumerate_real_roots(4, affine_only=False)
    assert roots == sorted(roots)
    assert set(roots) == {-r for r in roots}


def test_positive_representative():
    assert positive_representative(RootVector(0, -1, 2, 0, 0)) == (0, 1, -2, 0, 0)
    assert positive_representative(RootVector(0, 0, 1, 0, 0)) == (0, 0, 1, 0, 0)


@pytest.mark.parametrize("bound,count", [(1, 24), (8, 192)])
def test_coverage(bound, count):
    report = coverage_report(bound)
    assert report.n_roots == count
    assert report.misses == []
    assert report.multiple_hits == []
    assert sum(report.hits_per_string.values()) == count
    assert report.ok


def test_closure_window_zero():
    report = closure_check(0, 0)
    assert report.ok
    assert report.cases == 48
    assert reflect_string(2, SignedString(1, 0, 0)) == SignedString(1, 0, 0)
    assert reflect_string(1, SignedString(1, 0, 0)) == SignedString(-1, 4, 1)


def test_closure_check_rejects_empty_window():
    with pytest.raises(ValueError):
        closure_check(1, 0)
