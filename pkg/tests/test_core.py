from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from staircase.core import (
    MonomialIdeal,
    NotArtinian,
    ParseError,
    colength,
    colon,
    contains,
    fiber_decomposition,
    format_ideal,
    intersect,
    is_strongly_stable,
    is_strongly_stable_full,
    minimalize,
    parse_ideal,
    power_ideal,
    socle,
    z_slice_table,
)
from staircase.census import random_artinian
from staircase.families import (
    SPECIAL_39,
    counterexample_colength,
    counterexample_ideal,
    lex_truncation_ideal,
)


def test_minimalize_absorbs_multiples():
    assert minimalize([(2, 0, 0), (1, 0, 0)], 3).gens == ((1, 0, 0),)
    m = minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert set(m.gens) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_minimalize_counterexample_generators():
    text = ("x^3, x^2*y, x^2*z, x*y^2, x*y*z^2, x*z^3,"
            " y^4, y^3*z, y^2*z^2, y*z^3, z^4, x^2*y*z, x*y^3")
    assert parse_ideal(text).numgens == 11


def test_contains():
    m = power_ideal(3, 1)
    assert not contains(m, (0, 0, 0))
    assert contains(m, (2, 0, 0))
    assert contains(power_ideal(3, 2), (1, 1, 0))


@pytest.mark.parametrize("r", range(1, 6))
def test_power_ideal_colength(r):
    assert colength(power_ideal(3, r)) == comb(r + 2, 3)
    assert power_ideal(3, r).numgens == comb(r + 2, 2)


def test_colength_examples():
    assert colength(power_ideal(3, 1)) == 1
    assert colength(power_ideal(3, 3)) == 10
    assert colength(lex_truncation_ideal(16)) == 16


def test_not_artinian():
    with pytest.raises(NotArtinian):
        colength(parse_ideal("x, y"))


def test_strongly_stable_examples():
    assert is_strongly_stable(power_ideal(3, 3))
    assert not is_strongly_stable(parse_ideal("x^2, y, z"))
    assert is_strongly_stable(counterexample_ideal(3, 2))
    assert is_strongly_stable(SPECIAL_39)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_strongly_stable_generator_test_matches_box(d, seed):
    import random

    I = random_artinian(3, d, random.Random(seed))
    assert is_strongly_stable(I) == is_strongly_stable_full(I)


def test_lex_truncation():
    assert lex_truncation_ideal(10) == power_ideal(3, 3)
    assert lex_truncation_ideal(20) == power_ideal(3, 4)
    E = lex_truncation_ideal(16)
    expected = parse_ideal("x^3, x^2*y, x^2*z, x*y^2, x*y*z^2, x*z^3, y^4, y^3*z, y^2*z^2, y*z^3, z^4")
    assert E == expected


def test_counterexample_ideal_shape():
    J = counterexample_ideal(3, 2)
    assert J.numgens == 11
    assert colength(J) == 16
    assert colength(counterexample_ideal(4, 2)) == 27
    for r in range(3, 7):
        assert counterexample_ideal(r, 2).numgens == comb(r + 2, 2) + 1
        for i in range(2, r):
            assert colength(counterexample_ideal(r, i)) == counterexample_colength(r, i)
    with pytest.raises(ValueError):
        counterexample_ideal(3, 3)
    with pytest.raises(ValueError):
        counterexample_ideal(2, 2)


def test_special_39():
    assert SPECIAL_39.numgens == 21
    assert colength(SPECIAL_39) == 39


@pytest.mark.parametrize("r", range(1, 5))
def test_slice_table_of_power(r):
    b = z_slice_table(power_ideal(3, r))
    for i in range(r + 2):
        for j in range(r + 2):
            assert b[i, j] == max(r - i - j, 0)
    assert b[-1, 0] == 0


def test_slice_table_simplify_max_for_strongly_stable():
    b = z_slice_table(SPECIAL_39)
    for i in range(8):
        for j in range(8):
            assert b[i, j + 1] >= b[i + 1, j]


@pytest.mark.parametrize("r", range(1, 5))
def test_fibers_of_power(r):
    fibers = fiber_decomposition(power_ideal(3, r)).fibers
    for i in range(r):
        assert fibers[i] == power_ideal(2, r - i)


def test_fibers_count_and_colon():
    y = MonomialIdeal(2, ((1, 0),))
    for I in (SPECIAL_39, counterexample_ideal(4, 3), lex_truncation_ideal(30)):
        fibers = fiber_decomposition(I).fibers
        assert sum(colength(f) for f in fibers) == colength(I)
        for a, b in zip(fibers, fibers[1:]):
            assert all(contains(b, g) for g in colon(a, y).gens)


@pytest.mark.parametrize("r", range(1, 5))
def test_socle_of_power(r):
    soc = socle(power_ideal(3, r))
    assert len(soc) == comb(r + 1, 2)
    assert all(sum(e) == r - 1 for e in soc)


@pytest.mark.parametrize("r", range(3, 6))
def test_socle_sizes(r):
    d = comb(r + 2, 3) + r + 3
    assert len(socle(lex_truncation_ideal(d))) == comb(r + 1, 2) + 1
    assert len(socle(counterexample_ideal(r, 2))) == comb(r + 1, 2) + 1


def test_intersect_and_colon():
    I = parse_ideal("x^2, y^2, z^2")
    J = parse_ideal("x, y^3, z^3")
    K = intersect(I, J)
    assert all(contains(I, g) and contains(J, g) for g in K.gens)
    assert colon(I, power_ideal(3, 1)) == parse_ideal("x^2, y^2, z^2, x*y*z")


def test_parse_variants():
    a = parse_ideal("x^2,x*y,y^2,z")
    assert parse_ideal("x^2, xy, y^2, z^1") == a
    assert parse_ideal("x1^2, x1*x2, x2^2, x3") == a
    assert parse_ideal("x^2, y^3", n=2).n == 2
    assert parse_ideal("y^2, z^2", n=2) == parse_ideal("x^2, y^2", n=2)
    assert format_ideal(a) == "x^2, x*y, y^2, z"
    for bad in ("x^a", "w", "x^2,,", ""):
        with pytest.raises(ParseError):
            parse_ideal(bad)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 3), st.integers(1, 15), st.integers(0, 10**6))
def test_format_parse_round_trip(n, d, seed):
    import random

    I = random_artinian(n, d, random.Random(seed))
    assert parse_ideal(format_ideal(I), n) == I
    assert colength(I) == d


def test_standard_monomials_sorted():
    std = np.array(power_ideal(3, 3).standard_monomials)
    assert len(std) == 10
    assert [tuple(r) for r in std] == sorted(tuple(r) for r in std)
