import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from staircase.census import random_artinian
from staircase.core import parse_ideal, power_ideal
from staircase.families import counterexample_ideal, lex_truncation_ideal
from staircase.oracle import (
    hom_dim,
    hom_dim_graded,
    rank_mod_p,
    taylor_presentation,
    two_var_length_identity_check,
)
from staircase.tangent import tangent_report


def test_taylor_presentation():
    pres = taylor_presentation(parse_ideal("x, y", n=2))
    assert pres.pairs == ((0, 1),)
    assert pres.syzygy_degrees == ((1, 1),)
    assert len(taylor_presentation(power_ideal(3, 2)).pairs) == 15


def test_rank_mod_p():
    M = np.array([[1, 1], [1, -1]])
    assert rank_mod_p(M, 2) == 1
    assert rank_mod_p(M, 3) == 2
    assert rank_mod_p(np.zeros((3, 4), dtype=int), 5) == 0
    with pytest.raises(ValueError):
        rank_mod_p(M, 4)


def test_rank_matches_numpy_over_large_prime():
    rng = np.random.default_rng(7)
    for _ in range(20):
        M = rng.integers(-1, 2, size=(8, 6))
        assert rank_mod_p(M, 32003) == np.linalg.matrix_rank(M)


def test_graded_value():
    m2 = power_ideal(3, 2)
    assert hom_dim_graded(m2, m2, (-1, 0, 0)) == 3
    assert hom_dim_graded(m2, m2, (5, 5, 5)) == 0


@pytest.mark.parametrize("r", range(1, 4))
def test_fat_point_totals(r):
    I = power_ideal(3, r)
    assert hom_dim(I, I, 2) == hom_dim(I, I, 32003) == tangent_report(I).total


def test_named_ideals():
    assert hom_dim(counterexample_ideal(3, 2), counterexample_ideal(3, 2)) == 88
    assert hom_dim(lex_truncation_ideal(16), lex_truncation_ideal(16)) == 84


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_graded_oracle_matches_components(d, seed):
    I = random_artinian(3, d, random.Random(seed))
    rep = tangent_report(I)
    for alpha, v in list(rep.per_degree.items())[:6]:
        assert hom_dim_graded(I, I, alpha) == v


def test_two_variable_identity_examples():
    I = parse_ideal("x^2, y^2", n=2)
    J = parse_ideal("x, y", n=2)
    lhs, rhs, ok = two_var_length_identity_check(I, J)
    assert ok and lhs == rhs
    with pytest.raises(ValueError):
        two_var_length_identity_check(power_ideal(3, 1), power_ideal(3, 1))
