import pytest
from hypothesis import given, settings, strategies as st

from pwythoff.beatty import (
    BeattyPair,
    appendix_offsets,
    appendix_pfold_check,
    check_complementary_equation,
    kimberling_checks,
    p_complementarity_census,
    partition_census,
    phi,
    phi_index,
)
from pwythoff.exact_arith import SurdRatio

from oracles import beatty_decimal

mp = st.tuples(st.integers(1, 6), st.integers(1, 6))


def test_phi_one_is_golden():
    assert abs(float(phi(1)) - 1.6180339887) < 1e-9


def test_rows_m1_p3():
    pair = BeattyPair(1, 3)
    assert pair.a_seq(17) == [0, 0, 0, 1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6, 6]
    assert pair.b_seq(17) == [0, 1, 2, 4, 5, 7, 8, 10, 11, 12, 14, 15, 17, 18, 20, 21, 22]


def test_rows_m2_p3():
    pair = BeattyPair(2, 3)
    assert pair.b_seq(17) == [0, 2, 4, 7, 9, 11, 14, 16, 19, 21, 23, 26, 28, 31, 33, 35, 38]


def test_wythoff_pairs():
    pair = BeattyPair(1, 1)
    assert list(zip(pair.a_seq(5), pair.b_seq(5))) == [(0, 0), (1, 2), (3, 5), (4, 7), (6, 10)]


@given(mp, st.integers(0, 10**9))
def test_closed_form_matches_decimal(mp, n):
    pair = BeattyPair(*mp)
    assert (pair.a(n), pair.b(n)) == beatty_decimal(*mp, n)


@given(mp, st.integers(0, 500))
def test_difference_law(mp, n):
    pair = BeattyPair(*mp)
    assert pair.b(n) - pair.a(n) == mp[0] * n


@settings(max_examples=30)
@given(mp, st.integers(20, 400))
def test_census_uniform(mp, I):
    w = p_complementarity_census(BeattyPair(*mp), I)
    assert w.uniform(mp[1]), w.violations(mp[1])


def test_census_excluding_b0_matters():
    # with b_0 counted the value 0 would appear p + 1 times
    pair = BeattyPair(2, 3)
    assert p_complementarity_census(pair, 50).counts[0] == 3


@pytest.mark.parametrize("l", [0, 1, 2])
def test_partition_is_complementary(l):
    assert partition_census(BeattyPair(2, 3), l, 300).uniform(1)


def test_partition_rejects_bad_l():
    with pytest.raises(ValueError):
        partition_census(BeattyPair(2, 3), 3, 10)


@given(mp, st.integers(1, 2000))
def test_phi_index_and_complementary_equation(mp, n):
    pair = BeattyPair(*mp)
    k = phi_index(pair, n)
    assert k == mp[1] * pair.b(n) - n
    assert check_complementary_equation(pair, n)


@given(st.integers(1, 5), st.integers(1, 3000))
def test_kimberling(m, n):
    assert kimberling_checks(m, n)


@given(mp, st.integers(0, 2000))
def test_scaling(mp, n):
    m, p = mp
    assert BeattyPair(m * p, 1).a(n) == BeattyPair(m, p).a(p * n)


@pytest.mark.parametrize("m,p", [(1, 1), (1, 2), (2, 3), (4, 4)])
def test_appendix(m, p):
    pair = BeattyPair(m, p)
    M, N = appendix_offsets(pair.alpha, pair.beta, p)
    assert M + N == p + 1 and N <= M
    assert appendix_pfold_check(pair.alpha, pair.beta, p, 2000)


def test_appendix_example_offsets():
    pair = BeattyPair(1, 2)
    assert appendix_offsets(pair.alpha, pair.beta, 2) == (2, 1)


def test_appendix_rejects_inconsistent_pair():
    # 1/alpha alone exceeds 2, so no beta can complete the reciprocal sum
    alpha = SurdRatio(-1, 1, 2, 1)
    beta = SurdRatio(1, 1, 2, 1)
    with pytest.raises(ValueError):
        appendix_offsets(alpha, beta, 2)


def test_appendix_p3_and_golden_examples():
    alpha = SurdRatio(-1, 1, 13, 6)
    beta = SurdRatio(5, 1, 13, 6)
    assert appendix_offsets(alpha, beta, 3) == (3, 1)
    assert appendix_pfold_check(alpha, beta, 3, 20)
    g = SurdRatio(1, 1, 5, 2)
    g2 = SurdRatio(3, 1, 5, 2)
    assert appendix_offsets(g, g2, 1) == (1, 1)
    assert appendix_pfold_check(g, g2, 1, 50)


def test_appendix_rejects_rational_beta():
    with pytest.raises(ValueError):
        appendix_offsets(SurdRatio(-1, 1, 13, 6), SurdRatio(5, 0, 2, 3), 3)
