import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockcensus.counting import (
    CountCache,
    composition_sum,
    d_core_count,
    ell_compositions,
    exact_div,
    gmpn_irr_count,
    is_prime,
    k_ell_a_w,
    multipartition_count,
    p_ell,
    partition_count,
    val_factorial,
)


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError, match="division is not exact"):
        exact_div(13, 4)


def test_is_prime_small():
    primes = [n for n in range(2, 30) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


PARTITION_VALUES = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 10: 42, 50: 204226, 100: 190569292}


def test_partition_count_values():
    for n, value in PARTITION_VALUES.items():
        assert partition_count(n) == value


MULTIPARTITION_VALUES = {
    (1, 4): 5,
    (2, 2): 5,
    (3, 2): 9,
    (4, 2): 14,
    (6, 2): 27,
    (2, 3): 10,
    (3, 3): 22,
    (4, 3): 40,
    (9, 3): 255,
    (2, 4): 20,
    (5, 5): 506,
    (2, 12): 1165,
    (4, 12): 35693,
    (8, 12): 2418710,
}


def test_multipartition_count_values():
    for (s, t), value in MULTIPARTITION_VALUES.items():
        assert multipartition_count(s, t) == value


def test_multipartition_zero_colours():
    assert multipartition_count(0, 0) == 1
    assert multipartition_count(0, 3) == 0


def test_multipartition_base_cases():
    for s in range(1, 9):
        assert multipartition_count(s, 0) == 1
        assert multipartition_count(s, 1) == s


def test_closed_forms_small_sizes():
    from math import comb

    for s in range(1, 12):
        assert multipartition_count(s, 2) == s * (s + 3) // 2
        assert multipartition_count(s, 3) == s + s * s + comb(s + 2, 3)


@settings(max_examples=60, deadline=None)
@given(s=st.integers(1, 6), s2=st.integers(1, 6), n=st.integers(0, 25))
def test_colour_convolution(s, s2, n):
    lhs = multipartition_count(s + s2, n)
    rhs = sum(
        multipartition_count(s, t) * multipartition_count(s2, n - t)
        for t in range(n + 1)
    )
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(s=st.integers(3, 9), n=st.integers(0, 20))
def test_multipartition_upper_bound(s, n):
    # for three or more colours the count never beats the crude s**n bound
    # (false at s = 2: 5 tuples of total size 2); the closed defect bounds
    # lean on this with s a power of an odd prime
    assert multipartition_count(s, n) <= s**n


def test_p_ell_rejects_composites_and_negatives():
    with pytest.raises(ValueError):
        p_ell(4, 3)
    with pytest.raises(ValueError):
        p_ell(3, -1)


def test_p_ell_values():
    assert p_ell(2, 3) == 2
    assert p_ell(2, 10) == 14
    assert [p_ell(3, w) for w in range(7)] == [1, 1, 1, 2, 2, 2, 3]
    for ell in (3, 5, 7):
        assert p_ell(ell, 2 * ell) == 3


@settings(max_examples=30, deadline=None)
@given(ell=st.sampled_from([2, 3, 5]), w=st.integers(1, 400))
def test_p_ell_power_bound(ell, w):
    u = 0
    power = ell
    while power <= w:
        u += 1
        power *= ell
    assert p_ell(ell, w) <= ell ** (u * (u + 1) // 2)


def test_ell_compositions_rejects_composites():
    with pytest.raises(ValueError):
        ell_compositions(9, 3)
    with pytest.raises(ValueError):
        ell_compositions(1, 3)


def test_ell_compositions_allows_two():
    # the composition layer works at 2; only the block sums are odd-only
    assert ell_compositions(2, 3) == [(1, 1), (3,)]
    assert ell_compositions(3, 3) == [(0, 1), (3,)]
    assert ell_compositions(3, 2) == [(2,)]


def test_ell_compositions_listing():
    assert ell_compositions(3, 0) == [()]
    assert ell_compositions(3, 4) == [(1, 1), (4,)]
    comps6 = ell_compositions(3, 6)
    # trailing entries nonzero, head determined mod ell, lexicographic
    assert comps6 == [(0, 2), (3, 1), (6,)]
    for comp in comps6:
        assert comp[-1] != 0
        weight = comp[0] + sum(c * 3**i for i, c in enumerate(comp) if i >= 1)
        assert weight == 6


@settings(max_examples=40, deadline=None)
@given(ell=st.sampled_from([3, 5, 7]), w=st.integers(0, 30))
def test_ell_composition_count_is_p_ell(ell, w):
    assert len(ell_compositions(ell, w)) == p_ell(ell, w)


def test_composition_sum_matches_direct_expansion():
    total = composition_sum(3, 3, 2, 6)
    by_hand = sum(
        multipartition_count(3, comp[0]) * _tail_product(comp)
        for comp in ell_compositions(3, 6)
    )
    assert total == by_hand


def _tail_product(comp):
    prod = 1
    for c in comp[1:]:
        prod *= multipartition_count(2, c)
    return prod


K_ELL_VALUES = {
    (3, 1, 2): 9,
    (3, 1, 3): 24,
    (3, 2, 3): 261,
    (3, 2, 1): 9,
    (5, 1, 5): 510,
    (5, 1, 1): 5,
}


def test_k_ell_a_w_values():
    for (ell, a, w), value in K_ELL_VALUES.items():
        assert k_ell_a_w(ell, a, w) == value


def test_k_ell_a_w_rejects_even_prime():
    with pytest.raises(ValueError, match="odd prime"):
        k_ell_a_w(2, 1, 3)


def test_val_factorial():
    assert val_factorial(3, 9) == 4
    assert val_factorial(2, 10) == 8
    assert val_factorial(5, 4) == 0
    assert val_factorial(3, 0) == 0


@settings(max_examples=40, deadline=None)
@given(ell=st.sampled_from([2, 3, 5]), w=st.integers(1, 60))
def test_val_factorial_is_legendre_sum(ell, w):
    total = 0
    power = ell
    while power <= w:
        total += w // power
        power *= ell
    assert val_factorial(ell, w) == total


def test_d_core_count_values():
    assert d_core_count(3, 2) == 1
    assert d_core_count(4, 3) == 2
    assert d_core_count(0, 4) == 1
    for m in range(1, 10):
        # 1-cores beyond the empty partition do not exist
        assert d_core_count(m, 1) == 0


GMPN_VALUES = {
    (2, 2, 2): 4,
    (4, 2, 2): 10,
    (2, 2, 4): 13,
    (6, 2, 2): 18,
    (4, 1, 2): 14,
    (2, 1, 2): 5,
}


def test_gmpn_irr_count_values():
    for (m, p, n), value in GMPN_VALUES.items():
        assert gmpn_irr_count(m, p, n) == value
    for d in range(1, 7):
        assert gmpn_irr_count(2 * d, 2, 1) == d
    assert gmpn_irr_count(4, 2, 0) == 1


def test_gmpn_irr_count_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gmpn_irr_count(3, 2, 2)  # p = 2 needs even m
    with pytest.raises(ValueError):
        gmpn_irr_count(4, 3, 2)  # only p = 1 and p = 2 are implemented


def test_private_cache_matches_shared():
    cache = CountCache()
    assert cache.multipartition_count(8, 12) == 2418710
    assert cache.p_ell(3, 12) == p_ell(3, 12)
