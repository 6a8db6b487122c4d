import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockcensus import oracle
from blockcensus.counting import (
    d_core_count,
    gmpn_irr_count,
    multipartition_count,
    partition_count,
)


def test_partitions_of_counts():
    for t in range(13):
        parts = list(oracle.partitions_of(t))
        assert len(parts) == partition_count(t)
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert sum(lam) == t
            assert all(a >= b for a, b in zip(lam, lam[1:]))


def test_conjugate_partition_involution():
    for t in range(10):
        for lam in oracle.partitions_of(t):
            conj = oracle.conjugate_partition(lam)
            assert sum(conj) == t
            assert oracle.conjugate_partition(conj) == lam


def test_hook_lengths():
    assert sorted(oracle.hook_lengths((2, 1))) == [1, 1, 3]
    assert sorted(oracle.hook_lengths((3,))) == [1, 2, 3]
    assert sorted(oracle.hook_lengths((2, 2))) == [1, 2, 2, 3]
    assert oracle.hook_lengths(()) == []


def test_d_core_census_matches_counting():
    # both partitions of 2 dodge every hook of length 3
    assert oracle.is_d_core((2,), 3)
    assert oracle.is_d_core((1, 1), 3)
    # the corner hook of (2, 1) has length exactly 3
    assert not oracle.is_d_core((2, 1), 3)
    for m in range(9):
        for d in range(2, 6):
            assert oracle.d_core_census(m, d) == d_core_count(m, d), (m, d)


def test_compositions_into():
    combos = list(oracle.compositions_into(3, 2))
    assert combos == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert list(oracle.compositions_into(0, 3)) == [(0, 0, 0)]
    assert len(list(oracle.compositions_into(5, 3))) == 21


def test_multipartition_enumeration_matches_recurrence():
    for s in range(1, 9):
        for t in range(9):
            assert oracle.multipartition_enumerate(s, t) == multipartition_count(s, t)


def test_multipartition_tuples_literal():
    tuples = list(oracle.multipartition_tuples(2, 2))
    assert len(tuples) == 5
    assert ((2,), ()) in tuples and ((1,), (1,)) in tuples
    for combo in tuples:
        assert len(combo) == 2
        assert sum(sum(lam) for lam in combo) == 2


def test_multipartition_enumerate_cap():
    with pytest.raises(ValueError, match="enumeration cap exceeded"):
        oracle.multipartition_enumerate(9, 1)
    with pytest.raises(ValueError, match="enumeration cap exceeded"):
        oracle.multipartition_enumerate(2, 13)


def test_small_field_axioms_all_sizes():
    for q in oracle._SUPPORTED_Q:
        field = oracle.SmallField(q)
        assert field.q == q
        g = field.generator()
        seen = {g}
        x = g
        for _ in range(q - 2):
            x = field.mul(x, g)
            seen.add(x)
        assert len(seen) == q - 1  # the generator really has order q - 1


def test_small_field_rejects_reducible_modulus():
    # x^3 + 1 factors over GF(2)
    with pytest.raises(ValueError):
        oracle.SmallField(8, (1, 0, 0, 1))
    with pytest.raises(ValueError):
        oracle.SmallField(6)


def test_both_gf8_moduli_agree():
    a = oracle.gl_ell_class_census(2, 8, 3, modulus=(1, 1, 0, 1))
    b = oracle.gl_ell_class_census(2, 8, 3, modulus=(1, 0, 1, 1))
    key = lambda c: (c.size, c.centralizer_order, c.element_order)
    assert sorted(map(key, a.classes)) == sorted(map(key, b.classes))


def test_matrix_helpers_roundtrip():
    field = oracle.SmallField(4)
    m = ((2, 1), (1, 1))
    assert oracle.mat_det(field, m) != 0
    inv = oracle.mat_inv(field, m)
    assert oracle.mat_mul(field, m, inv) == oracle.mat_identity(2)
    assert oracle.mat_pow(field, m, 0) == oracle.mat_identity(2)
    singular = ((1, 1), (1, 1))
    assert oracle.mat_det(field, singular) == 0
    with pytest.raises(ZeroDivisionError):
        oracle.mat_inv(field, singular)


def test_gl_order():
    assert oracle.gl_order(2, 2) == 6
    assert oracle.gl_order(2, 4) == 180
    assert oracle.gl_order(3, 2) == 168
    assert oracle.gl_order(3, 4) == 181440
    assert oracle.gl_order(3, 5) == 1488000


def test_mulclose_generates_gl2_gf2():
    field = oracle.SmallField(2)
    group = oracle.mulclose(field, oracle.gl_generators(field, 2), cap=10)
    assert len(group) == 6
    with pytest.raises(ValueError, match="cap"):
        oracle.mulclose(field, oracle.gl_generators(field, 2), cap=5)


# (n, q, ell) -> (sorted centralizer orders, ell-power element count)
CENSUS_EXPECTED = {
    (2, 2, 3): ([3, 6], 3),
    (2, 4, 3): ([9, 9, 9, 180, 180, 180], 63),
    (3, 2, 7): ([7, 7, 168], 49),
    (2, 5, 3): ([24, 480], 21),
    (2, 9, 5): ([80, 80, 5760], 145),
    (2, 4, 5): ([15, 15, 180], 25),
    (2, 8, 3): ([63, 63, 63, 63, 3528], 225),
    (3, 3, 13): ([26, 26, 26, 26, 11232], 1729),
}


def test_census_values():
    for (n, q, ell), (orders, total) in CENSUS_EXPECTED.items():
        census = oracle.gl_ell_class_census(n, q, ell)
        assert census.group_order == oracle.gl_order(n, q)
        got = sorted(c.centralizer_order for c in census.classes)
        assert got == orders, (n, q, ell)
        assert census.ell_element_total == total, (n, q, ell)
        for datum in census.classes:
            assert census.group_order % datum.size == 0
            assert datum.centralizer_order * datum.size == census.group_order
        assert oracle.census_matches_weight_vectors(census), (n, q, ell)


def test_census_gl3_gf4():
    census = oracle.gl_ell_class_census(3, 4, 3)
    assert len(census.classes) == 12
    orders = sorted(c.centralizer_order for c in census.classes)
    assert orders == [27] + [63] * 2 + [540] * 6 + [181440] * 3
    assert census.ell_element_total == 14499
    assert oracle.census_matches_weight_vectors(census)


def test_census_gl3_gf5_random_seeded():
    census = oracle.gl_ell_class_census(3, 5, 3)
    orders = sorted(c.centralizer_order for c in census.classes)
    assert orders == [96, 1488000]
    assert census.ell_element_total == 15501
    assert oracle.census_matches_weight_vectors(census)


def test_census_rank_one():
    census = oracle.gl_ell_class_census(1, 4, 3)
    assert len(census.classes) == 3
    assert all(c.centralizer_order == 3 and c.size == 1 for c in census.classes)
    assert oracle.census_matches_weight_vectors(census)


def test_census_is_deterministic():
    a = oracle.gl_ell_class_census(3, 4, 3)
    b = oracle.gl_ell_class_census(3, 4, 3)
    assert [c.representative for c in a.classes] == [
        c.representative for c in b.classes
    ]


def test_census_caps_and_rejections():
    with pytest.raises(ValueError, match="n must be 1..3"):
        oracle.gl_ell_class_census(4, 5, 3)
    with pytest.raises(ValueError, match="census cap exceeded"):
        oracle.gl_ell_class_census(3, 7, 3)
    with pytest.raises(ValueError, match="odd prime"):
        oracle.gl_ell_class_census(2, 5, 2)
    with pytest.raises(ValueError, match="must not divide"):
        oracle.gl_ell_class_census(2, 9, 3)


def test_census_weight_vector_mismatch_guard():
    census = oracle.gl_ell_class_census(2, 4, 3)
    from blockcensus import slots

    wrong = slots.build_inventory(slots.LINEAR, 5, 1, 1)
    with pytest.raises(ValueError, match="does not match"):
        oracle.census_matches_weight_vectors(census, wrong)


GMPN_CLASS_COUNTS = {
    (2, 1, 2): 5,
    (2, 2, 2): 4,
    (4, 1, 2): 14,
    (6, 2, 2): 18,
    (3, 1, 1): 3,
    (4, 2, 1): 2,
    (2, 2, 3): 5,
}


def test_gmpn_class_counts():
    for (m, p, n), expected in GMPN_CLASS_COUNTS.items():
        assert oracle.gmpn_class_count(m, p, n) == expected, (m, p, n)


def test_gmpn_class_counts_match_formula():
    for m in (1, 2, 3, 4):
        for n in (1, 2, 3):
            assert oracle.gmpn_class_count(m, 1, n) == gmpn_irr_count(m, 1, n)
    for m in (2, 4, 6):
        for n in (1, 2, 3):
            assert oracle.gmpn_class_count(m, 2, n) == gmpn_irr_count(m, 2, n)


def test_gmpn_group_structure():
    m, p, n = 4, 2, 2
    elements = oracle.gmpn_elements(m, p, n)
    assert len(elements) == oracle.gmpn_order(m, p, n) == 16
    ident = oracle.gmpn_identity(n)
    for g in elements:
        assert oracle.gmpn_mul(m, g, oracle.gmpn_inv(m, g)) == ident
    closed = set(elements)
    for g in elements[:6]:
        for h in elements[:6]:
            assert oracle.gmpn_mul(m, g, h) in closed


def test_gmpn_cap():
    with pytest.raises(ValueError, match="enumeration cap exceeded"):
        oracle.gmpn_elements(10, 1, 6)


def test_sl2_gf4_census():
    classes = oracle.sl2_gf4_census()
    assert tuple(c.size for c in classes) == (1, 15, 20, 12, 12)
    assert tuple(c.element_order for c in classes) == (1, 2, 3, 5, 5)
    assert sum(c.size for c in classes) == 60


def test_a5_fixture():
    result = oracle.a5_fixture_check()
    assert result["group_order"] == 60
    assert result["principal_block_size"] == 3
    assert result["defect_zero_count"] == 2
    assert result["class_sizes"] == (1, 15, 20, 12, 12)


@settings(max_examples=25, deadline=None)
@given(m=st.integers(1, 4), n=st.integers(1, 3))
def test_gmpn_identity_properties(m, n):
    ident = oracle.gmpn_identity(n)
    gens = oracle.gmpn_generators(m, 1, n)
    for g in gens:
        assert oracle.gmpn_mul(m, g, ident) == g
        assert oracle.gmpn_mul(m, ident, g) == g
        order = oracle.gmpn_order(m, 1, n)
        x, steps = g, 1
        while x != ident:
            x = oracle.gmpn_mul(m, x, g)
            steps += 1
            assert steps <= order
