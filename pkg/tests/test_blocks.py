import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockcensus import blocks
from blockcensus.blocks import (
    BlockQuery,
    EllProfile,
    SweepSpec,
    block_invariants,
    bound_thm_slnproof,
    defect_exponent,
    ell_profile,
    ennola_profile,
    enumerate_unipotent_blocks_linear,
    is_abelian_defect,
    k_principal_pslell,
    k_principal_slrange,
    k_unipotent_block,
    spec_hash,
    sweep,
    valuation,
    verdict,
)
from blockcensus.counting import d_core_count, k_ell_a_w, val_factorial


def test_valuation():
    assert valuation(3, 54) == 3
    assert valuation(5, 7) == 0
    with pytest.raises(ValueError):
        valuation(3, 0)


PROFILE_VALUES = {
    (4, 3): (1, 1),
    (8, 7): (1, 1),
    (7, 5): (4, 2),
    (2, 3): (2, 1),
    (4, 5): (2, 1),
    (5, 2): (1, 2),
    (3, 2): (2, 3),
}


def test_ell_profile_values():
    for (q, ell), (d, a) in PROFILE_VALUES.items():
        prof = ell_profile(q, ell)
        assert (prof.d, prof.a) == (d, a), (q, ell)
        assert prof.q == q


def test_ell_profile_rejects():
    with pytest.raises(ValueError, match="divides"):
        ell_profile(9, 3)
    with pytest.raises(ValueError):
        ell_profile(1, 3)
    with pytest.raises(ValueError, match="prime"):
        ell_profile(4, 6)


def test_ennola_profile():
    prof = ennola_profile(6, 5)
    assert (prof.d, prof.a) == (2, 1)
    # ennola transfer fixes primes where -q and q generate the same subgroup
    assert (ennola_profile(4, 3).d, ennola_profile(4, 3).a) == (2, 1)
    with pytest.raises(ValueError):
        ennola_profile(6, 2)


def test_profile_validation():
    with pytest.raises(ValueError):
        EllProfile(9, 1, 1)
    with pytest.raises(ValueError, match="divide"):
        EllProfile(5, 3, 1)
    with pytest.raises(ValueError):
        EllProfile(3, 1, 0)
    with pytest.raises(ValueError):
        EllProfile(2, 3, 1)
    assert EllProfile(5, 4, 1).dprime == 2
    assert EllProfile(5, 2, 1).dprime == 1
    assert EllProfile(3, 1, 1).dprime == 1


def test_block_query_validation():
    prof = EllProfile(3, 1, 1)
    with pytest.raises(ValueError, match="unknown family"):
        BlockQuery("GLL", prof, w=1)
    with pytest.raises(ValueError, match="does not fit"):
        BlockQuery(blocks.GL, EllProfile(5, 2, 1), w=4, n=3)
    with pytest.raises(ValueError, match="n >= 4"):
        BlockQuery(blocks.SOEVEN_PLUS, prof, w=0, n=2)


def test_profile_consistency_check():
    # synthetic profiles skip the check, witnessed ones must match
    ok = BlockQuery(blocks.GL, EllProfile(3, 1, 1, q=4), w=2)
    assert block_invariants(ok).k_B == 9
    bad = BlockQuery(blocks.GL, EllProfile(3, 2, 1, q=4), w=2)
    with pytest.raises(ValueError, match="does not match q=4"):
        block_invariants(bad)
    # the unitary family derives its profile through the ennola transfer
    uq = BlockQuery(blocks.GU, EllProfile(5, 2, 1, q=6), w=1)
    assert block_invariants(uq).k_B == 4


K_BLOCK_VALUES = {
    (blocks.GL, 3, 1, 1, 2): 9,
    (blocks.GL, 3, 1, 1, 3): 24,
    (blocks.GL, 3, 1, 2, 3): 261,
    (blocks.GL, 5, 1, 1, 1): 5,
    (blocks.GL, 5, 1, 1, 5): 510,
    (blocks.GU, 3, 1, 1, 2): 9,
    (blocks.SP, 3, 1, 1, 2): 9,
    (blocks.SP, 3, 1, 1, 0): 1,
    (blocks.SOEVEN_PLUS, 3, 1, 1, 2): 9,
}


def test_k_unipotent_block_values():
    for (family, ell, d, a, w), expected in K_BLOCK_VALUES.items():
        query = BlockQuery(family, EllProfile(ell, d, a), w=w)
        assert k_unipotent_block(query) == expected, (family, ell, d, a, w)


def test_k_unipotent_block_matches_split_closed_form():
    for ell in (3, 5):
        for a in (1, 2):
            for w in range(7):
                query = BlockQuery(blocks.GL, EllProfile(ell, 1, a), w=w)
                assert k_unipotent_block(query) == k_ell_a_w(ell, a, w)


def test_k_unipotent_block_rejects():
    with pytest.raises(ValueError, match="odd"):
        k_unipotent_block(BlockQuery(blocks.GL, EllProfile(2, 1, 1), w=1))
    with pytest.raises(ValueError, match="weight-addressed"):
        k_unipotent_block(BlockQuery(blocks.SLRANGE, EllProfile(3, 1, 1), n=2))
    with pytest.raises(ValueError, match="needs w"):
        k_unipotent_block(BlockQuery(blocks.GL, EllProfile(3, 1, 1)))


SL_VALUES = {
    (2, 3, 1, 1, 0): 3,
    (3, 3, 1, 1, 1): 16,
    (3, 3, 2, 2, 1): 37,
    (5, 5, 1, 1, 1): 126,
}


def test_k_principal_slrange_values():
    for (n, ell, a, g, m), expected in SL_VALUES.items():
        query = BlockQuery(blocks.SLRANGE, EllProfile(ell, 1, a), n=n, g=g, m=m)
        assert k_principal_slrange(query) == expected, (n, ell, a, g, m)


def test_k_principal_slrange_g_zero_is_ambient_count():
    for ell, a, n in ((3, 1, 4), (3, 2, 2), (5, 1, 6)):
        query = BlockQuery(blocks.SLRANGE, EllProfile(ell, 1, a), n=n, g=0, m=0)
        assert k_principal_slrange(query) == k_ell_a_w(ell, a, n)


def test_k_principal_pslell_values():
    assert k_principal_pslell(3, 1) == 6
    assert k_principal_pslell(3, 2) == 13
    assert k_principal_pslell(5, 1) == 26


def test_defect_exponents():
    assert defect_exponent(blocks.GL, 3, 1, w=4) == 4 + val_factorial(3, 4)
    assert defect_exponent(blocks.SP, 3, 2, w=3) == 7
    assert defect_exponent(blocks.SLRANGE, 3, 1, n=3, g=1) == 3
    assert defect_exponent(blocks.SURANGE, 5, 1, n=5, g=1) == 5
    assert defect_exponent(blocks.PSLELL, 3, 1) == 2
    assert defect_exponent(blocks.PSLELL, 3, 2) == 4
    assert defect_exponent(blocks.PSLELL, 5, 1) == 4
    with pytest.raises(ValueError):
        defect_exponent(blocks.GL, 3, 1)
    with pytest.raises(ValueError):
        defect_exponent(blocks.SLRANGE, 3, 1)


def test_abelian_defect():
    assert is_abelian_defect(2, 3)
    assert not is_abelian_defect(3, 3)
    assert is_abelian_defect(0, 3)


def test_verdict_decision_table():
    E, U = blocks.EXACT, blocks.UPPER_BOUND
    assert verdict(4, E, 1, True, 5) == blocks.HOLDS_STRICT
    assert verdict(5, E, 1, True, 5) == blocks.HOLDS_EQUALITY_ABELIAN
    assert verdict(6, E, 1, True, 5) == blocks.VIOLATION
    assert verdict(9, E, 2, False, 3) == blocks.HOLDS_NONSTRICT
    assert verdict(10, E, 2, False, 3) == blocks.VIOLATION
    # upper bounds above the threshold prove nothing
    assert verdict(9, U, 2, False, 3) == blocks.INCONCLUSIVE_UPPER_BOUND
    assert verdict(8, U, 2, False, 3) == blocks.HOLDS_STRICT
    # an upper bound that still lands on an abelian order validates equality
    assert verdict(9, U, 2, True, 3) == blocks.HOLDS_EQUALITY_ABELIAN
    with pytest.raises(ValueError):
        verdict(1, "sharp", 1, True, 3)


def test_block_invariants_weight_family():
    inv = block_invariants(BlockQuery(blocks.SP, EllProfile(3, 1, 1), w=2))
    assert inv.k_B == 9
    assert inv.defect_exponent == 2
    assert inv.abelian_defect
    assert inv.verdict == blocks.HOLDS_EQUALITY_ABELIAN
    assert inv.two_path_checked
    no_check = block_invariants(
        BlockQuery(blocks.SP, EllProfile(3, 1, 1), w=2), check_two_path=False
    )
    assert no_check.k_B == 9 and not no_check.two_path_checked


def test_block_invariants_principal_families():
    sl = block_invariants(
        BlockQuery(blocks.SLRANGE, EllProfile(3, 1, 1), n=2, g=1, m=0)
    )
    # same shape as the alternating-group fixture: three characters in a
    # block with a cyclic defect group of order three
    assert sl.k_B == 3 and sl.defect_exponent == 1 and sl.abelian_defect
    assert sl.verdict == blocks.HOLDS_EQUALITY_ABELIAN
    assert not sl.two_path_checked
    psl1 = block_invariants(BlockQuery(blocks.PSLELL, EllProfile(3, 1, 1), n=3))
    assert psl1.k_B == 6 and psl1.abelian_defect
    psl2 = block_invariants(BlockQuery(blocks.PSLELL, EllProfile(3, 1, 2), n=3))
    assert psl2.k_B == 13 and not psl2.abelian_defect
    psl3 = block_invariants(BlockQuery(blocks.PSLELL, EllProfile(5, 1, 1), n=5))
    assert psl3.k_B == 26 and not psl3.abelian_defect
    for inv in (psl1, psl2, psl3):
        assert inv.verdict == blocks.HOLDS_STRICT


@settings(max_examples=60, deadline=None)
@given(
    family=st.sampled_from(sorted(blocks.WEIGHT_FAMILIES)),
    ell=st.sampled_from([3, 5]),
    a=st.integers(1, 2),
    w=st.integers(0, 6),
)
def test_strong_form_never_violated_on_grid(family, ell, a, w):
    inv = block_invariants(BlockQuery(family, EllProfile(ell, 1, a), w=w))
    assert inv.verdict != blocks.VIOLATION
    if w >= ell:
        assert inv.verdict == blocks.HOLDS_STRICT
    if inv.verdict == blocks.HOLDS_EQUALITY_ABELIAN:
        assert inv.abelian_defect and inv.k_B == ell**inv.defect_exponent


def test_bound_dominates_exact_count():
    assert bound_thm_slnproof(3, 3, 1, 1) == 27
    for ell in (3, 5):
        for a in (1, 2):
            for n in range(1, 21):
                m = min(valuation(ell, n), a) if n % ell == 0 else 0
                query = BlockQuery(
                    blocks.SLRANGE, EllProfile(ell, 1, a), n=n, g=a, m=m
                )
                exact = k_principal_slrange(query)
                assert exact <= bound_thm_slnproof(n, ell, a, m), (ell, a, n)


def test_boundary_case_chain():
    # at rank n = ell the count stays below ell**(a(ell-1)) + ell**2,
    # which is itself below the next power of ell
    for ell, a, expected in ((3, 1, 16), (3, 2, 37), (5, 1, 126)):
        query = BlockQuery(blocks.SLRANGE, EllProfile(ell, 1, a), n=ell, g=a, m=1)
        exact = k_principal_slrange(query)
        assert exact == expected
        mid = ell ** (a * (ell - 1)) + ell**2
        assert exact <= mid < ell ** (a * (ell - 1) + 1)


def test_enumerate_unipotent_blocks_linear():
    assert enumerate_unipotent_blocks_linear(3, 2) == [(1, 1), (0, 1)]
    assert enumerate_unipotent_blocks_linear(2, 1) == [(2, 1)]
    pairs = enumerate_unipotent_blocks_linear(6, 3)
    assert pairs[0][0] == 2
    for w, mult in pairs:
        assert mult == d_core_count(6 - 3 * w, 3)
    with pytest.raises(ValueError):
        enumerate_unipotent_blocks_linear(0, 1)


def test_sweep_spec_validation():
    with pytest.raises(ValueError, match="empty"):
        SweepSpec(families=(), ell_values=(3,)).validate()
    with pytest.raises(ValueError, match="unknown families"):
        SweepSpec(families=("GLL",), ell_values=(3,), w_values=(1,)).validate()
    with pytest.raises(ValueError, match="odd primes"):
        SweepSpec(families=(blocks.GL,), ell_values=(2,), w_values=(1,)).validate()
    with pytest.raises(ValueError, match="prime"):
        SweepSpec(families=(blocks.GL,), ell_values=(9,), w_values=(1,)).validate()
    with pytest.raises(ValueError, match="need w"):
        SweepSpec(families=(blocks.GL,), ell_values=(3,)).validate()
    with pytest.raises(ValueError, match="need n"):
        SweepSpec(families=(blocks.SLRANGE,), ell_values=(3,)).validate()
    SweepSpec(families=(blocks.GL,), ell_values=(3,), w_values=(1,)).validate()


def _small_spec(**overrides):
    base = dict(
        families=(blocks.GL,),
        ell_values=(3,),
        a_values=(1,),
        w_values=(0, 1, 2),
    )
    base.update(overrides)
    return SweepSpec(**base)


def test_sweep_row_layout():
    report = sweep(_small_spec())
    # d expands to the divisors of ell - 1 = 2
    assert len(report.rows) == 6
    assert [r["d"] for r in report.rows] == [1, 1, 1, 2, 2, 2]
    assert [r["w"] for r in report.rows] == [0, 1, 2, 0, 1, 2]
    assert all(r["verdict"] != "ERROR" for r in report.rows)
    assert not report.errors
    assert not report.has_violation()
    assert report.metadata["tool"] == "blockcensus"
    assert "timestamp" not in report.metadata


def test_sweep_error_rows_are_isolated():
    # ell divides q: the profile for that row cannot be derived
    report = sweep(_small_spec(q_values=(3,)))
    assert all(r["verdict"] == "ERROR" for r in report.rows)
    assert len(report.errors) == len(report.rows)
    assert not report.has_violation()
    good = sweep(_small_spec(q_values=(4,)))
    # w < ell everywhere here, so every valid row sits at the abelian bound
    assert [r["verdict"] for r in good.rows if r["d"] == 1] == [
        blocks.HOLDS_EQUALITY_ABELIAN
    ] * 3
    # d = 2 rows disagree with the witnessed profile and become errors
    assert all(r["verdict"] == "ERROR" for r in good.rows if r["d"] == 2)


def test_sweep_jobs_deterministic():
    spec = SweepSpec(
        families=(blocks.GL, blocks.SP, blocks.PSLELL),
        ell_values=(3, 5),
        a_values=(1, 2),
        w_values=(0, 1, 2, 3),
    )
    serial = sweep(spec, jobs=1)
    parallel = sweep(spec, jobs=4)
    assert serial.to_csv() == parallel.to_csv()
    assert serial.to_json() == parallel.to_json()


def test_report_formats():
    report = sweep(_small_spec(), timestamp="2026-01-01T00:00:00+00:00")
    csv_text = report.to_csv()
    lines = csv_text.splitlines()
    assert lines[0] == "# tool: blockcensus"
    assert any(line.startswith("# timestamp: 2026-01-01") for line in lines)
    header = next(l for l in lines if not l.startswith("#"))
    assert header.split(",") == list(blocks.REPORT_COLUMNS)
    data = [l for l in lines if not l.startswith("#")][1:]
    assert len(data) == 6
    assert data[2].split(",")[blocks.REPORT_COLUMNS.index("k_B")] == "9"

    payload = json.loads(report.to_json())
    assert payload["metadata"]["tool"] == "blockcensus"
    assert len(payload["rows"]) == 6
    csv_cells = [row.split(",") for row in data]
    json_cells = [
        [row[col] for col in blocks.REPORT_COLUMNS] for row in payload["rows"]
    ]
    assert csv_cells == json_cells

    md = report.to_markdown()
    assert "| " + " | ".join(blocks.REPORT_COLUMNS) + " |" in md
    with pytest.raises(ValueError):
        report.render("yaml")
    assert report.render("csv") == csv_text


def test_boolean_cells_render_lowercase():
    report = sweep(_small_spec())
    strings = report.row_strings()
    assert strings[0]["abelian"] == "true"
    assert strings[0]["two_path_checked"] == "true"
    assert strings[0]["n"] == ""


def test_spec_hash_stability():
    a = spec_hash(_small_spec())
    b = spec_hash(_small_spec())
    c = spec_hash(_small_spec(w_values=(0, 1, 2, 3)))
    assert a == b
    assert a != c
    assert len(a) == 16 and all(ch in "0123456789abcdef" for ch in a)


def test_sweep_psl_rows_fix_g_and_m():
    spec = SweepSpec(families=(blocks.PSLELL,), ell_values=(3,), a_values=(1, 2))
    report = sweep(spec)
    assert [(r["g"], r["m"], r["k_B"]) for r in report.rows] == [
        (1, 1, 6),
        (2, 1, 13),
    ]
