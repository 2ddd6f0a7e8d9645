"""L-family schemas, the shift criterion against a brute-force oracle,
ladders, spectra, cuts, and Z-block sums."""

import itertools

import pytest

from lexorder.ordinals import CofClass
from lexorder.rj4 import (AffineMap, CUT_11, CUT_W1, CUT_WW, EvAffineSeq,
                          Rj4Order, Spectrum, ZBlockSum, cut_types, end_data,
                          gap_profile, ladder, ladders_coalesce, make_I,
                          make_L, rj4_class_index, rj4_mul_omega,
                          rj4_shift_exponents, slater_iso,
                          spectra_tail_equivalent, spectrum, zsum_iso,
                          zsum_mul_omega)


# -- independent oracles -----------------------------------------------------------

def brute_slater(a: Rj4Order, b: Rj4Order, terms: int = 200, max_shift: int = 50) -> bool:
    """Shift criterion by exhaustive comparison of expanded (l, k) sequences."""
    sa = [a.seq.term(j) for j in range(1, terms + 1)]
    sb = [b.seq.term(j) for j in range(1, terms + 1)]
    onset = max(a.seq.tail_onset, b.seq.tail_onset)
    for r in range(-max_shift, max_shift + 1):
        lo = max(onset, onset - r) + 1
        hi = terms - abs(r)
        if hi - lo < 40:
            continue
        if all(sb[n - 1] == sa[n + r - 1] for n in range(lo, hi)):
            return True
    return False


def brute_spectra_tail(u: Spectrum, v: Spectrum, length: int = 200,
                       max_shift: int = 50) -> bool:
    """Shared-tail test on expanded prefixes at all shift pairs <= max_shift."""
    eu, ev = u.expand(length), v.expand(length)
    for s1 in range(max_shift):
        for s2 in range(max_shift):
            n = min(length - s1, length - s2)
            if n >= 80 and eu[s1:s1 + n] == ev[s2:s2 + n]:
                return True
    return False


# -- the L-family -------------------------------------------------------------------

def test_make_L_matches_displayed_sums():
    # L_0 = ... + 3w^3 + 2w^2 + w + w^w
    assert make_L(0).seq.terms(3) == [(1, 1), (2, 2), (3, 3)]
    # L_1 = ... + 3w^4 + 2w^3 + w^2 + w^w
    assert make_L(1).seq.terms(3) == [(1, 2), (2, 3), (3, 4)]
    # L_-1 = ... + 4w^3 + 3w^2 + 2w + w^w
    assert make_L(-1).seq.terms(3) == [(2, 1), (3, 2), (4, 3)]
    # L_-2 = ... + 5w^3 + 4w^2 + 3w + w^w
    assert make_L(-2).seq.terms(3) == [(3, 1), (4, 2), (5, 3)]


def test_mul_omega_bumps_exponents_only():
    bumped = rj4_mul_omega(make_L(0))
    assert bumped.seq.terms(3) == [(1, 2), (2, 3), (3, 4)]
    assert bumped == make_L(1)  # same schema for i >= 0
    # for negative indices the schemas differ but stay equivalent
    assert rj4_mul_omega(make_L(-1)) != make_L(0)
    assert slater_iso(rj4_mul_omega(make_L(-1)), make_L(0))


@pytest.mark.parametrize("i", range(-32, 33))
def test_product_law_over_range(i):
    assert slater_iso(rj4_mul_omega(make_L(i)), make_L(i + 1))


def test_product_law_twice():
    for i in range(-8, 9):
        twice = rj4_mul_omega(rj4_mul_omega(make_L(i)))
        assert slater_iso(twice, make_L(i + 2))


def test_slater_reflexive_and_against_oracle():
    family = {i: make_L(i) for i in range(-8, 9)}
    assert slater_iso(make_L(5), make_L(5))
    for i, j in itertools.product(family, repeat=2):
        expected = brute_slater(family[i], family[j])
        assert slater_iso(family[i], family[j]) == expected
        assert (i == j) == expected


def test_slater_on_shifted_and_padded_schemas():
    # an irregular initial segment does not matter: agreement is eventual
    padded = Rj4Order(EvAffineSeq(((9, 1), (7, 2)), AffineMap(1, 0), AffineMap(1, 0)))
    assert slater_iso(padded, make_L(0))
    assert brute_slater(padded, make_L(0))
    # dropping entries shifts the index but not the class
    dropped = Rj4Order(make_L(0).seq.drop(3))
    assert slater_iso(dropped, make_L(0))
    # different slopes never match
    doubled = Rj4Order(EvAffineSeq((), AffineMap(1, 0), AffineMap(2, 0)))
    assert not slater_iso(doubled, make_L(0))
    assert not brute_slater(doubled, make_L(0))


def test_slater_equivalence_relation_on_samples():
    pool = [make_L(i) for i in range(-4, 5)]
    pool += [rj4_mul_omega(o) for o in pool]
    pool += [Rj4Order(o.seq.drop(2)) for o in pool[:6]]
    for a in pool:
        assert slater_iso(a, a)
    for a, b in itertools.product(pool, repeat=2):
        assert slater_iso(a, b) == slater_iso(b, a)
    for a, b, c in itertools.product(pool[:8], repeat=3):
        if slater_iso(a, b) and slater_iso(b, c):
            assert slater_iso(a, c)


def test_class_index():
    for i in range(-10, 11):
        assert rj4_class_index(make_L(i)) == i
        assert rj4_class_index(rj4_mul_omega(make_L(i))) == i + 1
    weird = Rj4Order(EvAffineSeq((), AffineMap(2, 0), AffineMap(2, 0)))
    assert rj4_class_index(weird) is None


# -- spectra ---------------------------------------------------------------------------

def test_spectrum_displays():
    assert spectrum(make_L(0)).expand(10) == [1, 2, 2, 3, 3, 3, 4, 4, 4, 4]
    assert spectrum(make_L(1)).expand(10) == [2, 3, 3, 4, 4, 4, 5, 5, 5, 5]
    # L_-1 = ... + 4w^3 + 3w^2 + 2w + w^w expands to (1,1,2,2,2,...)
    assert spectrum(make_L(-1)).expand(9) == [1, 1, 2, 2, 2, 3, 3, 3, 3]


def test_spectra_not_tail_equivalent_for_L0_L1():
    s0, s1 = spectrum(make_L(0)), spectrum(make_L(1))
    assert not spectra_tail_equivalent(s0, s1)
    assert not brute_spectra_tail(s0, s1)


def test_spectrum_self_and_truncation():
    s0 = spectrum(make_L(0))
    assert spectra_tail_equivalent(s0, s0)
    chopped = s0.drop_runs(1)
    assert spectra_tail_equivalent(s0, chopped)
    assert brute_spectra_tail(s0, chopped)


def test_spectra_agree_with_slater_pairwise():
    for i, j in itertools.product(range(-12, 13), repeat=2):
        s = slater_iso(make_L(i), make_L(j))
        t = spectra_tail_equivalent(spectrum(make_L(i)), spectrum(make_L(j)))
        assert s == t == (i == j)


def test_spectra_oracle_agreement_on_mixed_pool():
    pool = [spectrum(make_L(i)) for i in range(-3, 4)]
    pool += [s.drop_runs(2) for s in pool[:4]]
    for u, v in itertools.product(pool, repeat=2):
        assert spectra_tail_equivalent(u, v) == brute_spectra_tail(u, v)


# -- ladders ---------------------------------------------------------------------------

def test_ladder_types_match_spectra():
    assert [t for _, t in ladder(make_L(0), 1).take(6)] == [1, 2, 2, 3, 3, 3]
    assert [t for _, t in ladder(make_L(1), 1).take(6)] == [2, 3, 3, 4, 4, 4]


def test_ladder_from_offset_start():
    lad = ladder(make_L(0), 4)
    assert [t for _, t in lad.take(4)] == [3, 3, 3, 4]
    assert [p for p, _ in lad.take(4)] == [4, 5, 6, 7]


def test_ladders_coalesce():
    order = make_L(0)
    for s1, s2 in itertools.combinations(range(1, 21), 2):
        met = ladders_coalesce(ladder(order, s1), ladder(order, s2), 100)
        assert met is not None and met <= max(s1, s2)


def test_invalid_ladder_start():
    with pytest.raises(ValueError):
        ladder(make_L(0), 0)


# -- cuts and Z-block sums ---------------------------------------------------------------

def test_cut_types_and_ends():
    for i in range(-12, 13):
        assert cut_types(make_L(i)) == frozenset({CUT_11, CUT_W1})
        assert end_data(make_L(i)) == (CofClass.OMEGA, CofClass.OMEGA)


def test_make_I_block_maps():
    assert make_I("even").block(0) == make_L(0)
    assert make_I("even").block(-1) == make_L(-2)
    assert make_I("odd").block(-1) == make_L(-1)
    assert make_I("mid").block(3) == make_L(3)
    with pytest.raises(ValueError):
        make_I("sideways")


def test_gap_profiles():
    for variant in ("even", "odd", "mid"):
        profile = gap_profile(make_I(variant))
        assert profile.interior_types == frozenset({CUT_11, CUT_W1})
        assert profile.boundary_type == CUT_WW
        assert profile.gaps_only_at_boundaries
    single = ZBlockSum.periodic((make_L(0),))
    assert gap_profile(single).boundary_type == CUT_WW


def test_zsum_product_relations():
    even, odd, mid = make_I("even"), make_I("odd"), make_I("mid")
    assert zsum_iso(zsum_mul_omega(even), odd)
    assert zsum_iso(zsum_mul_omega(odd), even)
    assert zsum_iso(zsum_mul_omega(mid), mid)
    for s in (even, odd, mid):
        assert zsum_iso(zsum_mul_omega(zsum_mul_omega(s)), s)
        assert zsum_iso(s, s)
    assert not zsum_iso(even, odd)
    assert not zsum_iso(even, mid)
    assert not zsum_iso(odd, mid)


def test_zsum_iso_is_symmetric_on_variants():
    sums = [make_I(v) for v in ("even", "odd", "mid")]
    sums += [zsum_mul_omega(s) for s in sums]
    for a, b in itertools.product(sums, repeat=2):
        assert zsum_iso(a, b) == zsum_iso(b, a)


def test_zsum_periodic_tables():
    table = ZBlockSum.periodic((make_L(0), make_L(1)))
    rotated = ZBlockSum.periodic((make_L(1), make_L(0)))
    assert zsum_iso(table, rotated)
    assert not zsum_iso(table, ZBlockSum.periodic((make_L(0), make_L(2))))
    assert not zsum_iso(table, make_I("mid"))


def test_zsum_iso_refuses_non_L_blocks():
    alien = Rj4Order(EvAffineSeq((), AffineMap(2, 0), AffineMap(2, 0)))
    with pytest.raises(ValueError):
        zsum_iso(ZBlockSum.periodic((alien,)), make_I("even"))


def test_schema_validation():
    with pytest.raises(ValueError):
        EvAffineSeq((), AffineMap(1, 0), AffineMap(0, 3))  # k not increasing
    with pytest.raises(ValueError):
        EvAffineSeq((), AffineMap(-1, 10), AffineMap(1, 0))  # l eventually negative
    with pytest.raises(ValueError):
        EvAffineSeq(((1, 5),), AffineMap(1, 0), AffineMap(1, 0))  # k drops at onset
    with pytest.raises(ValueError):
        rj4_shift_exponents(make_L(0), -1)


def test_schema_canonicalization_absorbs_redundant_initial():
    redundant = EvAffineSeq(((1, 1), (2, 2)), AffineMap(1, 0), AffineMap(1, 0))
    assert redundant == make_L(0).seq
    assert redundant.initial == ()
