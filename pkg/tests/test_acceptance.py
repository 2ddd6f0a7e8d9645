"""Acceptance suite: every exit criterion at its stated tolerance.

All checks are exact (symbolic equality or boolean verdicts); the only
tolerances are the two wall-clock bounds.  Run with ``pytest -s`` to see the
one-line verdict per criterion.
"""

import itertools
import time

from lexorder.ordinals import law_suite, ord_add
from lexorder.rj4 import (CUT_11, CUT_W1, CUT_WW, cut_types, gap_profile,
                          ladder, ladders_coalesce, make_I, make_L,
                          rj4_mul_omega, slater_iso, spectra_tail_equivalent,
                          spectrum, zsum_iso, zsum_mul_omega)
from lexorder.seqs import Label, cons, flatten_check, label, odd_period_char, tail_equiv2
from lexorder.verify import (Config, _exhaustive_family, _oracle_self_tail2,
                             check_product_law, check_pairwise_non_iso,
                             check_spectra, verify_all)


def report(number: int, ok: bool, text: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
    assert ok, f"criterion {number} failed: {text}"


def test_criterion_1_product_law_under_one_second():
    start = time.perf_counter()
    ok = all(slater_iso(rj4_mul_omega(make_L(i)), make_L(i + 1))
             for i in range(-32, 33))
    elapsed = time.perf_counter() - start
    report(1, ok and elapsed < 1.0,
           f"L(i)*w = L(i+1) for all i in [-32, 32], exact, in {elapsed:.3f}s (< 1s)")


def test_criterion_2_pairwise_non_isomorphism():
    pairs = [(i, j) for i in range(-12, 13) for j in range(-12, 13) if i != j]
    assert len(pairs) == 600
    ok = True
    for i, j in pairs:
        s = slater_iso(make_L(i), make_L(j))
        t = spectra_tail_equivalent(spectrum(make_L(i)), spectrum(make_L(j)))
        ok = ok and (s is False) and (t is False) and (s == t)
    report(2, ok, "all 600 ordered pairs in [-12, 12]: both invariants false and agreeing")


def test_criterion_3_spectrum_reproduction():
    expected0 = [k for k in range(1, 51) for _ in range(k)][:50]
    expected1 = [k + 1 for k in range(1, 51) for _ in range(k)][:50]
    ok = (spectrum(make_L(0)).expand(50) == expected0
          and spectrum(make_L(1)).expand(50) == expected1)
    report(3, ok, "spectra of L(0), L(1) match (1,2,2,3,3,3,...) and "
                  "(2,3,3,4,4,4,...) to 50 entries exactly")


def test_criterion_4_block_sum_relations():
    even, odd, mid = make_I("even"), make_I("odd"), make_I("mid")
    ok = (zsum_iso(zsum_mul_omega(even), odd)
          and zsum_iso(zsum_mul_omega(odd), even)
          and zsum_iso(zsum_mul_omega(mid), mid))
    for s in (even, odd, mid):
        ok = ok and zsum_iso(zsum_mul_omega(zsum_mul_omega(s)), s)
    for a, b in itertools.permutations((even, odd, mid), 2):
        ok = ok and not zsum_iso(a, b)
    report(4, ok, "I_even*w = I_odd, I_odd*w = I_even, I_mid*w = I_mid, w^2 "
                  "invariance, and pairwise non-isomorphism, exact")


def test_criterion_5_cut_and_gap_profiles():
    expected = frozenset({CUT_11, CUT_W1})
    ok = all(cut_types(make_L(i)) == expected for i in range(-12, 13))
    for variant in ("even", "odd", "mid"):
        profile = gap_profile(make_I(variant))
        ok = (ok and profile.interior_types == expected
              and profile.boundary_type == CUT_WW
              and profile.gaps_only_at_boundaries)
    report(5, ok, "cut_types(L(i)) = {(1,1),(w,1)} on [-12,12]; block sums have "
                  "(w,w)-gaps exactly at block boundaries")


def _family():
    return _exhaustive_family(alphabet=(-1, 1, 2), max_pre=3, max_per=4)


def test_criterion_6_odd_period_equivalence():
    discrepancies = 0
    for u in _family():
        expected = odd_period_char(u)
        if _oracle_self_tail2(u) != expected:
            discrepancies += 1
        for a in (-1, 1, 2):
            if tail_equiv2(u, cons(a, u)) != expected:
                discrepancies += 1
    report(6, discrepancies == 0,
           "tail_equiv2(u, cons(a, u)) iff odd primitive period, exhaustively "
           "(alphabet 3, preperiod <= 3, period <= 4) against the brute-force "
           f"oracle; {discrepancies} discrepancies")


def test_criterion_7_class_split_and_label_parity():
    family = _family()
    discrepancies = 0
    by_class: dict = {}
    for u in family:
        by_class.setdefault(tuple(sorted(u.period[k:] + u.period[:k]
                                         for k in range(len(u.period))))[0], []).append(u)
    for members in by_class.values():
        anchor = members[0]
        shifted = cons(1, anchor)
        for v in members:
            if not (tail_equiv2(v, anchor) or tail_equiv2(v, shifted)):
                discrepancies += 1
    swap = {Label.EVEN: Label.ODD, Label.ODD: Label.EVEN, Label.FULL: Label.FULL}
    for u in family:
        for a in (-1, 1, 2):
            if label(cons(a, u)) is not swap[label(u)]:
                discrepancies += 1
    report(7, discrepancies == 0,
           f"[u] = [u]_2 union [a*u]_2 and labels swap under cons; "
           f"{discrepancies} discrepancies over {len(family)} sequences")


def test_criterion_8_ladder_coalescence():
    ok = True
    for i in range(-5, 6):
        order = make_L(i)
        for s1, s2 in itertools.combinations(range(1, 21), 2):
            if ladders_coalesce(ladder(order, s1), ladder(order, s2), 100) is None:
                ok = False
    report(8, ok, "all ladder pairs from 20 start cuts coalesce within depth 100 "
                  "for i in [-5, 5]")


def test_criterion_9_flattening():
    result = flatten_check(alphabet_bound=5, samples=10_000, seed=7)
    report(9, result.passed and result.checked_order == 10_000,
           f"10^4 seeded samples: {len(result.violations)} order violations, "
           f"{result.checked_density} density constructions, all between their bounds")


def test_criterion_10_law_suite_mutation_and_wall_time():
    laws = law_suite(10_000, seed=7)

    def broken_add(a, b):
        if a.is_finite and not a.is_zero and b.is_limit:
            return ord_add(b, a)  # deliberately skips absorption
        return ord_add(a, b)

    mutation_caught = not law_suite(100, add=broken_add).passed
    cfg = Config(range_i=(-4, 4), pair_range=(-3, 3), ladder_depth=40,
                 flatten_samples=200, law_samples=200)
    family_mutation_caught = not all(r.passed for r in (
        check_product_law(cfg, make_l=lambda i: rj4_mul_omega(make_L(i))),
        check_pairwise_non_iso(cfg, make_l=lambda i: make_L(abs(i))),
        check_spectra(cfg, make_l=lambda i: make_L(i + 1)),
    ))
    start = time.perf_counter()
    full = verify_all(Config())
    elapsed = time.perf_counter() - start
    ok = (laws.passed and laws.checked >= 10_000 and mutation_caught
          and family_mutation_caught and full.passed and elapsed < 5.0)
    report(10, ok,
           f"10^4 ordinal law samples clean, mutations caught, full verify "
           f"passed in {elapsed:.2f}s (< 5s)")
