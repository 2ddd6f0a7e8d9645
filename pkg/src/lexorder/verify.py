"""End-to-end replay of every finitary computation behind the construction.

The target theorem produces non-isomorphic orders X and Y that divide each
other on both sides: X = AY = Yw and Y = AX = Xw with A = w1* + w1.  The
uncountable scaffolding (A^w replacements and the automorphism fixed point)
is taken as given; everything countable reduces to the checks below, grouped
so a failure points at one step of the construction:

  C1  ordinal arithmetic law suite and identity table
  C2  L_i * w = L_{i+1} across the configured range
  C3  pairwise non-isomorphism of the L_i, with the shift criterion and the
      spectrum invariant agreeing on every ordered pair
  C4  the displayed ladder spectra of L_0 and L_1, and their non-equivalence
  C5  ladder coalescence from many start cuts
  C6  cut classification of the L_i and gap placement in the block sums
  C7  I_even * w = I_odd, I_odd * w = I_even, I_mid * w = I_mid, invariance
      under w^2, and pairwise non-isomorphism of the three
  C8  sequence machinery: odd-period criterion against the brute-force
      oracle, tail-class splitting, label parity, flattening checks

Each check function takes its inputs as parameters with the real
constructors as defaults, so tests can inject deliberately broken ones and
confirm the replay catches them.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import seqs
from .ordinals import law_suite
from .rj4 import (CUT_11, CUT_W1, CUT_WW, CofClass, cut_types, end_data,
                  gap_profile, ladder, ladders_coalesce, make_I, make_L,
                  rj4_mul_omega, slater_iso, spectrum,
                  spectra_tail_equivalent, zsum_iso, zsum_mul_omega)


@dataclass(frozen=True)
class Config:
    """Knobs for the verification run; defaults exceed every displayed index."""

    range_i: tuple[int, int] = (-32, 32)
    pair_range: tuple[int, int] = (-12, 12)
    ladder_depth: int = 100
    flatten_samples: int = 10_000
    law_samples: int = 10_000
    alphabet_bound: int = 5
    seed: int = 7

    def validate(self) -> None:
        if self.range_i[0] > self.range_i[1] or self.pair_range[0] > self.pair_range[1]:
            raise ValueError("ranges must be nonempty")
        if min(self.ladder_depth, self.flatten_samples, self.law_samples) < 1:
            raise ValueError("depths and sample counts must be positive")
        if self.alphabet_bound < 2:
            raise ValueError("alphabet_bound must be >= 2")


@dataclass
class CheckResult:
    id: str
    claim: str
    locus: str
    passed: bool
    witness: Optional[dict[str, Any]] = None
    seconds: float = 0.0


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.id} — {c.claim} ({c.locus})"
            if not c.passed and c.witness:
                line += f"\n       witness: {c.witness}"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)")
        return "\n".join(lines)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "summary": "pass" if self.passed else "fail",
            "checks": [
                {
                    "id": c.id,
                    "claim": c.claim,
                    "locus": c.locus,
                    "verdict": "pass" if c.passed else "fail",
                    "witness": c.witness,
                    "seconds": round(c.seconds, 6),
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _timed(fn: Callable[[], CheckResult]) -> CheckResult:
    start = time.perf_counter()
    result = fn()
    result.seconds = time.perf_counter() - start
    return result


# -- individual checks --------------------------------------------------------------


def check_ordinal_laws(cfg: Config, add=None, mul=None) -> CheckResult:
    kwargs = {}
    if add is not None:
        kwargs["add"] = add
    if mul is not None:
        kwargs["mul"] = mul
    report = law_suite(cfg.law_samples, seed=cfg.seed, **kwargs)
    witness = None
    if not report.passed:
        v = report.first_witness()
        witness = {"law": v.law, "witness": [str(x) for x in v.witness]}
    return CheckResult(
        id="C1-ordinal-laws",
        claim="CNF ordinal arithmetic satisfies the algebraic laws and the identity table",
        locus="ordinal arithmetic oracle",
        passed=report.passed,
        witness=witness,
    )


def check_product_law(cfg: Config, make_l=make_L) -> CheckResult:
    lo, hi = cfg.range_i
    bad = [i for i in range(lo, hi + 1)
           if not slater_iso(rj4_mul_omega(make_l(i)), make_l(i + 1))]
    return CheckResult(
        id="C2-product-law",
        claim=f"L(i)*w is isomorphic to L(i+1) for every i in [{lo}, {hi}]",
        locus="L-family product law",
        passed=not bad,
        witness={"failing_i": bad} if bad else None,
    )


def check_pairwise_non_iso(cfg: Config, make_l=make_L) -> CheckResult:
    lo, hi = cfg.pair_range
    disagreements = []
    false_isos = []
    pairs = 0
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            if i == j:
                continue
            pairs += 1
            s = slater_iso(make_l(i), make_l(j))
            t = spectra_tail_equivalent(spectrum(make_l(i)), spectrum(make_l(j)))
            if s != t:
                disagreements.append((i, j, s, t))
            if s or t:
                false_isos.append((i, j))
    ok = not disagreements and not false_isos
    witness = None
    if not ok:
        witness = {"disagreements": disagreements[:5], "claimed_iso": false_isos[:5]}
    return CheckResult(
        id="C3-pairwise-noniso",
        claim=(f"distinct L(i), L(j) for i, j in [{lo}, {hi}] are non-isomorphic, and "
               f"the shift criterion and spectrum invariant agree on all {pairs} ordered pairs"),
        locus="shift criterion vs. ladder spectra",
        passed=ok,
        witness=witness,
    )


def check_spectra(cfg: Config, make_l=make_L, prefix: int = 50) -> CheckResult:
    expected0 = [k for k in range(1, prefix + 1) for _ in range(k)][:prefix]
    expected1 = [k + 1 for k in range(1, prefix + 1) for _ in range(k)][:prefix]
    got0 = spectrum(make_l(0)).expand(prefix)
    got1 = spectrum(make_l(1)).expand(prefix)
    distinct = not spectra_tail_equivalent(spectrum(make_l(0)), spectrum(make_l(1)))
    ok = got0 == expected0 and got1 == expected1 and distinct
    witness = None
    if not ok:
        witness = {"L0": got0[:12], "L0_expected": expected0[:12],
                   "L1": got1[:12], "L1_expected": expected1[:12],
                   "tail_equivalent": not distinct}
    return CheckResult(
        id="C4-spectra",
        claim=("spectra of L(0) and L(1) expand to (1,2,2,3,3,3,...) and "
               "(2,3,3,4,4,4,...) and are not tail-equivalent"),
        locus="ladder spectrum displays",
        passed=ok,
        witness=witness,
    )


def check_ladder_coalescence(cfg: Config, starts: int = 20) -> CheckResult:
    failures = []
    for i in range(-5, 6):
        order = make_L(i)
        for s1, s2 in itertools.combinations(range(1, starts + 1), 2):
            met = ladders_coalesce(ladder(order, s1), ladder(order, s2), cfg.ladder_depth)
            if met is None:
                failures.append((i, s1, s2))
    return CheckResult(
        id="C5-ladder-coalescence",
        claim=(f"all ladders from the {starts} rightmost boundary cuts of each L(i), "
               f"i in [-5, 5], coalesce within depth {cfg.ladder_depth}"),
        locus="ladder coalescence",
        passed=not failures,
        witness={"failures": failures[:5]} if failures else None,
    )


def check_cut_profiles(cfg: Config) -> CheckResult:
    lo, hi = cfg.pair_range
    expected = frozenset({CUT_11, CUT_W1})
    bad_cuts = [i for i in range(lo, hi + 1) if cut_types(make_L(i)) != expected]
    bad_ends = [i for i in range(lo, hi + 1)
                if end_data(make_L(i)) != (CofClass.OMEGA, CofClass.OMEGA)]
    bad_gaps = []
    for variant in ("even", "odd", "mid"):
        profile = gap_profile(make_I(variant))
        if (profile.interior_types != expected or profile.boundary_type != CUT_WW
                or not profile.gaps_only_at_boundaries):
            bad_gaps.append(variant)
    ok = not bad_cuts and not bad_ends and not bad_gaps
    return CheckResult(
        id="C6-cuts-gaps",
        claim=("every L(i) realizes exactly the (1,1)- and (w,1)-cuts with w-type ends; "
               "each block sum has (w,w)-gaps exactly at block boundaries"),
        locus="cut and gap classification",
        passed=ok,
        witness=None if ok else {"bad_cuts": bad_cuts, "bad_ends": bad_ends,
                                 "bad_gaps": bad_gaps},
    )


def check_block_sums(cfg: Config) -> CheckResult:
    even, odd, mid = make_I("even"), make_I("odd"), make_I("mid")
    relations = {
        "even*w = odd": zsum_iso(zsum_mul_omega(even), odd),
        "odd*w = even": zsum_iso(zsum_mul_omega(odd), even),
        "mid*w = mid": zsum_iso(zsum_mul_omega(mid), mid),
        "even*w^2 = even": zsum_iso(zsum_mul_omega(zsum_mul_omega(even)), even),
        "odd*w^2 = odd": zsum_iso(zsum_mul_omega(zsum_mul_omega(odd)), odd),
        "mid*w^2 = mid": zsum_iso(zsum_mul_omega(zsum_mul_omega(mid)), mid),
        "even != odd": not zsum_iso(even, odd),
        "even != mid": not zsum_iso(even, mid),
        "odd != mid": not zsum_iso(odd, mid),
        "odd != even": not zsum_iso(odd, even),
        "mid != even": not zsum_iso(mid, even),
        "mid != odd": not zsum_iso(mid, odd),
    }
    failed = [name for name, ok in relations.items() if not ok]
    return CheckResult(
        id="C7-block-sums",
        claim=("I_even*w = I_odd, I_odd*w = I_even, I_mid*w = I_mid, all three are "
               "w^2-invariant, and the three are pairwise non-isomorphic"),
        locus="Z-block-sum computations",
        passed=not failed,
        witness={"failed": failed} if failed else None,
    )


def _exhaustive_family(alphabet=(-1, 1, 2), max_pre=3, max_per=4):
    """Every canonical sequence with the given preperiod/period bounds."""
    family = set()
    for np_ in range(0, max_pre + 1):
        for pre in itertools.product(alphabet, repeat=np_):
            for nq in range(1, max_per + 1):
                for per in itertools.product(alphabet, repeat=nq):
                    family.add(seqs.EvPeriodicSeq(pre, per))
    return sorted(family, key=str)


def _oracle_self_tail2(u: seqs.EvPeriodicSeq) -> bool:
    """Brute-force: is u 2-tail-equivalent to cons(a, u) for some/any a?

    cons(a, u) deleted b >= 1 symbols is u deleted b-1 symbols, so the
    question is whether u has two exact tails at deletion depths of opposite
    parity.  Depths up to preperiod + 2*period + 2 exhaust all phases twice.
    """
    bound = len(u.preperiod) + 2 * len(u.period) + 2
    tails = [u.drop(n) for n in range(bound)]
    for a in range(bound):
        for b in range(a + 1, bound, 2):
            if tails[a] == tails[b]:
                return True
    return False


def oracle_tail_equiv2(u: seqs.EvPeriodicSeq, v: seqs.EvPeriodicSeq) -> bool:
    """Brute-force shift enumeration for 2-tail-equivalence (ground truth)."""
    bu = len(u.preperiod) + 2 * len(u.period) + 2
    bv = len(v.preperiod) + 2 * len(v.period) + 2
    for a in range(bu):
        for b in range(bv):
            if (a - b) % 2 == 0 and u.drop(a) == v.drop(b):
                return True
    return False


def oracle_tail_equiv(u: seqs.EvPeriodicSeq, v: seqs.EvPeriodicSeq) -> bool:
    """Brute-force shift enumeration for tail-equivalence (ground truth)."""
    bu = len(u.preperiod) + 2 * len(u.period) + 2
    bv = len(v.preperiod) + 2 * len(v.period) + 2
    return any(u.drop(a) == v.drop(b) for a in range(bu) for b in range(bv))


def check_sequences(cfg: Config) -> CheckResult:
    family = _exhaustive_family()
    failures: list[tuple[str, Any]] = []

    # odd-period criterion, against both the closed form and the oracle
    for u in family:
        expected = seqs.odd_period_char(u)
        if _oracle_self_tail2(u) != expected:
            failures.append(("oracle-odd-period", str(u)))
            break
        for a in (-1, 1, 2):
            if seqs.tail_equiv2(u, seqs.cons(a, u)) != expected:
                failures.append(("odd-period", (str(u), a)))
                break

    # tail classes split as [u] = [u]_2 union [a u]_2, and labels swap
    if not failures:
        by_class: dict[tuple, list] = {}
        for u in family:
            by_class.setdefault(seqs.canonical_rep(u).period, []).append(u)
        for members in by_class.values():
            anchor = members[0]
            shifted = seqs.cons(members[0].period[-1] + 1 or 1, anchor)
            for v in members:
                if not (seqs.tail_equiv2(v, anchor) or seqs.tail_equiv2(v, shifted)):
                    failures.append(("class-split", (str(anchor), str(v))))
                    break
            if failures:
                break

    if not failures:
        swap = {seqs.Label.EVEN: seqs.Label.ODD, seqs.Label.ODD: seqs.Label.EVEN,
                seqs.Label.FULL: seqs.Label.FULL}
        for u in family:
            for a in (-1, 1, 2):
                if seqs.label(seqs.cons(a, u)) != swap[seqs.label(u)]:
                    failures.append(("label-parity", (str(u), a)))
                    break
            if failures:
                break

    flatten = seqs.flatten_check(cfg.alphabet_bound, cfg.flatten_samples, cfg.seed)
    if not flatten.passed:
        failures.append(("flatten", flatten.first_witness()))

    return CheckResult(
        id="C8-sequences",
        claim=(f"over {len(family)} canonical sequences: the odd-period criterion matches "
               "the brute-force oracle, tail classes split into the two parity classes, "
               f"labels swap under cons, and {flatten.checked_order} flattening samples "
               "preserve order and density"),
        locus="tail-equivalence machinery",
        passed=not failures,
        witness={"failures": failures[:5]} if failures else None,
    )


def conclusion_record(prior_passed: bool) -> CheckResult:
    return CheckResult(
        id="C9-conclusion",
        claim=("with I-blocks assigned by label, X = A^w(I_label) and Y = X*w satisfy "
               "X = A*Y = Y*w and Y = A*X = X*w with X and Y non-isomorphic; every "
               "countable computation above is verified mechanically, while the "
               "fixed-point property of A^w automorphisms is cited, not computed"),
        locus="main construction, assembled",
        passed=prior_passed,
    )


def verify_all(cfg: Config = Config()) -> VerificationReport:
    """Run every check group in order and assemble the report."""
    cfg.validate()
    report = VerificationReport()
    steps = [
        lambda: check_ordinal_laws(cfg),
        lambda: check_product_law(cfg),
        lambda: check_pairwise_non_iso(cfg),
        lambda: check_spectra(cfg),
        lambda: check_ladder_coalescence(cfg),
        lambda: check_cut_profiles(cfg),
        lambda: check_block_sums(cfg),
        lambda: check_sequences(cfg),
    ]
    for step in steps:
        report.checks.append(_timed(step))
    report.checks.append(conclusion_record(report.passed))
    return report
