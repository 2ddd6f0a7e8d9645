"""Tail-equivalence machinery on eventually periodic integer sequences.

Sequences stand in for points of A^w with A an unbounded order on both
sides; symbols are nonzero integers (sign = side, magnitude = rank), zero
being reserved for the identified midpoint of A.  Only eventually periodic
sequences are represented: equality and both equivalence relations are
decidable there, and nothing finer is needed at desk scale.

Canonical form: the period is primitive (not a power of a shorter word) and
the preperiod has no removable suffix (a trailing symbol equal to the last
period symbol folds into a rotated period).  Two sequences are equal iff
their canonical forms coincide, which makes the decision procedures below
a matter of rotation and parity bookkeeping:

* tail-equivalent  <=>  the primitive periods are rotations of each other;
* 2-tail-equivalent  <=>  additionally the prefix deletions can be chosen
  with equal parity, which for an even period length m pins the deletion
  difference mod m and hence mod 2, and for odd m is no constraint at all.

The independent ground truth used by the test suite is brute-force shift
enumeration over exact canonical tails; the closed forms here must agree
with it everywhere.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional


@dataclass(frozen=True)
class EvPeriodicSeq:
    """Canonical eventually periodic sequence pre + per + per + ..."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        for s in self.preperiod + self.period:
            if not isinstance(s, int) or s == 0:
                raise ValueError(f"symbols are nonzero integers, got {s!r}")
        pre, per = list(self.preperiod), list(self.period)
        per = list(_primitive(tuple(per)))
        while pre and pre[-1] == per[-1]:
            per = [per[-1]] + per[:-1]
            pre.pop()
        object.__setattr__(self, "preperiod", tuple(pre))
        object.__setattr__(self, "period", tuple(per))

    def expand(self, n: int) -> list[int]:
        out = list(self.preperiod[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out

    def drop(self, n: int) -> "EvPeriodicSeq":
        """The tail after deleting the first n symbols (canonicalized)."""
        if n < 0:
            raise ValueError("n must be >= 0")
        if n <= len(self.preperiod):
            pre = self.preperiod[n:]
            return EvPeriodicSeq(pre, self.period)
        k = (n - len(self.preperiod)) % len(self.period)
        return EvPeriodicSeq((), self.period[k:] + self.period[:k])

    def __str__(self) -> str:
        pre = ",".join(map(str, self.preperiod))
        per = ",".join(map(str, self.period))
        return f"seq{{pre=[{pre}]; per=[{per}]}}"


def _primitive(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def periodic(*symbols: int) -> EvPeriodicSeq:
    return EvPeriodicSeq((), tuple(symbols))


def sequence(pre: Iterable[int], per: Iterable[int]) -> EvPeriodicSeq:
    return EvPeriodicSeq(tuple(pre), tuple(per))


def cons(a: int, u: EvPeriodicSeq) -> EvPeriodicSeq:
    """Prepend one symbol (the length-1 case of prefixing a finite word)."""
    if a == 0:
        raise ValueError("zero is not a symbol")
    return EvPeriodicSeq((a,) + u.preperiod, u.period)


def _least_rotation(word: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """(lexicographically least rotation, its index).  Unique for primitive words."""
    rotations = [(word[r:] + word[:r], r) for r in range(len(word))]
    return min(rotations)


def canonical_rep(u: EvPeriodicSeq) -> EvPeriodicSeq:
    """The chosen representative of u's tail class: the purely periodic
    sequence on the least rotation of the primitive period."""
    return EvPeriodicSeq((), _least_rotation(u.period)[0])


def _phase_parity(u: EvPeriodicSeq) -> int:
    """Parity of the deletion count that lands u on its canonical representative.

    Deleting ``len(preperiod) + r`` symbols (r the least-rotation index)
    turns u into canonical_rep(u); any other deletion landing there differs
    by a multiple of the period length.
    """
    return (len(u.preperiod) + _least_rotation(u.period)[1]) % 2


def tail_equiv(u: EvPeriodicSeq, v: EvPeriodicSeq) -> bool:
    """Do u and v share an infinite tail?  Equivalently: conjugate periods."""
    return _least_rotation(u.period)[0] == _least_rotation(v.period)[0]


def tail_equiv2(u: EvPeriodicSeq, v: EvPeriodicSeq) -> bool:
    """Tail equivalence with prefix deletions of equal parity.

    All deletion pairs (a, b) with drop(u, a) == drop(v, b) have a - b fixed
    modulo the period length m.  For odd m both parities of a - b occur; for
    even m the parity is forced, and it is even exactly when the canonical
    deletions of u and v have equal parity.
    """
    if not tail_equiv(u, v):
        return False
    if len(u.period) % 2 == 1:
        return True
    return _phase_parity(u) == _phase_parity(v)


def odd_period_char(u: EvPeriodicSeq) -> bool:
    """True iff some (equivalently, the primitive) period of u has odd length.

    These are exactly the sequences 2-tail-equivalent to their own one-symbol
    extensions, i.e. the u with [u]_2 = [u]."""
    return len(u.period) % 2 == 1


class Label(Enum):
    """Which block sum a 2-tail class receives in the main construction."""

    EVEN = "even"
    ODD = "odd"
    FULL = "full"

    def __str__(self) -> str:
        return self.value


def label(u: EvPeriodicSeq) -> Label:
    """FULL when the period is odd (the class [u]_2 is all of [u]); otherwise
    EVEN or ODD by 2-tail comparison against the canonical representative.

    Constant on 2-tail classes; a single cons swaps EVEN and ODD and fixes
    FULL.
    """
    if odd_period_char(u):
        return Label.FULL
    return Label.EVEN if _phase_parity(u) == 0 else Label.ODD


# -- order on sequences ------------------------------------------------------------

def seq_cmp(u: EvPeriodicSeq, v: EvPeriodicSeq) -> int:
    """Lexicographic comparison: -1, 0, or 1.

    Distinct eventually periodic sequences differ within
    max(preperiods) + period_u + period_v symbols (Fine and Wilf: two words
    with periods p and q agreeing on p + q - gcd(p, q) positions share the
    finer period), so comparing that many decides exactly.
    """
    bound = max(len(u.preperiod), len(v.preperiod)) + len(u.period) + len(v.period)
    eu, ev = u.expand(bound), v.expand(bound)
    if eu == ev:
        return 0
    return -1 if eu < ev else 1


def between(u: EvPeriodicSeq, v: EvPeriodicSeq) -> EvPeriodicSeq:
    """An eventually periodic w with u < w < v, for u < v.

    Copy u past the first disagreement with v, then bump the next symbol:
    the copy keeps w below v (it still loses at the disagreement) and the
    bump puts w above u.  Symbols live in all of Z \\ {0}, so the bump never
    runs off the alphabet.
    """
    if seq_cmp(u, v) >= 0:
        raise ValueError("between() needs u < v")
    bound = max(len(u.preperiod), len(v.preperiod)) + len(u.period) + len(v.period)
    eu, ev = u.expand(bound + 2), v.expand(bound + 2)
    i = next(j for j in range(len(eu)) if eu[j] != ev[j])
    nxt = eu[i + 1]
    bump = nxt + 1 if nxt + 1 != 0 else 1
    return EvPeriodicSeq(tuple(eu[: i + 1]) + (bump,), (1,))


# -- flattening-map checks -----------------------------------------------------------

@dataclass
class FlattenReport:
    checked_order: int
    checked_density: int
    violations: list[tuple[str, tuple]]

    @property
    def passed(self) -> bool:
        return not self.violations

    def first_witness(self) -> Optional[tuple[str, tuple]]:
        return self.violations[0] if self.violations else None


def random_seq(rng: random.Random, alphabet_bound: int,
               max_pre: int = 3, max_per: int = 4) -> EvPeriodicSeq:
    symbols = [s for s in range(-alphabet_bound, alphabet_bound + 1) if s != 0]
    pre = tuple(rng.choice(symbols) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.choice(symbols) for _ in range(rng.randint(1, max_per)))
    return EvPeriodicSeq(pre, per)


def flatten_check(alphabet_bound: int, samples: int, seed: int) -> FlattenReport:
    """Finite-scale checks that prefixing is the flattening isomorphism.

    (a) order preservation: for sampled (a, u) and (b, v), the product order
        on pairs agrees with the lexicographic order of cons(a, u) and
        cons(b, v);
    (b) density: for sampled u < v, ``between`` really produces u < w < v.

    Sampling is capped at ``alphabet_bound`` but constructions may use any
    nonzero integer (the alphabet order has no endpoints).
    """
    if alphabet_bound < 2:
        raise ValueError("alphabet_bound must be >= 2")
    rng = random.Random(seed)
    symbols = [s for s in range(-alphabet_bound, alphabet_bound + 1) if s != 0]
    violations: list[tuple[str, tuple]] = []
    checked_order = checked_density = 0
    for _ in range(samples):
        a, b = rng.choice(symbols), rng.choice(symbols)
        u, v = random_seq(rng, alphabet_bound), random_seq(rng, alphabet_bound)
        pair_cmp = (a > b) - (a < b) or seq_cmp(u, v)
        flat_cmp = seq_cmp(cons(a, u), cons(b, v))
        checked_order += 1
        if pair_cmp != flat_cmp:
            violations.append(("order", (a, str(u), b, str(v))))
            break
        if seq_cmp(u, v) != 0:
            lo, hi = (u, v) if seq_cmp(u, v) < 0 else (v, u)
            w = between(lo, hi)
            checked_density += 1
            if not (seq_cmp(lo, w) < 0 and seq_cmp(w, hi) < 0):
                violations.append(("density", (str(lo), str(w), str(hi))))
                break
    return FlattenReport(checked_order, checked_density, violations)


# -- literal syntax -------------------------------------------------------------------

def parse_seq(text: str) -> EvPeriodicSeq:
    """``seq{pre=[1,-2]; per=[3,4]}`` (pre may be empty)."""
    compact = text.replace(" ", "")
    m = re.fullmatch(r"seq\{pre=\[((?:-?\d+,?)*)\];per=\[((?:-?\d+,?)+)\]\}", compact)
    if m is None:
        raise ValueError(f"malformed sequence literal: {text!r}")
    pre = tuple(int(s) for s in m.group(1).split(",") if s)
    per = tuple(int(s) for s in m.group(2).split(",") if s)
    return EvPeriodicSeq(pre, per)
