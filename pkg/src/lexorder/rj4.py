"""Invariants for scattered w*-sums of ordinal powers ending in w^w.

The orders handled here all have the shape

    ... + l3*w^k3 + l2*w^k2 + l1*w^k1 + w^w

with positive integer coefficients l_j and strictly increasing exponents k_j
(index 1 is the summand next to the terminal w^w).  In Slater's taxonomy of
w*-sums of ordinals these are the "RJ types of type 4", hence ``Rj4Order``.
The family is encoded by an eventually-affine schema for the pairs (l_j, k_j),
which is closed under everything done to it below: right multiplication by w
bumps every exponent, and index shifts realign schemas.

Two independent isomorphism invariants are implemented:

* ``slater_iso`` decides isomorphism via Slater's shift criterion: two such
  sums are isomorphic iff their (l, k) sequences eventually agree up to an
  index shift.  Necessity is Slater's theorem.  Sufficiency, which the
  criterion's classical statement leaves implicit, holds because a shift
  discrepancy confined to finitely many low summands is a strict initial
  segment of w^w and is absorbed by the terminal w^w (alpha + w^w = w^w for
  alpha < w^w).

* ladders and their ``spectrum``: the boundary cuts between expanded copies
  of w^k form a coinitial chain in which each cut is the rightmost cut to its
  left of at least its own type; the sequence of cut types along the chain is
  an isomorphism invariant up to tail-equivalence.

Cut classification is symbolic.  The cuts of these orders form uncountable
sets, but they realize only finitely many (cofinality, coinitiality) classes,
and those classes are computed from the schema.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional

from .ordinals import CofClass


@dataclass(frozen=True)
class AffineMap:
    """j -> slope*j + offset over integer indices."""

    slope: int
    offset: int

    def __call__(self, j: int) -> int:
        return self.slope * j + self.offset

    def shifted(self, n: int) -> "AffineMap":
        """The map j -> self(j + n)."""
        return AffineMap(self.slope, self.offset + self.slope * n)

    def __str__(self) -> str:
        return f"{self.slope}*j{self.offset:+d}"


@dataclass(frozen=True)
class EvAffineSeq:
    """An eventually-affine sequence of pairs (l_j, k_j), j = 1, 2, ...

    ``initial`` lists the pairs for j = 1 .. len(initial); from
    ``tail_onset`` = len(initial)+1 on, l and k follow the affine tail maps.
    Invariants: every l_j, k_j >= 1, the k_j strictly increase over the whole
    sequence, and the representation is canonical (no initial entry merely
    repeats what the tail maps predict).
    """

    initial: tuple[tuple[int, int], ...]
    tail_l: AffineMap
    tail_k: AffineMap

    def __post_init__(self) -> None:
        initial = list(self.initial)
        # Canonicalize: absorb initial entries that already match the tail.
        while initial:
            j = len(initial)
            if initial[-1] == (self.tail_l(j), self.tail_k(j)):
                initial.pop()
            else:
                break
        object.__setattr__(self, "initial", tuple(initial))
        self._validate()

    def _validate(self) -> None:
        if self.tail_l.slope < 0 or self.tail_k.slope < 1:
            raise ValueError("tail maps must be nondecreasing, k strictly increasing")
        onset = self.tail_onset
        if self.tail_l(onset) < 1 or self.tail_k(onset) < 1:
            raise ValueError("tail values must be positive from the onset")
        prev_k = 0
        for j, (l, k) in enumerate(self.initial, start=1):
            if l < 1 or k < 1:
                raise ValueError(f"(l_{j}, k_{j}) = ({l}, {k}) must be positive")
            if k <= prev_k:
                raise ValueError("exponents k_j must strictly increase")
            prev_k = k
        if self.tail_k(onset) <= prev_k:
            raise ValueError("tail exponents must continue increasing")

    @property
    def tail_onset(self) -> int:
        return len(self.initial) + 1

    def term(self, j: int) -> tuple[int, int]:
        """(l_j, k_j) for j >= 1."""
        if j < 1:
            raise IndexError("indices start at 1")
        if j <= len(self.initial):
            return self.initial[j - 1]
        return (self.tail_l(j), self.tail_k(j))

    def terms(self, n: int) -> list[tuple[int, int]]:
        return [self.term(j) for j in range(1, n + 1)]

    def drop(self, n: int) -> "EvAffineSeq":
        """The schema of the sequence with its first n entries removed."""
        if n < 0:
            raise ValueError("n must be >= 0")
        initial = tuple(self.term(j) for j in range(n + 1, self.tail_onset))
        return EvAffineSeq(initial, self.tail_l.shifted(n), self.tail_k.shifted(n))

    def __str__(self) -> str:
        init = ",".join(f"({l},{k})" for l, k in self.initial)
        return (f"rj4{{init=[{init}]; tail j>={self.tail_onset}: "
                f"l={self.tail_l}, k={self.tail_k}}}")


@dataclass(frozen=True)
class Rj4Order:
    """The order  ... + l2*w^k2 + l1*w^k1 + w^w  described by ``seq``."""

    seq: EvAffineSeq

    def __str__(self) -> str:
        return str(self.seq)


def make_L(i: int) -> Rj4Order:
    """The i-th member of the L-family, for any integer i.

    For i >= 0:  l_j = j, k_j = i + j   (... + 3w^(i+3) + 2w^(i+2) + w^(i+1) + w^w)
    For i = -n:  l_j = n + j, k_j = j   (... + (n+3)w^3 + (n+2)w^2 + (n+1)w + w^w)

    Both cases are the pure-tail schema l_j = j + max(0, -i), k_j = j + max(0, i),
    so k_j - l_j = i throughout.
    """
    return Rj4Order(EvAffineSeq((), AffineMap(1, max(0, -i)), AffineMap(1, max(0, i))))


def rj4_shift_exponents(order: Rj4Order, e: int) -> Rj4Order:
    """Right multiplication by w^e: every exponent k_j grows by e.

    Summandwise, (l*w^k)*w^e = l*w^(k+e) and the terminal w^w absorbs its
    factor (w^w * w^e is w^(e+w) = w^w under the lexicographic convention).
    No low-order summand is reinserted: the result is isomorphic to, not
    syntactically equal to, any hand-completed display of the same order,
    and ``slater_iso`` recovers the equivalence.
    """
    if e < 0:
        raise ValueError("exponent shift must be >= 0")
    s = order.seq
    return Rj4Order(EvAffineSeq(
        tuple((l, k + e) for l, k in s.initial),
        s.tail_l,
        AffineMap(s.tail_k.slope, s.tail_k.offset + e),
    ))


def rj4_mul_omega(order: Rj4Order) -> Rj4Order:
    """Right multiplication by w (the L-family ladder step: L_i * w = L_{i+1})."""
    return rj4_shift_exponents(order, 1)


def slater_iso(a: Rj4Order, b: Rj4Order) -> bool:
    """Slater's shift criterion, decided exactly on the affine schemas.

    ``a`` and ``b`` are isomorphic iff there is an integer r with
    (l_b(n), k_b(n)) = (l_a(n+r), k_a(n+r)) for all large n.  On affine tails
    that holds iff the slopes agree and one integer r reconciles both offset
    differences; initial segments never matter because agreement is only
    required eventually.
    """
    sa, sb = a.seq, b.seq
    if (sa.tail_l.slope, sa.tail_k.slope) != (sb.tail_l.slope, sb.tail_k.slope):
        return False
    ks = sa.tail_k.slope  # >= 1
    dk = sb.tail_k.offset - sa.tail_k.offset
    if dk % ks:
        return False
    r = dk // ks
    ls = sa.tail_l.slope
    if ls == 0:
        return sb.tail_l.offset == sa.tail_l.offset
    return sb.tail_l.offset - sa.tail_l.offset == ls * r


def rj4_class_index(order: Rj4Order) -> Optional[int]:
    """The i with order isomorphic to L_i, or None if outside the L-family.

    Members of the L-family (and anything reached from them by exponent
    shifts) have unit tail slopes, and then k_j - l_j is a shift-invariant
    constant equal to the family index.
    """
    s = order.seq
    if (s.tail_l.slope, s.tail_k.slope) != (1, 1):
        return None
    return s.tail_k.offset - s.tail_l.offset


# -- ladders and spectra -------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Run-length view of a type sequence: value k_j repeated l_j times.

    ``runs.term(j) = (multiplicity, value)``; the expanded sequence is
    nondecreasing and unbounded because run values strictly increase.
    """

    runs: EvAffineSeq

    def expand(self, n: int) -> list[int]:
        out: list[int] = []
        j = 1
        while len(out) < n:
            mult, value = self.runs.term(j)
            out.extend([value] * min(mult, n - len(out)))
            j += 1
        return out

    def drop_runs(self, n: int) -> "Spectrum":
        return Spectrum(self.runs.drop(n))


def spectrum(order: Rj4Order) -> Spectrum:
    """The type sequence of the canonical boundary-cut ladder.

    Expanding l_j * w^(k_j) into l_j adjacent copies of w^(k_j), the cut just
    left of the m-th copy (counted from the terminal w^w) has type equal to
    that copy's exponent, so the ladder's types are exactly k_j with
    multiplicity l_j, j increasing.
    """
    return Spectrum(order.seq)


def spectra_tail_equivalent(u: Spectrum, v: Spectrum) -> bool:
    """Do the expanded sequences share a common infinite tail?

    On run schemas with strictly increasing values this reduces to eventual
    run agreement up to an index shift (a shared tail may truncate only the
    single earliest compared run, which eventual agreement skips anyway), so
    the decision mirrors the affine shift alignment: equal slopes and one
    integer shift reconciling both offsets.
    """
    ru, rv = u.runs, v.runs
    if (ru.tail_l.slope, ru.tail_k.slope) != (rv.tail_l.slope, rv.tail_k.slope):
        return False
    vs = ru.tail_k.slope
    dv = rv.tail_k.offset - ru.tail_k.offset
    if dv % vs:
        return False
    r = dv // vs
    ms = ru.tail_l.slope
    if ms == 0:
        return rv.tail_l.offset == ru.tail_l.offset
    return rv.tail_l.offset - ru.tail_l.offset == ms * r


@dataclass(frozen=True)
class Ladder:
    """The ladder of boundary cuts through a given start cut.

    Positions count expanded copies of w^k from the right (position 1 is the
    boundary just left of the terminal w^w).  Each successor is the rightmost
    cut to the left whose type is at least the current type; cuts interior to
    a copy of w^k have types < k, so successors are always boundary cuts.
    """

    order: Rj4Order
    start: int

    def __post_init__(self) -> None:
        if self.start < 1:
            raise ValueError(f"invalid start index {self.start}: boundaries count from 1")

    def type_at(self, position: int) -> int:
        """The exponent of the copy at this boundary position."""
        j = 1
        acc = 0
        while True:
            mult, value = self.order.seq.term(j)
            acc += mult
            if position <= acc:
                return value
            j += 1

    def take(self, depth: int) -> list[tuple[int, int]]:
        """The first ``depth`` cuts as (position, type) pairs."""
        seq = self.order.seq
        j, covered = 0, 0  # runs 1..j cover positions 1..covered

        def type_of(position: int) -> int:
            nonlocal j, covered
            while covered < position:
                j += 1
                covered += seq.term(j)[0]
            return seq.term(j)[1]

        out = []
        pos = self.start
        t = type_of(pos)
        for _ in range(depth):
            out.append((pos, t))
            # Rightmost cut to the left of type >= t.  Interior cuts of the
            # copy at pos have type < its exponent, so scan boundaries only;
            # types are nondecreasing leftward, so this lands on pos + 1.
            nxt = pos + 1
            tn = type_of(nxt)
            while tn < t:
                nxt += 1
                tn = type_of(nxt)
            pos, t = nxt, tn
        return out


def ladder(order: Rj4Order, start: int) -> Ladder:
    return Ladder(order, start)


def ladders_coalesce(a: Ladder, b: Ladder, depth: int) -> Optional[int]:
    """First shared cut position within ``depth`` steps, or None.

    Once two ladders share a cut they agree forever after (the successor rule
    is deterministic), so a single shared position witnesses coalescence.
    """
    pa = [p for p, _ in a.take(depth)]
    pb = [p for p, _ in b.take(depth)]
    common = set(pa) & set(pb)
    if not common:
        return None
    first = min(common)
    ia, ib = pa.index(first), pb.index(first)
    if pa[ia:] != pb[ib : ib + len(pa) - ia]:
        raise AssertionError("ladders met but disagreed afterwards")
    return first


# -- cut classification --------------------------------------------------------

@dataclass(frozen=True)
class CutType:
    """(kappa, lambda): cofinality of the left side, coinitiality of the right."""

    left_cof: CofClass
    right_coin: CofClass

    def __post_init__(self) -> None:
        allowed = {CofClass.ONE, CofClass.OMEGA, CofClass.OMEGA1}
        if self.left_cof not in allowed or self.right_coin not in allowed:
            raise ValueError("cut components must be 1, w, or w1")

    @property
    def is_gap(self) -> bool:
        return self.left_cof is not CofClass.ONE and self.right_coin is not CofClass.ONE

    def __str__(self) -> str:
        return f"({self.left_cof}, {self.right_coin})"


CUT_11 = CutType(CofClass.ONE, CofClass.ONE)
CUT_W1 = CutType(CofClass.OMEGA, CofClass.ONE)
CUT_WW = CutType(CofClass.OMEGA, CofClass.OMEGA)


def cut_types(order: Rj4Order) -> frozenset[CutType]:
    """All (kappa, lambda) classes realized by proper cuts of the order.

    Every proper cut either splits one ordinal summand or sits at a summand
    boundary.  The right side always starts with a least element (a final
    segment of an ordinal), so lambda = 1 everywhere.  On the left, cutting
    at a successor point gives cofinality 1, while cutting at a limit point
    or at a boundary (each summand w^k, k >= 1, is a limit) gives cofinality
    w.  Both cases occur in every summand, so the set is exact, not an
    over-approximation.
    """
    kinds = {CUT_11}  # successor points exist inside every copy of w^k
    mult, value = order.seq.term(1)
    if value >= 1:  # guaranteed by schema validation: summands are infinite
        kinds.add(CUT_W1)  # limit points and copy boundaries
    return frozenset(kinds)


def end_data(order: Rj4Order) -> tuple[CofClass, CofClass]:
    """(coinitiality, cofinality): w on both ends.

    The w*-indexed sum is unbounded below along its copies; the terminal w^w
    is a countable limit above.
    """
    return (CofClass.OMEGA, CofClass.OMEGA)


# -- Z-indexed block sums --------------------------------------------------------

@dataclass(frozen=True)
class ZBlockSum:
    """A Z-sum  ... + B(-1) + B(0) + B(1) + ...  of Rj4 blocks.

    Either an affine family -- block(i) = L_{p*i+q} with ``bumps`` right
    multiplications by w applied blockwise -- or an explicit periodic table
    of schemas.  The three named sums are I_even = zsum(L_{2i}),
    I_odd = zsum(L_{2i+1}), and I_mid = zsum(L_i).
    """

    affine: Optional[tuple[int, int]] = None
    bumps: int = 0
    table: Optional[tuple[Rj4Order, ...]] = None

    def __post_init__(self) -> None:
        if (self.affine is None) == (self.table is None):
            raise ValueError("exactly one of affine / table must be given")
        if self.bumps < 0:
            raise ValueError("bumps must be >= 0")
        if self.table is not None and not self.table:
            raise ValueError("periodic table must be nonempty")

    @classmethod
    def affine_family(cls, p: int, q: int) -> "ZBlockSum":
        if p == 0:
            raise ValueError("block index map must be non-constant in i")
        return cls(affine=(p, q))

    @classmethod
    def periodic(cls, blocks: "tuple[Rj4Order, ...] | list[Rj4Order]") -> "ZBlockSum":
        return cls(table=tuple(blocks))

    def block(self, i: int) -> Rj4Order:
        if self.affine is not None:
            p, q = self.affine
            return rj4_shift_exponents(make_L(p * i + q), self.bumps)
        assert self.table is not None
        base = self.table[i % len(self.table)]
        return rj4_shift_exponents(base, self.bumps)

    def __str__(self) -> str:
        if self.affine is not None:
            p, q = self.affine
            body = f"L({p}*i{q:+d})"
            if self.bumps:
                body += f"*w^{self.bumps}"
            return f"zsum{{{body}}}"
        inner = ", ".join(str(b) for b in self.table or ())
        if self.bumps:
            return f"zsum{{per=[{inner}]*w^{self.bumps}}}"
        return f"zsum{{per=[{inner}]}}"


I_VARIANTS = ("even", "odd", "mid")


def make_I(variant: str) -> ZBlockSum:
    """The named Z-block sums: even -> L_{2i}, odd -> L_{2i+1}, mid -> L_i."""
    if variant == "even":
        return ZBlockSum.affine_family(2, 0)
    if variant == "odd":
        return ZBlockSum.affine_family(2, 1)
    if variant == "mid":
        return ZBlockSum.affine_family(1, 0)
    raise ValueError(f"unknown variant {variant!r}; expected one of {I_VARIANTS}")


def zsum_mul_omega(s: ZBlockSum) -> ZBlockSum:
    """Right multiplication by w, blockwise: block'(i) = block(i) * w.

    The product distributes on the right over the Z-replacement, so the
    result is the Z-sum of the blockwise products; no index shift is applied
    here, the shift emerges in ``zsum_iso``.
    """
    return ZBlockSum(affine=s.affine, bumps=s.bumps + 1, table=s.table)


_CLASS_WINDOW = range(-3, 4)


def _block_classes(s: ZBlockSum, window=_CLASS_WINDOW) -> dict[int, int]:
    classes = {}
    for i in window:
        idx = rj4_class_index(s.block(i))
        if idx is None:
            raise ValueError(
                f"block at i={i} ({s.block(i)}) lies outside the L-family; "
                "zsum_iso is only decided for L-family blocks")
        classes[i] = idx
    return classes


def zsum_iso(s: ZBlockSum, t: ZBlockSum) -> bool:
    """Isomorphism of two Z-block sums with L-family blocks.

    True iff some integer shift d has block_s(i) isomorphic to block_t(i+d)
    for every i.  Any isomorphism must match blocks: blocks contain no dense
    suborder, and every interval not inside a block crosses an (w, w)-gap,
    which block interiors do not realize.  Block matching is decided on the
    affine (or periodic) class maps plus ``slater_iso`` on representatives.
    """
    if s.affine is not None and t.affine is not None:
        cs, ct = _block_classes(s), _block_classes(t)
        ps = cs[1] - cs[0]
        pt = ct[1] - ct[0]
        if any(cs[i] != ps * i + cs[0] for i in _CLASS_WINDOW):
            raise AssertionError("affine block family with non-affine classes")
        if ps != pt:
            return False
        if (cs[0] - ct[0]) % pt:
            return False
        d = (cs[0] - ct[0]) // pt
        return all(slater_iso(s.block(i), t.block(i + d)) for i in _CLASS_WINDOW)
    if s.affine is None and t.affine is None:
        assert s.table is not None and t.table is not None
        _block_classes(s, range(len(s.table)))
        _block_classes(t, range(len(t.table)))
        m = lcm(len(s.table), len(t.table))
        for d in range(m):
            if all(slater_iso(s.block(i), t.block(i + d)) for i in range(m)):
                return True
        return False
    # Affine vs periodic: affine class maps are unbounded, periodic ones take
    # finitely many values, so no shift can match them.
    _block_classes(s, _CLASS_WINDOW if s.affine is not None else range(len(s.table or ())))
    _block_classes(t, _CLASS_WINDOW if t.affine is not None else range(len(t.table or ())))
    return False


@dataclass(frozen=True)
class GapProfile:
    """Where the (w, w)-gaps of a Z-block sum sit."""

    interior_types: frozenset[CutType]
    boundary_type: CutType
    gaps_only_at_boundaries: bool

    def __str__(self) -> str:
        interior = ", ".join(sorted(str(t) for t in self.interior_types))
        return (f"interior cuts: {{{interior}}}; block boundaries: "
                f"{self.boundary_type}; gaps only at boundaries: "
                f"{self.gaps_only_at_boundaries}")


def gap_profile(s: ZBlockSum) -> GapProfile:
    """Classify the cuts of a Z-block sum.

    Every proper initial segment of Z has a greatest element, so each cut is
    either interior to one block or sits between consecutive blocks.  The
    boundary cuts inherit cofinality w from the left block's terminal w^w and
    coinitiality w from the right block's w*-indexed summands: genuine gaps.
    Interior cuts are classified by ``cut_types`` and never form gaps.
    """
    window = _CLASS_WINDOW if s.affine is not None else range(len(s.table or ()))
    interior: set[CutType] = set()
    boundary_parts = set()
    for i in window:
        block = s.block(i)
        interior |= cut_types(block)
        coin, cof = end_data(block)
        boundary_parts.add((cof, coin))
    (cof, coin), = boundary_parts
    boundary = CutType(cof, coin)
    return GapProfile(
        interior_types=frozenset(interior),
        boundary_type=boundary,
        gaps_only_at_boundaries=not any(t.is_gap for t in interior) and boundary.is_gap,
    )
