"""Exact ordinal arithmetic below epsilon_0 in hereditary Cantor normal form.

An ordinal is a finite sum  w^e1*c1 + w^e2*c2 + ... + w^ek*ck  with strictly
decreasing exponents e1 > e2 > ... > ek (each itself an ordinal in the same
form) and positive integer coefficients.  The representation is unique, so
structural equality of ``CnfOrdinal`` values is equality of ordinals.

Only the fragment actually exercised downstream matters (ordinals up to a
little beyond w^w), but the hereditary encoding costs nothing extra and keeps
the arithmetic uniform.  There is no independent model to test limit ordinals
against, so correctness rests on ``law_suite``: a seeded property suite over
the algebraic laws plus a hand-verified identity table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional


class CofClass(Enum):
    """Cofinality / coinitiality classes realized in this package.

    ZERO is only ever the cofinality of the empty order.  OMEGA1 never arises
    from ordinal arithmetic here; it exists for opaque atoms declared with
    uncountable ends.
    """

    ZERO = "0"
    ONE = "1"
    OMEGA = "w"
    OMEGA1 = "w1"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CnfOrdinal:
    """An ordinal below epsilon_0, as a tuple of (exponent, coefficient) terms."""

    terms: tuple[tuple["CnfOrdinal", int], ...] = ()

    def __post_init__(self) -> None:
        prev: Optional[CnfOrdinal] = None
        for exponent, coeff in self.terms:
            if not isinstance(coeff, int) or coeff < 1:
                raise ValueError(f"coefficient must be a positive integer, got {coeff!r}")
            if prev is not None and ord_cmp(exponent, prev) >= 0:
                raise ValueError("exponents must be strictly decreasing")
            prev = exponent

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_limit(self) -> bool:
        """True for nonzero ordinals without a finite part."""
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def leading_exponent(self) -> "CnfOrdinal":
        if not self.terms:
            raise ValueError("0 has no leading exponent")
        return self.terms[0][0]

    def to_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not a finite ordinal")
        return self.terms[0][1] if self.terms else 0

    def __str__(self) -> str:
        return render_ordinal(self)

    def __repr__(self) -> str:
        return f"CnfOrdinal[{render_ordinal(self)}]"

    # Comparisons delegate to ord_cmp; equality is the dataclass one (CNF is
    # unique, so structural equality is value equality).

    def __lt__(self, other: "CnfOrdinal") -> bool:
        return ord_cmp(self, other) < 0

    def __le__(self, other: "CnfOrdinal") -> bool:
        return ord_cmp(self, other) <= 0

    def __gt__(self, other: "CnfOrdinal") -> bool:
        return ord_cmp(self, other) > 0

    def __ge__(self, other: "CnfOrdinal") -> bool:
        return ord_cmp(self, other) >= 0

    def __add__(self, other: "CnfOrdinal") -> "CnfOrdinal":
        return ord_add(self, other)

    def __mul__(self, other: "CnfOrdinal") -> "CnfOrdinal":
        return ord_mul(self, other)


def from_int(n: int) -> CnfOrdinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    if n == 0:
        return ZERO
    return CnfOrdinal(((ZERO, n),))


def omega_power(exponent: "CnfOrdinal | int", coeff: int = 1) -> CnfOrdinal:
    """w^exponent * coeff as a single-term ordinal."""
    if isinstance(exponent, int):
        exponent = from_int(exponent)
    if coeff < 1:
        raise ValueError("coefficient must be positive")
    return CnfOrdinal(((exponent, coeff),))


ZERO = CnfOrdinal()
ONE = CnfOrdinal(((ZERO, 1),))
OMEGA = CnfOrdinal(((ONE, 1),))
OMEGA_OMEGA = CnfOrdinal(((OMEGA, 1),))


# -- comparison -------------------------------------------------------------

def ord_cmp(a: CnfOrdinal, b: CnfOrdinal) -> int:
    """Total order on CNF: -1, 0, or +1.

    Term lists compare lexicographically by (exponent, coefficient); a strict
    prefix denotes the smaller ordinal (the longer one adds smaller terms on
    the right).
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


# -- arithmetic --------------------------------------------------------------

def ord_add(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Ordinal sum.  Terms of ``a`` below the leading exponent of ``b`` are
    absorbed; equal leading exponents merge coefficients."""
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    lead = b.terms[0][0]
    keep = 0
    while keep < len(a.terms) and ord_cmp(a.terms[keep][0], lead) > 0:
        keep += 1
    if keep < len(a.terms) and ord_cmp(a.terms[keep][0], lead) == 0:
        merged = (lead, a.terms[keep][1] + b.terms[0][1])
        return CnfOrdinal(a.terms[:keep] + (merged,) + b.terms[1:])
    return CnfOrdinal(a.terms[:keep] + b.terms)


def ord_mul(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Ordinal product (``a`` repeated ``b`` times).

    Left-distributes over the terms of ``b``:  a*(w^e*c) = w^(e1+e)*c for
    e > 0 (e1 the leading exponent of ``a``), while the finite part of ``b``
    multiplies only the leading coefficient of ``a``.
    """
    if a.is_zero or b.is_zero:
        return ZERO
    lead_e, lead_c = a.terms[0]
    out = ZERO
    for e, c in b.terms:
        if e.is_zero:
            part = CnfOrdinal(((lead_e, lead_c * c),) + a.terms[1:])
        else:
            part = CnfOrdinal(((ord_add(lead_e, e), c),))
        out = ord_add(out, part)
    return out


def ord_pow_finite(a: CnfOrdinal, n: int) -> CnfOrdinal:
    """a^n for a natural number n >= 0 (iterated ordinal product)."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    out = ONE
    for _ in range(n):
        out = ord_mul(out, a)
    return out


def ord_cofinality(a: CnfOrdinal) -> CofClass:
    """ZERO for 0, ONE for successors, OMEGA for (countable) limits."""
    if a.is_zero:
        return CofClass.ZERO
    return CofClass.ONE if a.is_successor else CofClass.OMEGA


# -- text syntax --------------------------------------------------------------

# Standalone ordinal notation: `0`, naturals, `w`, `w^k`, `w^w`, `w^(...)` for
# hereditary exponents, `*` for the ordinal product, `+` for the sum.  Note
# that `*` here is the *ordinal* product (so `w*2` is w+w), unlike the
# lexicographic `*` of the order-term grammar in :mod:`lexorder.terms`.

def render_ordinal(a: CnfOrdinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        if e == ONE:
            base = "w"
        elif e.is_finite:
            base = f"w^{e.to_int()}"
        elif e == OMEGA:
            base = "w^w"
        else:
            base = f"w^({render_ordinal(e)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


class OrdinalSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_ordinal(text: str) -> CnfOrdinal:
    """Parse the standalone ordinal notation; inverse of :func:`render_ordinal`."""
    tokens = _ord_tokens(text)
    value, pos = _ord_sum(tokens, 0)
    if pos != len(tokens):
        raise OrdinalSyntaxError("trailing input", tokens[pos][1])
    return value


def _ord_tokens(text: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append((text[i:j], i))
            i = j
            continue
        if ch in "w^*+()":
            out.append((ch, i))
            i += 1
            continue
        raise OrdinalSyntaxError(f"unexpected character {ch!r}", i)
    return out


def _ord_sum(tokens, pos):
    value, pos = _ord_prod(tokens, pos)
    while pos < len(tokens) and tokens[pos][0] == "+":
        rhs, pos = _ord_prod(tokens, pos + 1)
        value = ord_add(value, rhs)
    return value, pos


def _ord_prod(tokens, pos):
    value, pos = _ord_atom(tokens, pos)
    while pos < len(tokens) and tokens[pos][0] == "*":
        rhs, pos = _ord_atom(tokens, pos + 1)
        value = ord_mul(value, rhs)
    return value, pos


def _ord_atom(tokens, pos):
    if pos >= len(tokens):
        raise OrdinalSyntaxError("unexpected end of input", len(tokens))
    tok, at = tokens[pos]
    if tok.isdigit():
        return from_int(int(tok)), pos + 1
    if tok == "(":
        value, pos = _ord_sum(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos][0] != ")":
            raise OrdinalSyntaxError("expected ')'", at)
        return value, pos + 1
    if tok == "w":
        if pos + 1 < len(tokens) and tokens[pos + 1][0] == "^":
            pos += 2
            if pos >= len(tokens):
                raise OrdinalSyntaxError("expected exponent after '^'", at)
            etok, eat = tokens[pos]
            if etok.isdigit():
                return omega_power(int(etok)), pos + 1
            if etok == "w":
                return omega_power(OMEGA), pos + 1
            if etok == "(":
                e, pos = _ord_sum(tokens, pos + 1)
                if pos >= len(tokens) or tokens[pos][0] != ")":
                    raise OrdinalSyntaxError("expected ')'", eat)
                return omega_power(e), pos + 1
            raise OrdinalSyntaxError(f"bad exponent {etok!r}", eat)
        return OMEGA, pos + 1
    raise OrdinalSyntaxError(f"unexpected token {tok!r}", at)


# -- law-based self-checking ---------------------------------------------------

@dataclass
class LawViolation:
    law: str
    witness: tuple


@dataclass
class LawReport:
    checked: int
    violations: list[LawViolation]

    @property
    def passed(self) -> bool:
        return not self.violations

    def first_witness(self) -> Optional[LawViolation]:
        return self.violations[0] if self.violations else None


def random_ordinal(rng: random.Random, max_exp: int = 5, max_coeff: int = 5,
                   max_terms: int = 4) -> CnfOrdinal:
    """A random ordinal below w^(max_exp+1); exponents here are finite."""
    k = rng.randint(0, max_terms)
    exps = sorted(rng.sample(range(max_exp + 1), min(k, max_exp + 1)), reverse=True)
    return CnfOrdinal(tuple((from_int(e), rng.randint(1, max_coeff)) for e in exps))


# Hand-verified identities.  Each entry is (name, lambda ops -> (lhs, rhs)).
# The lambdas take the (add, mul) pair under test so a deliberately broken
# operation is caught here first, with a small deterministic witness.
def _identity_table(add, mul):
    w, ww = OMEGA, OMEGA_OMEGA
    two, three, five = from_int(2), from_int(3), from_int(5)
    return [
        ("1 + w == w", add(ONE, w), w),
        ("3 + w == w", add(three, w), w),
        ("w + w^w == w^w", add(w, ww), ww),
        ("w*2 == w + w", mul(w, two), add(w, w)),
        ("2*w == w", mul(two, w), w),
        ("w*2 != 2*w", mul(w, two) != mul(two, w), True),
        ("(w+1)*w == w*w", mul(add(w, ONE), w), mul(w, w)),
        ("w^w * w == w^(w+1)", mul(ww, w), omega_power(add(w, ONE))),
        ("w * w^w == w^w", mul(w, ww), ww),
        ("(w^2+w)*w == w^3", mul(add(omega_power(2), w), w), omega_power(3)),
        ("(w*2+3)+(w+1) == w*3+1",
         add(add(mul(w, two), three), add(w, ONE)),
         add(mul(w, three), ONE)),
        ("w^3*2 + 5 < w^4", ord_cmp(add(omega_power(3, 2), five), omega_power(4)) < 0, True),
    ]


def law_suite(sample_budget: int, seed: int = 0,
              add: Callable[[CnfOrdinal, CnfOrdinal], CnfOrdinal] = ord_add,
              mul: Callable[[CnfOrdinal, CnfOrdinal], CnfOrdinal] = ord_mul,
              sampler: Optional[Callable[[random.Random], CnfOrdinal]] = None) -> LawReport:
    """Property suite over random triples below w^6 plus the identity table.

    Laws: associativity of + and *, left distributivity a*(b+c) = a*b + a*c,
    strict monotonicity of + and * in the right argument, a+b >= b, and
    absorption of finite summands into limits.  Stops at the first violated
    law and reports its witnesses.
    """
    if sample_budget < 1:
        raise ValueError("sample_budget must be >= 1")
    rng = random.Random(seed)
    draw = sampler or random_ordinal
    violations: list[LawViolation] = []
    checked = 0

    for name, lhs, rhs in _identity_table(add, mul):
        checked += 1
        if lhs != rhs:
            violations.append(LawViolation(f"identity: {name}", (lhs, rhs)))
            return LawReport(checked, violations)

    for _ in range(sample_budget):
        a, b, c = draw(rng), draw(rng), draw(rng)
        checked += 1
        cases = [
            ("(a+b)+c == a+(b+c)", add(add(a, b), c) == add(a, add(b, c))),
            ("(a*b)*c == a*(b*c)", mul(mul(a, b), c) == mul(a, mul(b, c))),
            ("a*(b+c) == a*b + a*c", mul(a, add(b, c)) == add(mul(a, b), mul(a, c))),
            ("a+b >= b", ord_cmp(add(a, b), b) >= 0),
        ]
        if ord_cmp(b, c) < 0:
            cases.append(("b<c implies a+b < a+c", ord_cmp(add(a, b), add(a, c)) < 0))
            if not a.is_zero:
                cases.append(("b<c, a>0 implies a*b < a*c",
                              ord_cmp(mul(a, b), mul(a, c)) < 0))
        if a.is_finite and b.is_limit:
            cases.append(("finite + limit == limit", add(a, b) == b))
        for law, ok in cases:
            if not ok:
                violations.append(LawViolation(law, (a, b, c)))
                return LawReport(checked, violations)
    return LawReport(checked, violations)
