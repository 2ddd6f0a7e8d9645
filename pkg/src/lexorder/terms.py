"""Order-type expressions: AST, parser, rewriting normalizer, isomorphism checks.

Terms denote linear orders built from ordinals, reversal, finite sums, the
lexicographic product, finite powers, and named infinite blocks.  The
product convention throughout: ``LexProd(x, y)`` replaces every point of x
with a copy of y, so on ordinal leaves it equals the *ordinal* product
``val(y) * val(x)`` -- the factor order reverses, which is where exponent
identities like w^w * w = w^w (lexicographic) come from.

``normalize`` drives a confluent, innermost-first rewrite system:

  R1  (X+Y)Z -> XZ + YZ          (right-distributivity; there is deliberately
                                  no left-distributivity rule, Z(X+Y) is not
                                  ZX + ZY in general)
  R2  leaf products fuse:        LexProd(a, b) -> OrdLeaf(b * a)
  R3  adjacent leaf summands fuse via ordinal addition
  R4  powers of a common base merge: X^m * X^n -> X^(m+n)
  R5  sums flatten; empty orders and singleton units are eliminated
  R6  Rj4 block times an ordinal below w^w shifts every exponent
  R7  likewise for Z-block sums, blockwise

Text syntax (whitespace-insensitive; inverse of ``render`` on normal forms):

  term   := sum
  sum    := prod ('+' prod)*
  prod   := power ('*' power)*
  power  := factor ('^' nat)?
  factor := 'rev(' term ')' | 'L(' int ')' | 'I_even' | 'I_odd' | 'I_mid'
          | 'w^w' | 'w^' nat | 'w^(' term ')' | 'w' | nat | '(' term ')'
          | rj4-literal | zsum-literal | atom-name

``*`` is the lexicographic product, so finite coefficients sit on the left:
``2*w`` is w+w (two copies of w) while ``w*2`` is w (w copies of a pair).
The parser constant-folds subexpressions built purely from ordinal atoms, so
parsing the rendering of a normal form reproduces it node for node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Optional

from .ordinals import (CnfOrdinal, CofClass, OMEGA, ONE, ZERO, from_int,
                       omega_power, ord_add, ord_mul, ord_pow_finite)
from .rj4 import (AffineMap, EvAffineSeq, Rj4Order, ZBlockSum, make_L, make_I,
                  rj4_class_index, rj4_shift_exponents, slater_iso, zsum_iso)


class OrderTerm:
    """Base class for order-type expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class OrdLeaf(OrderTerm):
    value: CnfOrdinal


@dataclass(frozen=True)
class Atom(OrderTerm):
    """An opaque order known only by its ends (w1, A = w1* + w1, ...)."""

    name: str
    coinitiality: CofClass
    cofinality: CofClass


@dataclass(frozen=True)
class Reverse(OrderTerm):
    inner: OrderTerm


@dataclass(frozen=True)
class FinSum(OrderTerm):
    parts: tuple[OrderTerm, ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise ValueError("FinSum needs at least two parts")


@dataclass(frozen=True)
class LexProd(OrderTerm):
    left: OrderTerm
    right: OrderTerm


@dataclass(frozen=True)
class FinPow(OrderTerm):
    base: OrderTerm
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError("FinPow exponent must be >= 1")


@dataclass(frozen=True)
class Rj4Ref(OrderTerm):
    schema: Rj4Order


@dataclass(frozen=True)
class ZSumRef(OrderTerm):
    schema: ZBlockSum


_ZERO_LEAF = OrdLeaf(ZERO)
_ONE_LEAF = OrdLeaf(ONE)

DEFAULT_ATOMS: dict[str, Atom] = {
    "w1": Atom("w1", CofClass.ONE, CofClass.OMEGA1),
    "A": Atom("A", CofClass.OMEGA1, CofClass.OMEGA1),
}


def lex_prod(x: OrderTerm, y: OrderTerm) -> OrderTerm:
    """The unreduced product node; reductions happen in ``normalize``."""
    return LexProd(x, y)


def reverse(t: OrderTerm) -> OrderTerm:
    """Push reversal through the structure of the term.

    Reversal of a sum reverses the list and each part; reversal distributes
    over products and powers factorwise; double reversal cancels; finite
    leaves are self-reverse.  ``Reverse`` survives only around atomic cores
    (infinite leaves, atoms, block references).  This is exactly involutive.
    """
    if isinstance(t, Reverse):
        return t.inner
    if isinstance(t, FinSum):
        return FinSum(tuple(reverse(p) for p in reversed(t.parts)))
    if isinstance(t, LexProd):
        return LexProd(reverse(t.left), reverse(t.right))
    if isinstance(t, FinPow):
        return FinPow(reverse(t.base), t.exponent)
    if isinstance(t, OrdLeaf):
        return t if t.value.is_finite else Reverse(t)
    return Reverse(t)


# -- normalization ---------------------------------------------------------------

def normalize(t: OrderTerm) -> OrderTerm:
    """Innermost-first rewrite to the unique normal form (idempotent)."""
    if isinstance(t, (OrdLeaf, Atom, Rj4Ref, ZSumRef)):
        return t
    if isinstance(t, Reverse):
        return _norm_reverse(normalize(t.inner))
    if isinstance(t, FinSum):
        return _norm_sum([normalize(p) for p in t.parts])
    if isinstance(t, FinPow):
        return _norm_pow(normalize(t.base), t.exponent)
    if isinstance(t, LexProd):
        return _norm_product(_chain(normalize(t.left)) + _chain(normalize(t.right)))
    raise TypeError(f"not an order term: {t!r}")


def _chain(t: OrderTerm) -> list[OrderTerm]:
    if isinstance(t, LexProd):
        return _chain(t.left) + _chain(t.right)
    return [t]


def _self_reverse_value(t: OrderTerm) -> Optional["CnfOrdinal"]:
    """The ordinal v with t = reverse of OrdLeaf(v), if that reading exists
    (reversed leaves, and finite leaves, which are their own reverses)."""
    if isinstance(t, Reverse) and isinstance(t.inner, OrdLeaf):
        return t.inner.value
    if isinstance(t, OrdLeaf) and t.value.is_finite:
        return t.value
    return None


def _norm_sum(parts: list[OrderTerm]) -> OrderTerm:
    flat: list[OrderTerm] = []
    for p in parts:
        if isinstance(p, FinSum):
            flat.extend(p.parts)
        elif isinstance(p, OrdLeaf) and p.value.is_zero:
            continue  # the empty order is a sum unit
        else:
            flat.append(p)
    fused: list[OrderTerm] = []
    for p in flat:
        if fused and isinstance(fused[-1], OrdLeaf) and isinstance(p, OrdLeaf):
            fused[-1] = OrdLeaf(ord_add(fused[-1].value, p.value))
            continue
        if fused and isinstance(fused[-1], Reverse) and isinstance(fused[-1].inner, OrdLeaf):
            # rev(q) + rev(v) = rev(v + q): when v is absorbed by q this
            # drops the new part, mirroring ordinal absorption in reverse.
            q = fused[-1].inner.value
            v = _self_reverse_value(p)
            if v is not None and ord_add(v, q) == q:
                continue
        fused.append(p)
    if not fused:
        return _ZERO_LEAF
    if len(fused) == 1:
        return fused[0]
    return FinSum(tuple(fused))


def _norm_pow(base: OrderTerm, n: int) -> OrderTerm:
    if n < 1:
        raise ValueError("finite powers need exponent >= 1")
    if n == 1:
        return base
    if isinstance(base, OrdLeaf):
        # X^n on an ordinal leaf is the iterated ordinal product.
        return OrdLeaf(ord_pow_finite(base.value, n))
    if isinstance(base, Reverse) and isinstance(base.inner, OrdLeaf):
        # (X*)^n = (X^n)*: reversal distributes over the n-fold product
        return _norm_reverse(OrdLeaf(ord_pow_finite(base.inner.value, n)))
    if isinstance(base, FinPow):
        return FinPow(base.base, base.exponent * n)
    return FinPow(base, n)


def _norm_product(factors: list[OrderTerm]) -> OrderTerm:
    factors = [g for f in factors for g in _chain(f)]  # keep chains flat
    if any(isinstance(f, OrdLeaf) and f.value.is_zero for f in factors):
        return _ZERO_LEAF  # replacing points with nothing, or nothing with anything
    factors = [f for f in factors if f != _ONE_LEAF]
    if not factors:
        return _ONE_LEAF
    # R1: a sum with factors to its right distributes over them.  Left factors
    # stay put (no left-distributivity).
    for i in range(len(factors) - 1, -1, -1):
        f = factors[i]
        if isinstance(f, FinSum) and i < len(factors) - 1:
            suffix = factors[i + 1:]
            parts = [_norm_product(_chain(p) + suffix) for p in f.parts]
            return _norm_product(factors[:i] + [_norm_sum(parts)])
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            fused = _fuse_pair(factors[i], factors[i + 1])
            if fused is not None:
                factors[i:i + 2] = [fused]
                changed = True
                break
    if len(factors) == 1:
        return factors[0]
    return reduce(LexProd, factors)


def _fuse_pair(f: OrderTerm, g: OrderTerm) -> Optional[OrderTerm]:
    """Try to reduce the adjacent product f*g to one factor."""
    if isinstance(f, OrdLeaf) and isinstance(g, OrdLeaf):
        # R2: note the reversed factor order of the ordinal product.
        return OrdLeaf(ord_mul(g.value, f.value))
    if isinstance(f, Reverse) and isinstance(f.inner, OrdLeaf):
        # f = a* with a a pure power of w (the only reversed-leaf core);
        # a* * b* = (a*b)* and a* * n = (a*n)* since finite n is self-reverse.
        gv = None
        if isinstance(g, Reverse) and isinstance(g.inner, OrdLeaf):
            gv = g.inner.value
        elif isinstance(g, OrdLeaf) and g.value.is_finite:
            gv = g.value
        if gv is not None:
            return _norm_reverse(OrdLeaf(ord_mul(gv, f.inner.value)))
    if (isinstance(f, Reverse) and isinstance(f.inner, (Rj4Ref, ZSumRef))
            and isinstance(g, OrdLeaf) and g.value.is_finite):
        # rev(S)*n = rev(S*n) = rev(S): finite orders are self-reverse and
        # n-plication fixes every summand of S.
        return f
    if isinstance(f, (Rj4Ref, ZSumRef)) and isinstance(g, OrdLeaf):
        v = g.value
        if v.is_finite:
            # Replacing each point with n points fixes every summand:
            # n * w^k = w^k, so the block (sum) is unchanged up to iso.
            return f
        e = v.leading_exponent
        if not e.is_finite:
            return None  # a w^w factor would leave the schema family
        shift = e.to_int()
        if isinstance(f, Rj4Ref):
            return Rj4Ref(rj4_shift_exponents(f.schema, shift))
        s = f.schema
        return ZSumRef(ZBlockSum(affine=s.affine, bumps=s.bumps + shift, table=s.table))
    bf, nf = (f.base, f.exponent) if isinstance(f, FinPow) else (f, 1)
    bg, ng = (g.base, g.exponent) if isinstance(g, FinPow) else (g, 1)
    if bf == bg:
        return _norm_pow(bf, nf + ng)  # R4: X^m * X^n = X^(m+n)
    return None


def _norm_reverse(t: OrderTerm) -> OrderTerm:
    """Reversal of an already-normalized term, renormalized."""
    if isinstance(t, Reverse):
        return t.inner
    if isinstance(t, FinSum):
        return _norm_sum([_norm_reverse(p) for p in reversed(t.parts)])
    if isinstance(t, LexProd):
        return _norm_product([_norm_reverse(f) for f in _chain(t)])
    if isinstance(t, FinPow):
        return _norm_pow(_norm_reverse(t.base), t.exponent)
    if isinstance(t, OrdLeaf):
        v = t.value
        if v.is_finite:
            return t
        if len(v.terms) == 1 and v.terms[0][1] == 1:
            return Reverse(t)  # a pure power w^e is an irreducible core
        # Split the normal form into single copies of w^e, reverse the list,
        # and reverse each copy; keeps reversal and leaf fusion commuting.
        parts: list[OrderTerm] = []
        for e, c in reversed(v.terms):
            if e.is_zero:
                parts.append(OrdLeaf(from_int(c)))
            else:
                parts.extend([Reverse(OrdLeaf(omega_power(e)))] * c)
        return _norm_sum(parts)
    return Reverse(t)


# -- isomorphism dispatcher -------------------------------------------------------

class IsoVerdict(Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


def iso_check(s: OrderTerm, t: OrderTerm) -> IsoVerdict:
    """Sound, deliberately partial isomorphism test on normal forms.

    Verdicts are issued only where a complete criterion applies: identical
    normal forms, ordinal leaves (Cantor normal form is unique), Rj4 schemas
    (shift criterion), or Z-block sums over the L-family.  Everything else is
    an honest ``unknown``.
    """
    ns, nt = normalize(s), normalize(t)
    if ns == nt:
        return IsoVerdict.ISOMORPHIC
    if isinstance(ns, OrdLeaf) and isinstance(nt, OrdLeaf):
        return IsoVerdict.NOT_ISOMORPHIC
    if isinstance(ns, Rj4Ref) and isinstance(nt, Rj4Ref):
        ok = slater_iso(ns.schema, nt.schema)
        return IsoVerdict.ISOMORPHIC if ok else IsoVerdict.NOT_ISOMORPHIC
    if isinstance(ns, ZSumRef) and isinstance(nt, ZSumRef):
        try:
            ok = zsum_iso(ns.schema, nt.schema)
        except ValueError:
            return IsoVerdict.UNKNOWN
        return IsoVerdict.ISOMORPHIC if ok else IsoVerdict.NOT_ISOMORPHIC
    return IsoVerdict.UNKNOWN


# -- rendering ---------------------------------------------------------------------

def render(t: OrderTerm) -> str:
    """Deterministic text form; ``parse(render(t)) == t`` for normal forms."""
    if isinstance(t, FinSum):
        return " + ".join(f"({render(p)})" if isinstance(p, FinSum) else render(p)
                          for p in t.parts)
    if isinstance(t, OrdLeaf):
        return _render_ordinal_term(t.value)
    return _render_prod(t)


def _render_prod(t: OrderTerm) -> str:
    """Render as a product operand: parenthesize anything sum-shaped."""
    if isinstance(t, FinSum):
        return f"({render(t)})"
    if isinstance(t, OrdLeaf):
        s = _render_ordinal_term(t.value)
        return f"({s})" if " + " in s else s
    if isinstance(t, LexProd):
        ops = []
        for f in _chain_left(t):
            if isinstance(f, LexProd):
                ops.append(f"({_render_prod(f)})")  # right-nested product
            else:
                ops.append(_render_prod(f))
        return "*".join(ops)
    if isinstance(t, FinPow):
        return f"{_render_atom(t.base)}^{t.exponent}"
    return _render_atom(t)


def _chain_left(t: OrderTerm) -> list[OrderTerm]:
    if isinstance(t, LexProd):
        return _chain_left(t.left) + [t.right]
    return [t]


def _render_atom(t: OrderTerm) -> str:
    if isinstance(t, Reverse):
        return f"rev({render(t.inner)})"
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Rj4Ref):
        idx = rj4_class_index(t.schema)
        if idx is not None and make_L(idx) == t.schema:
            return f"L({idx})"
        return str(t.schema)
    if isinstance(t, ZSumRef):
        s = t.schema
        if s.bumps == 0 and s.affine in ((2, 0), (2, 1), (1, 0)):
            return {(2, 0): "I_even", (2, 1): "I_odd", (1, 0): "I_mid"}[s.affine]
        return str(s)
    if isinstance(t, OrdLeaf):
        s = _render_ordinal_term(t.value)
        return f"({s})" if ("+" in s or "*" in s) else s
    return f"({render(t)})"


def _render_ordinal_term(v: CnfOrdinal) -> str:
    """An ordinal leaf in lexicographic syntax: coefficients become left
    factors (``2*w^3`` is two copies of w^3, i.e. the ordinal w^3 * 2)."""
    if v.is_zero:
        return "0"
    parts = []
    for e, c in v.terms:
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
            base = f"w^({_render_ordinal_term(e)})"
        parts.append(base if c == 1 else f"{c}*{base}")
    return " + ".join(parts)


# -- parsing ------------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUM = re.compile(r"\d+")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            m = _NUM.match(text, i)
            assert m is not None
            tokens.append(("num", m.group(), i))
            i = m.end()
            continue
        if ch.isalpha() or ch == "_":
            m = _IDENT.match(text, i)
            assert m is not None
            word = m.group()
            if word in ("rj4", "zsum") and m.end() < n and text[m.end()] == "{":
                j = m.end()
                depth = 0
                while j < n:
                    if text[j] == "{":
                        depth += 1
                    elif text[j] == "}":
                        depth -= 1
                        if depth == 0:
                            break
                    j += 1
                if depth != 0:
                    raise ParseError("unbalanced '{' in schema literal", i)
                tokens.append(("lit", text[i:j + 1], i))
                i = j + 1
                continue
            tokens.append(("name", word, i))
            i = m.end()
            continue
        if ch in "^*+()-,":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], atoms: dict[str, Atom]):
        self.tokens = tokens
        self.pos = 0
        self.atoms = atoms

    def peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self._end())
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None or tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2] if tok else self._end())
        return self.next()

    def _end(self) -> int:
        return self.tokens[-1][2] + len(self.tokens[-1][1]) if self.tokens else 0

    # sum := prod ('+' prod)*; adjacent ordinal leaves fold immediately, so
    # rendered normal forms parse back to themselves.
    def parse_sum(self) -> OrderTerm:
        parts = [self.parse_prod()]
        while (tok := self.peek()) is not None and tok[0] == "+":
            self.next()
            p = self.parse_prod()
            if isinstance(parts[-1], OrdLeaf) and isinstance(p, OrdLeaf):
                parts[-1] = OrdLeaf(ord_add(parts[-1].value, p.value))
            else:
                parts.append(p)
        return parts[0] if len(parts) == 1 else FinSum(tuple(parts))

    def parse_prod(self) -> OrderTerm:
        factors = [self.parse_power()]
        while (tok := self.peek()) is not None and tok[0] == "*":
            self.next()
            f = self.parse_power()
            if isinstance(factors[-1], OrdLeaf) and isinstance(f, OrdLeaf):
                # lexicographic product of ordinals: right value times left
                factors[-1] = OrdLeaf(ord_mul(f.value, factors[-1].value))
            else:
                factors.append(f)
        return reduce(LexProd, factors)

    def parse_power(self) -> OrderTerm:
        node = self.parse_factor()
        if (tok := self.peek()) is not None and tok[0] == "^":
            at = tok[2]
            self.next()
            ntok = self.expect("num")
            n = int(ntok[1])
            if n < 1:
                raise ParseError("finite power must be >= 1", ntok[2])
            if isinstance(node, OrdLeaf):
                node = OrdLeaf(ord_pow_finite(node.value, n))
            else:
                node = FinPow(node, n)
        return node

    def parse_factor(self) -> OrderTerm:
        tok = self.next()
        kind, text, at = tok
        if kind == "num":
            return OrdLeaf(from_int(int(text)))
        if kind == "(":
            inner = self.parse_sum()
            self.expect(")")
            return inner
        if kind == "lit":
            if text.startswith("rj4{"):
                return Rj4Ref(parse_rj4_literal(text, at))
            return ZSumRef(parse_zsum_literal(text, at))
        if kind == "name":
            if text == "w":
                return self._parse_omega(at)
            if text == "rev":
                self.expect("(")
                inner = self.parse_sum()
                self.expect(")")
                return Reverse(inner)
            if text == "L":
                self.expect("(")
                sign = 1
                if (t := self.peek()) is not None and t[0] == "-":
                    self.next()
                    sign = -1
                ntok = self.expect("num")
                self.expect(")")
                return Rj4Ref(make_L(sign * int(ntok[1])))
            if text in ("I_even", "I_odd", "I_mid"):
                return ZSumRef(make_I(text.removeprefix("I_")))
            if text in self.atoms:
                return self.atoms[text]
            raise ParseError(f"unknown block name {text!r}", at)
        raise ParseError(f"unexpected token {text!r}", at)

    def _parse_omega(self, at: int) -> OrdLeaf:
        if (tok := self.peek()) is None or tok[0] != "^":
            return OrdLeaf(OMEGA)
        self.next()
        etok = self.peek()
        if etok is None:
            raise ParseError("expected exponent after '^'", at)
        if etok[0] == "num":
            self.next()
            return OrdLeaf(omega_power(int(etok[1])))
        if etok[0] == "name" and etok[1] == "w":
            self.next()
            return OrdLeaf(omega_power(OMEGA))
        if etok[0] == "(":
            self.next()
            inner = self.parse_sum()
            self.expect(")")
            if not isinstance(inner, OrdLeaf):
                raise ParseError("exponent of w must be an ordinal", etok[2])
            return OrdLeaf(omega_power(inner.value))
        raise ParseError(f"bad exponent {etok[1]!r}", etok[2])


def parse(text: str, atoms: Optional[dict[str, Atom]] = None) -> OrderTerm:
    """Parse the expression grammar into an AST.

    Subexpressions built purely from ordinal atoms are folded to a single
    leaf during parsing; all other structure is preserved unreduced.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    p = _Parser(tokens, DEFAULT_ATOMS if atoms is None else atoms)
    node = p.parse_sum()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()[1]!r}", p.peek()[2])
    return node


# -- schema literals -----------------------------------------------------------------

def _parse_affine(text: str, var: str, position: int) -> AffineMap:
    compact = text.replace(" ", "")
    m = re.fullmatch(rf"(?:(-?\d+)\*)?{var}(?:([+-]\d+))?|(-?\d+)", compact)
    if m is None:
        raise ParseError(f"bad affine map {text!r}", position)
    if m.group(3) is not None:
        return AffineMap(0, int(m.group(3)))
    slope = int(m.group(1)) if m.group(1) is not None else 1
    offset = int(m.group(2)) if m.group(2) is not None else 0
    return AffineMap(slope, offset)


def parse_rj4_literal(text: str, position: int = 0) -> Rj4Order:
    """``rj4{init=[(l,k),...]; tail j>=J: l=a*j+b, k=c*j+d}``"""
    compact = text.replace(" ", "")
    m = re.fullmatch(r"rj4\{init=\[(.*?)\];tailj>=(-?\d+):l=([^,]+),k=([^}]+)\}", compact)
    if m is None:
        raise ParseError("malformed rj4 schema literal", position)
    pairs = tuple((int(a), int(b))
                  for a, b in re.findall(r"\((-?\d+),(-?\d+)\)", m.group(1)))
    onset = int(m.group(2))
    if onset != len(pairs) + 1:
        raise ParseError(f"tail onset {onset} does not follow {len(pairs)} initial pairs",
                         position)
    tail_l = _parse_affine(m.group(3), "j", position)
    tail_k = _parse_affine(m.group(4), "j", position)
    try:
        return Rj4Order(EvAffineSeq(pairs, tail_l, tail_k))
    except ValueError as exc:
        raise ParseError(f"invalid rj4 schema: {exc}", position) from exc


def parse_zsum_literal(text: str, position: int = 0) -> ZBlockSum:
    """``zsum{L(p*i+q)}``, optionally ``*w^b``, or ``zsum{per=[rj4{...}, ...]}``."""
    compact = text.replace(" ", "")
    m = re.fullmatch(r"zsum\{L\(([^)]+)\)(?:\*w\^(\d+))?\}", compact)
    if m is not None:
        amap = _parse_affine(m.group(1), "i", position)
        try:
            base = ZBlockSum.affine_family(amap.slope, amap.offset)
        except ValueError as exc:
            raise ParseError(f"invalid zsum literal: {exc}", position) from exc
        bumps = int(m.group(2)) if m.group(2) else 0
        return ZBlockSum(affine=base.affine, bumps=bumps)
    m = re.fullmatch(r"zsum\{per=\[(.*)\](?:\*w\^(\d+))?\}", compact)
    if m is None:
        raise ParseError("malformed zsum literal", position)
    blocks = [parse_rj4_literal(b, position)
              for b in re.findall(r"rj4\{[^{}]*\}", m.group(1))]
    if not blocks:
        raise ParseError("zsum periodic table is empty", position)
    bumps = int(m.group(2)) if m.group(2) else 0
    return ZBlockSum(table=tuple(blocks), bumps=bumps)
