"""A tour of exact ordinal arithmetic in Cantor normal form.

Every value below is a CnfOrdinal; equality of values is equality of
ordinals, so all the classic non-commutativity and absorption phenomena
are visible as plain syntax.
"""

from lexorder import (OMEGA, OMEGA_OMEGA, ONE, from_int, law_suite,
                      omega_power, ord_add, ord_cmp, ord_cofinality, ord_mul,
                      parse_ordinal)

w, ww = OMEGA, OMEGA_OMEGA

print("== sums ==")
print("3 + w      =", ord_add(from_int(3), w), "   (finite prefixes are absorbed)")
print("w + 3      =", ord_add(w, from_int(3)))
print("w + w^w    =", ord_add(w, ww), "  (strict initial segments of w^w vanish)")

print()
print("== products (not commutative) ==")
print("w * 2      =", ord_mul(w, from_int(2)))
print("2 * w      =", ord_mul(from_int(2), w))
print("w^w * w    =", ord_mul(ww, w))
print("w * w^w    =", ord_mul(w, ww), "  (the exponents add in the other order)")
print("(w+1) * w  =", ord_mul(ord_add(w, ONE), w))

print()
print("== comparison and cofinality ==")
big = ord_add(omega_power(5, 9), omega_power(4))
print("w^w vs w^5*9 + w^4:", {1: "greater", 0: "equal", -1: "less"}[ord_cmp(ww, big)])
for a in (ww, ord_add(omega_power(2), from_int(5)), from_int(0)):
    print(f"cofinality({a}) = {ord_cofinality(a)}")

print()
print("== text syntax round trip ==")
text = "w^3*2 + w + 5"
print(f"parse_ordinal({text!r}) =", parse_ordinal(text))

print()
print("== the law suite: the oracle for limit ordinals ==")
result = law_suite(2000, seed=1)
print(f"checked {result.checked} identity/law instances ->",
      "all laws hold" if result.passed else f"violation: {result.first_witness()}")
