"""The L-family: one order per integer, pairwise distinct, linked by *w.

Each L(i) is the w*-indexed sum ... + 3w^(i+3) + 2w^(i+2) + w^(i+1) + w^w
(coefficients grow instead when i < 0).  Multiplying on the right by w
bumps every exponent and lands, up to isomorphism, on L(i+1); yet no two
members are isomorphic, which the shift criterion and the ladder spectra
certify independently.
"""

from lexorder import (cut_types, end_data, ladder, ladders_coalesce, make_L,
                      rj4_mul_omega, slater_iso, spectra_tail_equivalent,
                      spectrum)

print("== schemas ==")
for i in (-2, -1, 0, 1, 2):
    terms = " + ".join(f"{l}*w^{k}" for l, k in reversed(make_L(i).seq.terms(4)))
    print(f"L({i:+d}) = ... + {terms} + w^w   ({make_L(i).seq})")

print()
print("== the product law: L(i)*w = L(i+1) ==")
for i in (-2, 0, 5):
    bumped = rj4_mul_omega(make_L(i))
    print(f"L({i})*w  ->  {bumped.seq}  isomorphic to L({i+1}):",
          slater_iso(bumped, make_L(i + 1)))

print()
print("== pairwise distinctness, two invariants ==")
for i, j in [(0, 1), (-3, 2), (4, 4)]:
    s = slater_iso(make_L(i), make_L(j))
    t = spectra_tail_equivalent(spectrum(make_L(i)), spectrum(make_L(j)))
    print(f"L({i}) vs L({j}): shift criterion {s}, spectra tail-equivalent {t}")

print()
print("== ladders and spectra ==")
print("spectrum L(0):", spectrum(make_L(0)).expand(15), "...")
print("spectrum L(1):", spectrum(make_L(1)).expand(15), "...")
lad_a, lad_b = ladder(make_L(0), 1), ladder(make_L(0), 9)
print("ladder from cut 1:", [t for _, t in lad_a.take(10)], "...")
print("ladder from cut 9:", [t for _, t in lad_b.take(10)], "...")
print("they coalesce at position", ladders_coalesce(lad_a, lad_b, 100))

print()
print("== cuts ==")
kinds = ", ".join(sorted(str(k) for k in cut_types(make_L(0))))
coin, cof = end_data(make_L(0))
print(f"every cut of L(0) is one of {{{kinds}}}; ends: ({coin}, {cof})")
