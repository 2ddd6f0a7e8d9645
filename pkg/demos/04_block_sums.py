"""Z-indexed block sums of the L-family and their *w dynamics.

I_even, I_odd and I_mid are the Z-sums over L(2i), L(2i+1) and L(i).
Right multiplication by w acts blockwise and shifts the family index, so
it swaps I_even and I_odd while fixing I_mid; all three are invariant
under w^2 and pairwise non-isomorphic.  These three facts are exactly what
the even/odd/full labels of the sequence machinery get attached to.
"""

from lexorder import gap_profile, make_I, zsum_iso, zsum_mul_omega

even, odd, mid = make_I("even"), make_I("odd"), make_I("mid")

print("== blocks ==")
for name, s in (("I_even", even), ("I_odd", odd), ("I_mid", mid)):
    blocks = " + ".join(f"L({2*i if s is even else 2*i+1 if s is odd else i})"
                        for i in (-1, 0, 1))
    print(f"{name} = ... + {blocks} + ...    ({s})")

print()
print("== one multiplication by w ==")
print("I_even*w = I_odd :", zsum_iso(zsum_mul_omega(even), odd))
print("I_odd*w  = I_even:", zsum_iso(zsum_mul_omega(odd), even))
print("I_mid*w  = I_mid :", zsum_iso(zsum_mul_omega(mid), mid))

print()
print("== two multiplications close the loop ==")
for name, s in (("I_even", even), ("I_odd", odd), ("I_mid", mid)):
    twice = zsum_mul_omega(zsum_mul_omega(s))
    print(f"{name}*w^2 = {name}:", zsum_iso(twice, s))

print()
print("== yet the three are pairwise distinct ==")
print("I_even = I_odd:", zsum_iso(even, odd))
print("I_even = I_mid:", zsum_iso(even, mid))
print("I_odd  = I_mid:", zsum_iso(odd, mid))

print()
print("== why block matching is forced: the gap geometry ==")
for name, s in (("I_even", even), ("I_mid", mid)):
    print(f"{name}: {gap_profile(s)}")
