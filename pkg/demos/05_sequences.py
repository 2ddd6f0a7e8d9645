"""Tail-equivalence on eventually periodic sequences, and the labels.

Prepending one symbol always stays in the same tail class but flips the
mod-2 class, unless the sequence has an odd primitive period, in which
case the two mod-2 classes collapse into one.  The even/odd/full label
records which situation a class is in, and is exactly the data needed to
assign I_even / I_odd / I_mid blocks consistently.
"""

from lexorder import (between, canonical_rep, cons, flatten_check, label,
                      odd_period_char, periodic, seq_cmp, sequence,
                      tail_equiv, tail_equiv2)

u = periodic(1, 2)
print("u                =", u)
print("cons(5, u)       =", cons(5, u))
print("tail_equiv       :", tail_equiv(u, cons(5, u)))
print("tail_equiv2      :", tail_equiv2(u, cons(5, u)), "  (even period: parity flips)")
print()

v = periodic(7)
print("v                =", v)
print("tail_equiv2(v, cons(3, v)):", tail_equiv2(v, cons(3, v)),
      "  (odd period: the classes collapse)")
print("odd_period_char  :", odd_period_char(v))
print()

print("== labels ==")
for s in (periodic(1, 2), cons(5, periodic(1, 2)), periodic(2, 1), periodic(3),
          sequence([2, -1], [1, 2])):
    print(f"label({str(s):26}) = {label(s):5}  (canonical rep {canonical_rep(s)})")

print()
print("== a label flips under cons and settles after two ==")
s = periodic(1, 2)
for step in range(4):
    print(f"  {str(s):34} -> {label(s)}")
    s = cons(-1, s)

print()
print("== order structure: density between any two sequences ==")
lo, hi = periodic(1), periodic(2)
mid = between(lo, hi)
print(f"between({lo}, {hi}) = {mid}")
print("ordering check:", seq_cmp(lo, mid) < 0 and seq_cmp(mid, hi) < 0)

print()
print("== the flattening map preserves order at scale ==")
result = flatten_check(alphabet_bound=5, samples=5000, seed=11)
print(f"{result.checked_order} sampled pairs, {result.checked_density} density "
      f"constructions, {len(result.violations)} violations")
