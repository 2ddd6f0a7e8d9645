"""Order-type expressions: the grammar, the rewriter, and what `*` means.

The product is lexicographic: X*Y replaces every point of X with a copy of
Y.  On ordinal leaves that is the ordinal product with the factors swapped,
so `2*w` is w+w (two copies of w) while `w*2` is just w.
"""

from lexorder import iso_check, normalize, parse, render, reverse

EXPRESSIONS = [
    "2*w",            # two copies of w
    "w*2",            # w copies of a pair: still w
    "(1+w)*w",        # fuses to an ordinal
    "w^w * w",        # the terminal absorption behind the whole construction
    "L(0)*w",         # the L-family product law, as a rewrite
    "L(-1)*w",        # same law below zero: the schema shifts
    "3*w^2 + w + 5",  # an ordinal in lexicographic clothing
    "I_even*w",       # Z-block sums bump blockwise
    "rev(w) + w",     # reversal is a first-class constructor
    "w1 + w",         # opaque atoms survive normalization
]

for text in EXPRESSIONS:
    t = parse(text)
    print(f"{text:16} parses to {render(t):24} normal form: {render(normalize(t))}")

print()
print("== reversal pushes through structure ==")
t = parse("w + 1")
print("reverse(w + 1)       =", render(reverse(t)))
print("reverse(reverse(..)) =", render(reverse(reverse(t))))

print()
print("== the isomorphism dispatcher is sound and honestly partial ==")
for left, right in [("L(0)*w", "L(1)"), ("L(0)", "L(1)"),
                    ("I_even*w", "I_odd"), ("w^2", "w^2 + w"),
                    ("w1 + w", "w + w1")]:
    print(f"iso {left!r:12} vs {right!r:12} -> {iso_check(parse(left), parse(right))}")
