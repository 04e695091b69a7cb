"""
The eleven-row table for <(x^n - xi)^i (x^n + xi)^j>
====================================================

When x^(2n) - xi^2 splits into two irreducible binomials the code has two
exponents.  The distance is read from a table keyed by the partition classes
of i and j, with rows T1..T11, and does not depend on n, the field or xi.
"""

import numpy as np

from constacyclic import build_two_factor, distance_two_factor, ff_construct, Polynomial, verify_code

# Over F_13, x^3 - 2 and x^3 + 2 are both irreducible: theta-cyclic codes of
# length 6 * 13^s with theta = 4^(13^s).
F13 = ff_construct(13)
for c in (-2, 2):
    print(f"x^3 + {c % 13} irreducible:", Polynomial.binomial(F13, 3, c).is_irreducible())

p, s = 13, 1
D = np.array(
    [[distance_two_factor(p, s, i, j).value or 0 for j in range(p**s + 1)] for i in range(p**s + 1)]
)
print(D)  # 0 marks the zero code at (13, 13)

# The table is symmetric in (i, j); the lookup swaps so that i >= j.
print("symmetric:", (D == D.T).all())
r = distance_two_factor(13, 1, 3, 9)
print(r.case, r.value, "swapped" if r.swapped else "")

# Which rows fire, over a grid big enough to reach all of them.
rows = {}
for i in range(28):
    for j in range(28):
        rows.setdefault(distance_two_factor(3, 3, i, j).case, (i, j))
print(sorted(rows.items(), key=lambda kv: (len(kv[0]), kv[0])))

# Checking a handful of F_3, length-18 cyclic codes against brute force
for i, j in [(4, 2), (7, 4), (8, 8), (9, 5)]:
    rep = verify_code(build_two_factor(3, 1, 1, 2, 1, i, j))
    print((i, j), rep.case, rep.formula_distance, rep.oracle_distance, rep.agree)
