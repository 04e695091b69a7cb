"""
Distances of <(x^n + gamma)^i> over F_16
========================================

Over F_16 the binomial x^3 + w^2 has no root, so it is irreducible, and the
lam-cyclic codes of length 3 * 2^s with lam = w^(2 * 2^s) are exactly the
ideals <(x^3 + w^2)^i>.  Their distance depends only on where i falls in the
p-adic partition of [1, 2^s - 1].
"""

from constacyclic import (
    Polynomial,
    build_single,
    certificate_for,
    classify_exponent,
    distance_single,
    ff_construct,
    verify_code,
)

F16 = ff_construct(2, 4)
w = F16.generator()
print("F_16 modulus (low degree first):", F16.modulus)
print("x^3 + w^2 irreducible:", Polynomial.binomial(F16, 3, w**2).is_irreducible())

# The distance table.  s = 1 has no TauK family; p = 2 has no Beta family.
for s in (1, 2, 3):
    row = [distance_single(2, s, i).value for i in range(2**s + 1)]
    print(f"s={s}:", row)

# Each exponent's class, for s = 3
for i in range(1, 8):
    print(i, classify_exponent(i, 2, 3))

# A distance is backed by an explicit codeword of that weight.
code = build_single(2, 4, 3, 3, w**2, 6)
cert = certificate_for(code)
print("d =", distance_single(2, 3, 6).value, " certificate weight =", cert.weight())
print("certificate:", cert)

# And by exhaustive search when the code is small enough: i = 3 at s = 2 has
# dimension 3, i.e. 4095 nonzero codewords.
report = verify_code(build_single(2, 4, 3, 2, w**2, 3))
print("formula", report.formula_distance, "oracle", report.oracle_distance, "scanned", report.enumerated)
