"""
Negacyclic codes of length 2 p^s
================================

x^2 + 1 is irreducible over F_{p^a} exactly when p = 3 mod 4 and a is odd.
Then negacyclic codes are <(x^2 + 1)^i>.  Otherwise x^2 + 1 = (x - xi)(x + xi)
and the two-exponent table applies.  build_negacyclic picks the family.
"""

from constacyclic import build_negacyclic, negacyclic_distance, verify_code, x2_plus_1_irreducible

for p, a in [(3, 1), (5, 1), (7, 1), (7, 2), (11, 3), (13, 1)]:
    print(f"F_{p}^{a}: x^2 + 1 irreducible = {x2_plus_1_irreducible(p, a)}")

# p = 7: one exponent
for i in range(8):
    code = build_negacyclic(7, 1, 1, i)
    print(i, code.family, negacyclic_distance(7, 1, 1, i).value)

# p = 5: xi = sqrt(-1) = 2, two exponents
code = build_negacyclic(5, 1, 1, 2, 1)
print("xi =", code.spec.xi, " lambda =", code.lam, " generator:", code.generator)
print(negacyclic_distance(5, 1, 1, 2, 1))

# The large-dimension codes are checked by searching all light supports
# instead of all messages.
rep = verify_code(build_negacyclic(7, 1, 1, 2), max_dim=6)
print(rep.method, rep.lower_bound, rep.upper_bound, rep.agree)
