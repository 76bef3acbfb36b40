"""
Carrier vectors from polynomial numbers
---------------------------------------

A homogeneous symmetric function ``E_n^b`` is the XOR of all degree-``b``
monomials.  On an input of weight ``i`` exactly ``C(i, b)`` of those
monomials are 1, so its value is ``C(i, b) mod 2``, and that parity is 1
exactly when the bits of ``b`` are a submask of the bits of ``i``.
"""
from sbfpoly import binom_parity, carrier_from_set, carrier_from_single

###############################################################################
# The submask rule on two small cases: 2 = 0b10 fits inside 11 = 0b1011,
# 5 = 0b101 does not.

for i, b in [(11, 2), (11, 5)]:
    print(f"C({i},{b}) mod 2 = {binom_parity(i, b)}   {i:>5b} vs {b:>5b}")

###############################################################################
# One degree: E_6^2.  Output entries below b are 0, entry b is 1, and the
# remaining n - b entries each cost one submask test.

res = carrier_from_single(6, 2)
print("pi(E_6^2) =", res.vector, " checks:", res.ops.primitive_checks)

###############################################################################
# Several degrees: the entry is the XOR of the individual parities.

res = carrier_from_set(10, [5, 7, 8])
print("pi(E_10^{5,7,8}) =", res.vector)
for i in range(6, 11):
    terms = [binom_parity(i, b) for b in (5, 7, 8) if b <= i]
    print(f"  i={i:2d}: terms {terms} -> {res.vector[i]}")
