"""
p-adic numbers as digit windows
===============================

A p-adic number is stored as a finite window of base-p digits together
with the exponent up to which those digits are known.  Rationals also keep
their exact value, so nothing is lost when the window is too short.
"""
from fractions import Fraction

from padicwave import PAdic, character, fractional_part, norm_and_valuation

p = 5

# -1/3 has a periodic 5-adic expansion: 3, 1, 3, 1, ...
x = PAdic.from_rational(Fraction(-1, 3), p, digits=10)
print("digits of -1/3:", [x.digit_at(k) for k in range(10)])

# with the exact value attached, 3x + 1 is the literal zero
print("3x + 1 is exactly zero:", (x * 3 + 1).exact_zero)

# from the digits alone we only learn that 3x + 1 vanishes mod 5^10
window = PAdic.from_window(p, 0, x.mantissa, 10)
print("digits only, zero mod 5^10:", (window * 3 + 1).is_zero_to_precision)

# norm and valuation: 7/25 sits two levels below Z_5
y = PAdic.from_rational(Fraction(7, 25), p)
print("|7/25|_5 and v_5:", norm_and_valuation(y))

# the fractional part drives the additive character exp(2 pi i {x})
print("{7/25}_5 =", fractional_part(y))
print("chi(7/25) =", character(y), "=", character(y).to_complex())

# precision propagates: a sum is known only as far as both terms are
a = PAdic.from_window(p, 0, 1234, 6)
b = PAdic.from_window(p, -1, 77, 9)
print("precision of a + b:", (a + b).precision)
