"""
Digit reversal onto the half line
=================================

The Monna map reflects base-p digits about the radix point, sending finite
p-adic expansions to nonnegative p-adic rationals.  It carries balls onto
half-open intervals of the same length, and for p = 2 it turns the
wavelets psi_{gamma n 1} into Haar functions.
"""
from fractions import Fraction

from padicwave import Ball, ball_image, rho, rho_inverse
from padicwave.monna import haar_correspondence
from padicwave.padic import enumerate_cosets

for x in (Fraction(1), Fraction(3), Fraction(1, 2), Fraction(13, 4)):
    r = rho(x, 2)
    print(f"rho({x}) = {r}; back: {rho_inverse(r, 2).rational}")

for ball in (Ball(2, 0, Fraction(0)), Ball(2, 2, Fraction(3)), Ball(3, 1, Fraction(2, 3))):
    img = ball_image(ball)
    print(f"{ball} -> {img}, measure {ball.measure} = length {img.length}")

worst = max(haar_correspondence(g, n, 200) for g in range(-3, 4) for n in enumerate_cosets(2, 8))
print("Haar correspondence, largest error:", worst)
