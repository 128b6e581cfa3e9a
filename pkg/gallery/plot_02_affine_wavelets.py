"""
Every affine wavelet is a phased basis wavelet
==============================================

Dilating and translating the mother wavelet never leaves the discrete
family psi_{gamma n j}: up to a root-of-unity phase, psi^{a,b} equals one
basis element.  Here we classify a few pairs and check the identity
pointwise.
"""
import random
from fractions import Fraction

from padicwave import classify_affine
from padicwave.sampling import random_affine
from padicwave.wavelets import affine_value, basis_value

p = 3
# integer translations stay in the same basis element but pick up a phase
for a, b in [(Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(4, 3)),
             (Fraction(9), Fraction(1, 3)), (Fraction(2, 27), Fraction(5, 9))]:
    cls = classify_affine(a, b, p)
    print(f"a={a}, b={b}: index {cls.index}, phase {cls.phase}")

# the identity, checked on random pairs and points
rng = random.Random(0)
worst = 0.0
for _ in range(200):
    a, b = random_affine(p, rng)
    cls = classify_affine(a, b, p)
    for _ in range(20):
        x = b + a * rng.randrange(p**6)
        diff = affine_value(a, b, x, p) - cls.factor * basis_value(cls.index, x)
        worst = max(worst, abs(diff))
print("largest pointwise discrepancy:", worst)
