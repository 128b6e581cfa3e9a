"""
Coefficients, Parseval and reconstruction
=========================================

For a locally constant function with compact support only finitely many
wavelet scales carry mean-zero detail.  The indicator of Z_p has
coefficient energy (p - 1) p^-gamma at every scale gamma >= 1, and what is
left after G scales is exactly p^-G.
"""
from fractions import Fraction

from padicwave import (
    SchwartzFunction,
    admissibility_constant,
    coefficient_table,
    continuous_transform,
    norm_sq,
    reconstruct_partial,
    unit_ball_indicator,
)
from padicwave.wavelets import support_window

p = 2
omega = unit_ball_indicator(p)
for G in (1, 2, 4, 8):
    table = coefficient_table(omega, 1, G)
    print(f"G={G}: window energy {table.energy():.10f}, tail {1 - table.energy():.3e}")

# a mean-zero function is recovered exactly from its support window
f = SchwartzFunction(p, 2, {Fraction(0): 1, Fraction(1): -1j, Fraction(2): 1j, Fraction(3): -1})
lo, hi = support_window(f)
r = reconstruct_partial(coefficient_table(f, lo, hi), f)
print("window", (lo, hi), "residual", r.residual_norm_sq, "error", norm_sq(f - r.approximation))

# the continuous transform is read off a single discrete coefficient
a, b = Fraction(2), Fraction(0)
print("direct:  ", continuous_transform(f, a, b, method="direct"))
print("classify:", continuous_transform(f, a, b, method="classify"))

# and the admissibility constant is 1/p
print("C_psi for p=2,3,5:", [admissibility_constant(q) for q in (2, 3, 5)])
