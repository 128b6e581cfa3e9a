"""
The Vladimirov operator is diagonal on wavelets
===============================================

D^alpha acts on psi_{gamma n j} by the scalar p^(alpha (1 - gamma)).  The
operator is evaluated pointwise from its shell decomposition, without
using the eigenrelation, so the agreement below is a genuine check.
"""
import random

from padicwave import VladimirovParams, WaveletIndex, apply_pointwise, basis_wavelet, eigenvalue
from padicwave.vladimirov import sample_points
from padicwave.wavelets import basis_value

p, alpha = 3, 1.5
params = VladimirovParams(alpha, p)
rng = random.Random(1)
for gamma in range(-2, 3):
    idx = WaveletIndex.of(gamma, 0, 1, p)
    psi = basis_wavelet(idx)
    ratios = [apply_pointwise(psi, params, x) / basis_value(idx, x)
              for x in sample_points(idx, 10, rng) if basis_value(idx, x) != 0]
    spread = max(abs(r - ratios[0]) for r in ratios)
    print(f"gamma={gamma:+d}: ratio {ratios[0].real:.12f}  expected {eigenvalue(gamma, params):.12f}"
          f"  spread {spread:.1e}")
