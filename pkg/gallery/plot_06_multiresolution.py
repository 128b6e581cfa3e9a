"""
Multiresolution analysis
========================

V_gamma is the space of functions constant on balls of radius p^gamma.
Projection onto V_gamma averages over those balls; the difference between
two consecutive levels is spanned by the wavelets of that scale.
"""
import random

from padicwave import axiom_report, membership_scale, norm_sq, project
from padicwave.mra import detail_component, standard_generators
from padicwave.sampling import random_function
from padicwave.wavelets import coefficient_table

p = 3
rng = random.Random(2)
f = random_function(p, rng)
print("f lives in V_gamma from gamma =", membership_scale(f))
for g in range(-1, 4):
    pg = project(f, g)
    detail = norm_sq(detail_component(f, g))
    wave = coefficient_table(f, g, g).energy()
    print(f"gamma={g}: |P f|^2={norm_sq(pg):.6f}  detail {detail:.6f}  wavelet energy {wave:.6f}")

report = axiom_report(standard_generators(p, (-2, 2)) + [f], (-2, 2))
for check in report.checks:
    print(f"{check.name:22s} {'ok' if check.passed else 'FAILED'} ({check.cases} cases)")
