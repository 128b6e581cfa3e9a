"""Exact p-adic wavelet analysis."""
from .padic import (
    CosetRep,
    PAdic,
    PAdicError,
    PrecisionError,
    UnitPhase,
    character,
    coset_rep,
    digit_at,
    format_literal,
    fractional_part,
    norm_and_valuation,
    parse_padic,
    unit_leading_inverse,
)
from .schwartz import (
    Ball,
    SchwartzFunction,
    affine_act,
    evaluate,
    indicator,
    inner_product,
    integral,
    norm_sq,
    refine_to_scale,
    unit_ball_indicator,
)
from .wavelets import (
    Classification,
    CoefficientTable,
    WaveletIndex,
    admissibility_constant,
    affine_wavelet,
    basis_wavelet,
    classify_affine,
    coefficient_table,
    continuous_transform,
    discrete_coefficient,
    mother_wavelet,
    reconstruct_partial,
)
from .vladimirov import VladimirovParams, apply_pointwise, eigenvalue, gamma_p
from .monna import ball_image, rho, rho_inverse
from .mra import axiom_report, membership_scale, project
