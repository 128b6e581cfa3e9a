"""Pointwise evaluation of the Vladimirov operator on test functions.

    D^alpha f(x) = c_p(alpha) * integral (f(x) - f(y)) |x - y|_p**-(1+alpha) dy

with ``c_p(alpha) = (p**alpha - 1) / (1 - p**(-1 - alpha))`` (see
:func:`gamma_p`).  This is the normalisation for which the wavelets are
eigenfunctions with eigenvalue ``p**(alpha (1 - gamma))``; dividing by the
same factor instead would scale every eigenvalue by ``c_p(alpha)**-2``.

The integral is split into three exact pieces: the cells of ``f`` (distance
to ``x`` is constant on each), the remaining shells around ``x`` inside the
bounding ball, and the geometric tail outside it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .padic import PAdic, rational_valuation
from .schwartz import Point, SchwartzFunction, residue_of
from .wavelets import WaveletIndex, basis_value, basis_wavelet


@dataclass(frozen=True)
class VladimirovParams:
    alpha: float
    p: int

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def gamma_p(p: int, alpha: float) -> float:
    """The normalising factor ``(p**alpha - 1) / (1 - p**(-1 - alpha))``."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return (p**alpha - 1) / (1 - p ** (-1 - alpha))


def eigenvalue(gamma: int, params: VladimirovParams) -> float:
    """``p**(alpha (1 - gamma))``, the eigenvalue on scale-``gamma`` wavelets."""
    return params.p ** (params.alpha * (1 - gamma))


def _valuation(x: Point, p: int) -> int | None:
    if isinstance(x, PAdic):
        if x.exact_zero or x.is_zero_to_precision:
            return None
        return x.valuation
    q = Fraction(x)
    return None if q == 0 else rational_valuation(q, p)


def apply_pointwise(f: SchwartzFunction, params: VladimirovParams, x: Point) -> complex:
    p, alpha, k = f.prime, params.alpha, f.scale
    if params.p != p:
        raise ValueError(f"prime mismatch: {params.p} vs {p}")
    if f.is_zero:
        return 0j
    xc = residue_of(x, p, k)
    fx = f.cells.get(xc, 0j)

    radius = f.bound_exponent
    vx = _valuation(x, p)
    if vx is not None:
        radius = max(radius, -vx)

    # cells of f not containing x: |x - y| = |xc - c| on the whole cell
    cell_mass = float(Fraction(p) ** -k)
    listed = 0j
    for c, val in f.cells.items():
        if c == xc:
            continue
        e = -rational_valuation(xc - c, p)
        listed += val * p ** (-e * (1 + alpha))
    listed *= cell_mass

    # shells |x - y| = p**r for -k < r <= radius, and the tail beyond
    shells = sum((1 - 1 / p) * p ** (-r * alpha) for r in range(1 - k, radius + 1))
    tail = (1 - 1 / p) * p ** (-(radius + 1) * alpha) / (1 - p**-alpha)

    return (fx * (shells + tail) - listed) * gamma_p(p, alpha)


def sample_points(idx: WaveletIndex, count: int, rng: random.Random) -> list[Fraction]:
    """Points inside the support of ``psi_idx`` (first half) and outside it."""
    p, g = idx.prime, idx.gamma
    base = Fraction(p) ** -g * idx.n.value
    width = Fraction(p) ** -g
    inside = count - count // 2
    pts = []
    for _ in range(inside):
        z = sum(rng.randrange(p) * p**i for i in range(6))
        pts.append(base + width * z)
    while len(pts) < count:
        v = rng.randint(-g - 6, -g + 6)
        unit = rng.randrange(1, p) + p * rng.randrange(p**4)
        pts.append(Fraction(p) ** v * unit + base * rng.randrange(2))
    return pts


def eigenvalue_check(idx: WaveletIndex, params: VladimirovParams, sample_count: int = 40,
                     seed: int = 0, points: list[Point] | None = None) -> float:
    """Largest relative deviation of ``D^alpha psi_idx`` from ``lambda * psi_idx``.

    Deviations are divided by the eigenvalue ``lambda = p**(alpha (1 - gamma))``;
    at points where ``psi_idx`` vanishes this is the absolute value of
    ``D^alpha psi_idx`` over ``lambda``.
    """
    psi = basis_wavelet(idx)
    lam = eigenvalue(idx.gamma, params)
    if points is None:
        points = sample_points(idx, sample_count, random.Random(seed))
    worst = 0.0
    for x in points:
        err = abs(apply_pointwise(psi, params, x) - lam * basis_value(idx, x)) / lam
        worst = max(worst, err)
    return worst
