"""The multiresolution approximation ``V_gamma = D_gamma(Q_p)``.

``V_gamma`` holds the test functions that are constant on balls of diameter
``p**gamma`` (scale ``-gamma``).  Projections average over those balls; the
detail spaces ``W_gamma = V_{gamma-1} minus V_gamma`` are spanned by the
scale-``gamma`` wavelets.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .monna import RealInterval, random_finite_expansion, rho
from .padic import CosetRep, enumerate_cosets
from .schwartz import (
    Ball,
    SchwartzFunction,
    affine_act,
    coarsest,
    evaluate,
    indicator,
    inner_product,
    integral,
    linear_combine,
    measure_float,
    norm_sq,
    refine_to_scale,
)


def generator(p: int, gamma: int, n: CosetRep | Fraction = Fraction(0)) -> SchwartzFunction:
    """Normalised basis vector ``p**(-gamma/2) Omega(|p**gamma x - n|_p)`` of ``V_gamma``."""
    nv = n.value if isinstance(n, CosetRep) else Fraction(n)
    ball = Ball(p, -gamma, Fraction(p) ** -gamma * nv)
    return indicator(ball, float(Fraction(p) ** -gamma) ** 0.5)


def membership_scale(f: SchwartzFunction) -> int | None:
    """Largest ``gamma`` with ``f`` in ``V_gamma``; ``None`` for the zero function."""
    if f.is_zero:
        return None
    return -coarsest(f).scale


def project(f: SchwartzFunction, gamma: int) -> SchwartzFunction:
    """Orthogonal projection onto ``V_gamma``: average over scale ``-gamma`` balls."""
    s = -gamma
    if s >= f.scale:
        return f
    p = f.prime
    step = Fraction(p) ** s
    groups: dict[Fraction, list[complex]] = {}
    for c, v in f.cells.items():
        groups.setdefault(c % step, []).append(v)
    mass = measure_float(p, f.scale)
    inv_parent = measure_float(p, -s)
    cells = {c: sum(vs, 0j) * mass * inv_parent for c, vs in groups.items()}
    return SchwartzFunction(p, s, cells)


def detail_component(f: SchwartzFunction, gamma: int) -> SchwartzFunction:
    """``P_{gamma-1} f - P_gamma f``, the component of ``f`` in ``W_gamma``."""
    return linear_combine(1, project(f, gamma - 1), -1, project(f, gamma))


def indicator_correspondence(gamma: int, n: CosetRep, samples: int = 200, seed: int = 0) -> float:
    """Largest ``|Omega(|p**gamma x - n|_p) - 1_[0, p**gamma)(rho(x) - p**gamma rho(n))|``."""
    p = n.prime
    rng = random.Random(seed)
    ball = Ball(p, -gamma, Fraction(p) ** -gamma * n.value)
    omega = indicator(ball)
    window = RealInterval(Fraction(0), Fraction(p) ** gamma)
    shift = Fraction(p) ** gamma * rho(n.value, p)
    width = Fraction(p) ** -gamma
    pts = [ball.center + width * rng.randrange(p**6) for _ in range(samples - samples // 2)]
    pts += [random_finite_expansion(p, rng) for _ in range(samples // 2)]
    worst = 0.0
    for x in pts:
        real_side = 1.0 if window.contains(rho(x, p) - shift) else 0.0
        worst = max(worst, abs(evaluate(omega, x) - real_side))
    return worst


# -- axiom verification -----------------------------------------------------------

@dataclass
class AxiomCheck:
    name: str
    passed: bool = True
    cases: int = 0
    max_error: float = 0.0
    witness: dict[str, Any] | None = None

    def record(self, ok: bool, error: float = 0.0, **witness: Any) -> None:
        self.cases += 1
        self.max_error = max(self.max_error, error)
        if not ok and self.passed:
            self.passed = False
            self.witness = witness

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "max_error": self.max_error, "witness": self.witness}


@dataclass
class MraReport:
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _describe(f: SchwartzFunction) -> dict[str, Any]:
    return {"p": f.prime, "scale": f.scale,
            "cells": [[str(c), [v.real, v.imag]] for c, v in f.cells.items()]}


def axiom_report(test_functions: Sequence[SchwartzFunction], gamma_range: tuple[int, int],
                 n_cosets: int = 8, tol: float = 1e-12) -> MraReport:
    """Check the MRA axioms on finite data.

    Density and trivial intersection are checked through exact surrogates:
    ``project(f, gamma) == f`` once ``gamma <= membership_scale(f)``, and
    ``project(f, gamma)`` is the single cell ``integral(f) p**-gamma`` on
    ``p**-gamma Z_p`` once the ball contains the support.
    """
    if not test_functions:
        raise ValueError("no test functions")
    lo, hi = gamma_range
    nesting = AxiomCheck("nesting")
    scaling = AxiomCheck("scaling")
    translation = AxiomCheck("translation")
    generator_check = AxiomCheck("orthonormal_generator")
    density = AxiomCheck("density")
    intersection = AxiomCheck("trivial_intersection")

    p = test_functions[0].prime
    cosets = enumerate_cosets(p, n_cosets)
    phis = [generator(p, 0, n) for n in cosets]
    for i, a in enumerate(phis):
        for k, b in enumerate(phis):
            ip = inner_product(a, b)
            expected = 1.0 if i == k else 0.0
            generator_check.record(ip == expected, abs(ip - expected),
                                   n=str(cosets[i]), n_prime=str(cosets[k]), value=str(ip))

    for f in test_functions:
        if f.prime != p:
            raise ValueError("all test functions must share a prime")
        if f.is_zero:
            continue
        ms = membership_scale(f)
        nesting.record(membership_scale(refine_to_scale(f, f.scale + 1)) == ms,
                       function=_describe(f), scale=f.scale + 1)
        dilated = affine_act(p, 0, f)
        for g in range(lo, hi + 1):
            pg = project(f, g)
            if not pg.is_zero:
                nesting.record(membership_scale(pg) >= g, function=_describe(f), gamma=g)
            scaling.record((ms >= g) == (membership_scale(dilated) >= g - 1),
                           function=_describe(f), gamma=g)
            if g <= ms:
                density.record(pg == f, function=_describe(f), gamma=g)
            if g >= f.bound_exponent and -g < f.scale:
                expected = SchwartzFunction(p, -g, {0: integral(f) * measure_float(p, g)})
                err = abs(norm_sq(pg) - abs(integral(f)) ** 2 * measure_float(p, g))
                intersection.record(pg == expected and err <= tol * max(1.0, norm_sq(f)), err,
                                    function=_describe(f), gamma=g)
        for n in cosets:
            shifted = affine_act(1, n.value, f)
            translation.record((ms >= 0) == (membership_scale(shifted) >= 0),
                               function=_describe(f), n=str(n))
        # V_0 is spanned by the translates of Omega
        p0 = refine_to_scale(project(f, 0), 0)
        recon = SchwartzFunction(p, 0)
        for c in p0.cells:
            phi = generator(p, 0, c)
            recon = linear_combine(1, recon, inner_product(phi, f), phi)
        err = norm_sq(linear_combine(1, p0, -1, recon)) ** 0.5
        generator_check.record(err <= tol, err, function=_describe(f))

    return MraReport([nesting, scaling, translation, generator_check, density, intersection])


def standard_generators(p: int, gamma_range: tuple[int, int], n_cosets: int = 4) -> list[SchwartzFunction]:
    """``Omega`` with its dilates and coset translates over the scale range."""
    lo, hi = gamma_range
    return [generator(p, g, n) for g in range(lo, hi + 1) for n in enumerate_cosets(p, n_cosets)]
