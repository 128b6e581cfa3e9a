"""Seeded invariant suites behind ``padicwave verify``.

Each suite returns a JSON-ready report.  Cases are generated from
``random.Random(seed)`` in a fixed order and aggregated with max/count
reductions, so identical arguments give identical reports.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .monna import ball_image, haar_correspondence, random_finite_expansion, rho
from .mra import axiom_report, indicator_correspondence, standard_generators
from .padic import enumerate_cosets, rational_valuation
from .sampling import random_affine, random_function
from .schwartz import Ball, evaluate, inner_product, norm_sq, unit_ball_indicator
from .vladimirov import VladimirovParams, apply_pointwise, eigenvalue_check, gamma_p
from .wavelets import (
    WaveletIndex,
    admissibility_constant,
    affine_value,
    affine_wavelet,
    basis_affine_params,
    basis_value,
    basis_wavelet,
    classify_affine,
    coefficient_table,
    continuous_transform,
    reconstruct_partial,
    support_window,
)

SUITES = ("lemma", "ortho", "vladimirov", "mra", "monna", "admissibility")


@dataclass
class Check:
    name: str
    tolerance: float
    cases: int = 0
    max_error: float = 0.0
    passed: bool = True
    witness: Any = None
    value: Any = None

    def record(self, error: float, **witness: Any) -> None:
        self.cases += 1
        if error > self.max_error:
            self.max_error = error
        if not error <= self.tolerance and self.passed:
            self.passed = False
            self.witness = witness

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "cases": self.cases, "max_error": self.max_error,
                "tolerance": self.tolerance, "passed": self.passed,
                "witness": _jsonable(self.witness), "value": _jsonable(self.value)}


def _jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return str(obj)


def lemma_sample_points(a: Fraction, b: Fraction, p: int, count: int,
                        rng: random.Random) -> list[Fraction]:
    """Half the points in ``b + a Z_p`` (the support of ``psi^{a,b}``), half anywhere nearby."""
    inside = count - count // 2
    top = p**6
    pts = [b + a * rng.randrange(top) for _ in range(inside)]
    pts += [b + rng.randrange(top) * Fraction(p) ** rng.randint(-8, 8) for _ in range(count // 2)]
    return pts


def check_lemma(p: int, seed: int, cases: int = 1000, samples: int = 200,
                transform_cases: int = 200) -> list[Check]:
    rng = random.Random(seed)
    sound = Check("classification_soundness", 1e-12)
    rep = Check("representation_matches_formula", 1e-12)
    for i in range(cases):
        a, b = random_affine(p, rng)
        cls = classify_affine(a, b, p)
        factor = cls.factor
        ap = affine_wavelet(a, b, p)
        for x in lemma_sample_points(a, b, p, samples, rng):
            direct = affine_value(a, b, x, p)
            sound.record(abs(direct - factor * basis_value(cls.index, x)), case=i, a=a, b=b, x=x)
            rep.record(abs(evaluate(ap, x) - direct), case=i, a=a, b=b, x=x)

    roundtrip = Check("roundtrip", 0.0)
    for g in range(-4, 5):
        for n in enumerate_cosets(p, 20):
            for j in range(1, p):
                idx = WaveletIndex(g, n, j)
                got = classify_affine(*basis_affine_params(idx), p)
                ok = got.index == idx and got.phase.numerator == 0
                roundtrip.record(0.0 if ok else 1.0, index=idx, got=got.index, phase=got.phase)

    transform = Check("transform_consistency", 1e-12)
    for i in range(transform_cases):
        f = random_function(p, rng)
        a, b = random_affine(p, rng, vrange=3)
        d = continuous_transform(f, a, b, method="direct")
        c = continuous_transform(f, a, b, method="classify")
        transform.record(abs(d - c), case=i, a=a, b=b)
    return [sound, rep, roundtrip, transform]


def check_ortho(p: int, seed: int, n_cosets: int = 10, gammas: tuple[int, int] = (-2, 2),
                parseval_depth: int = 8, recon_cases: int = 20) -> list[Check]:
    gram = Check("gram_identity", 1e-12)
    basis = [basis_wavelet(WaveletIndex(g, n, j))
             for g in range(gammas[0], gammas[1] + 1)
             for n in enumerate_cosets(p, n_cosets) for j in range(1, p)]
    for i, u in enumerate(basis):
        for k in range(i, len(basis)):
            expected = 1.0 if i == k else 0.0
            gram.record(abs(inner_product(u, basis[k]) - expected), row=i, col=k)

    parseval = Check("parseval_omega", 1e-12)
    omega = unit_ball_indicator(p)
    table = coefficient_table(omega, 1, parseval_depth)
    parseval.value = table.energy()
    parseval.record(abs(parseval.value - (1 - float(Fraction(p) ** -parseval_depth))),
                    depth=parseval_depth)

    recon = Check("reconstruction_mean_zero", 1e-12)
    rng = random.Random(seed)
    for i in range(recon_cases):
        f = random_function(p, rng, mean_zero=True)
        lo, hi = support_window(f)
        r = reconstruct_partial(coefficient_table(f, lo, hi), f)
        err = max(abs(r.residual_norm_sq), norm_sq(f - r.approximation))
        recon.record(err, case=i)
    return [gram, parseval, recon]


def check_vladimirov(p: int, seed: int, alphas=(0.5, 1.0, 2.0), n_cosets: int = 5,
                     samples: int = 20) -> list[Check]:
    eig = Check("eigenrelation", 1e-10)
    for alpha in alphas:
        params = VladimirovParams(alpha, p)
        for g in range(-3, 4):
            for n in enumerate_cosets(p, n_cosets):
                for j in range(1, p):
                    idx = WaveletIndex(g, n, j)
                    eig.record(eigenvalue_check(idx, params, samples, seed),
                               index=idx, alpha=alpha)

    decay = Check("omega_outside_support", 1e-12)
    inside = Check("omega_inside_support", 1e-12)
    omega = unit_ball_indicator(p)
    for alpha in alphas:
        params = VladimirovParams(alpha, p)
        c = gamma_p(p, alpha)
        for r in range(1, 6):
            x = Fraction(p) ** -r
            expected = -c * float(Fraction(p) ** r) ** -(1 + alpha)
            decay.record(abs(apply_pointwise(omega, params, x) - expected), alpha=alpha, r=r)
        expected = c * (1 - 1 / p) * p**-alpha / (1 - p**-alpha)
        inside.record(abs(apply_pointwise(omega, params, 1) - expected), alpha=alpha)
    return [eig, decay, inside]


def check_mra(p: int, seed: int, random_count: int = 200,
              gamma_range: tuple[int, int] = (-3, 3)) -> list[Check]:
    rng = random.Random(seed)
    out = []
    for label, funcs in (("standard", standard_generators(p, gamma_range)),
                         ("random", [random_function(p, rng) for _ in range(random_count)])):
        report = axiom_report(funcs, gamma_range)
        for ax in report.checks:
            ch = Check(f"{label}:{ax.name}", 0.0 if ax.name in ("density", "nesting", "scaling",
                                                               "translation") else 1e-12)
            ch.cases, ch.max_error, ch.passed, ch.witness = ax.cases, ax.max_error, ax.passed, ax.witness
            out.append(ch)
    corr = Check("indicator_correspondence", 0.0)
    for g in range(-3, 4):
        for n in enumerate_cosets(p, 10):
            corr.record(indicator_correspondence(g, n, 100, seed), gamma=g, n=n)
    out.append(corr)
    return out


def check_monna(p: int, seed: int, balls: int = 500, pairs: int = 1000,
                haar_samples: int = 500) -> list[Check]:
    rng = random.Random(seed)
    measure = Check("measure_conservation", 0.0)
    for i in range(balls):
        k = rng.randint(-5, 5)
        centre = rng.randrange(p**8) * Fraction(p) ** (k - 8)
        ball = Ball(p, k, centre)
        img = ball_image(ball)
        lo, hi = ball_image_bounds(ball)
        ok = img.length == ball.measure and img.left == lo and img.right == hi
        measure.record(0.0 if ok else 1.0, ball=ball)

    holder = Check("holder", 0.0)
    for _ in range(pairs):
        x = random_finite_expansion(p, rng)
        y = random_finite_expansion(p, rng)
        lhs = abs(rho(x, p) - rho(y, p))
        rhs = Fraction(0) if x == y else _padic_distance(x - y, p)
        holder.record(0.0 if lhs <= rhs else float(lhs - rhs), x=x, y=y)

    out = [measure, holder]
    if p == 2:
        haar = Check("haar_correspondence", 1e-12)
        for g in range(-4, 5):
            for n in enumerate_cosets(2, 10):
                haar.record(haar_correspondence(g, n, haar_samples, seed), gamma=g, n=n)
        out.append(haar)
    return out


def ball_image_bounds(ball: Ball) -> tuple[Fraction, Fraction]:
    """Independent bounds for ``rho(ball)``: the smallest and the supremum of the image.

    The fixed digits give the left end; letting every free digit be ``p - 1``
    adds ``sum_{i >= k} (p-1) p**(-i-1) = p**-k``.
    """
    return rho(ball.center, ball.prime), rho(ball.center, ball.prime) + Fraction(ball.prime) ** -ball.scale


def _padic_distance(d: Fraction, p: int) -> Fraction:
    return Fraction(p) ** -rational_valuation(d, p)


def check_admissibility(p: int, seed: int, depth: int = 2) -> list[Check]:
    ch = Check("admissibility_constant", 1e-12)
    value = admissibility_constant(p, depth)
    ch.record(abs(value - 1 / p), value=value, depth=depth)
    ch.value = value
    return [ch]


_RUNNERS: dict[str, Callable[[int, int], list[Check]]] = {
    "lemma": check_lemma,
    "ortho": check_ortho,
    "vladimirov": check_vladimirov,
    "mra": check_mra,
    "monna": check_monna,
    "admissibility": check_admissibility,
}


def run_suite(name: str, p: int, seed: int = 0) -> dict[str, Any]:
    names = SUITES if name == "all" else (name,)
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {name!r}")
    suites = []
    for n in names:
        checks = _RUNNERS[n](p, seed)
        suites.append({"suite": n, "passed": all(c.passed for c in checks),
                       "checks": [c.to_dict() for c in checks]})
    return {"p": p, "seed": seed, "passed": all(s["passed"] for s in suites), "suites": suites}
