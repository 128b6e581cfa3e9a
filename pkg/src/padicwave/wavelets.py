"""The discrete p-adic wavelet basis and the continuous transform it absorbs.

The basis functions are

    psi_{gamma n j}(x) = p**(-gamma/2) chi(p**(gamma-1) j (x - p**-gamma n)) Omega(|p**gamma x - n|_p)

and every translate/dilate ``psi^{a,b}`` of the mother wavelet
``psi(x) = chi(x/p) Omega(|x|_p)`` is one of them times a p-th root of unity
(:func:`classify_affine`).  Consequently the continuous transform is a
relabelled table of discrete coefficients.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple

from .padic import (
    CosetRep,
    PAdic,
    PAdicError,
    UnitPhase,
    as_padic,
    check_prime,
    coset_rep,
    digit_at,
    rational_residue,
    rational_valuation,
    root_of_unity,
    unit_leading_inverse,
)
from .schwartz import (
    Point,
    SchwartzFunction,
    affine_act,
    inner_product,
    integral,
    norm_sq,
    refine_to_scale,
)


class WindowError(ValueError):
    """A coefficient window misses scales where the function has energy."""


@dataclass(frozen=True, order=True)
class WaveletIndex:
    """Basis label ``(gamma, n, j)``; ``n`` lives in ``Q_p/Z_p``."""

    gamma: int
    n: CosetRep
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.j < self.prime:
            raise PAdicError(f"j={self.j} must lie in [1, {self.prime - 1}]")

    @classmethod
    def of(cls, gamma: int, n, j: int, p: int) -> WaveletIndex:
        if not isinstance(n, CosetRep):
            n = CosetRep(p, Fraction(n))
        return cls(gamma, n, j)

    @property
    def prime(self) -> int:
        return self.n.prime

    def __str__(self) -> str:
        return f"({self.gamma}, {self.n}, {self.j})"


@dataclass(frozen=True)
class Classification:
    """``psi^{a,b} = exp(2 pi i phase) * psi_index``."""

    index: WaveletIndex
    phase: UnitPhase

    @property
    def factor(self) -> complex:
        return self.phase.to_complex()


# -- pointwise formulas ---------------------------------------------------------

def _frac(x: Point, p: int) -> Fraction:
    if isinstance(x, PAdic):
        return x.residue(0)
    return rational_residue(x, p, 0)


def _chi(x: Point, p: int) -> complex:
    q = _frac(x, p)
    return root_of_unity(q.numerator, q.denominator)


def _frac_index(num: int, den: int, p: int) -> tuple[int, int]:
    """``{num/den}_p`` as ``(r, t)`` meaning ``r / p**t`` with ``0 <= r < p**t``."""
    t = 0
    while den % p == 0:
        den //= p
        t += 1
    if t == 0:
        return 0, 0
    m = p**t
    return num * pow(den, -1, m) % m, t


def _mother_int(num: int, den: int, p: int) -> complex:
    """``psi(num/den)`` in integer arithmetic."""
    g = math.gcd(num, den)
    num, den = num // g, den // g
    r, _ = _frac_index(num, den, p)
    if r:
        return 0j
    # num/den in Z_p, so {x/p} = (x mod p)/p
    return root_of_unity(num * pow(den, -1, p), p)


def _ratio(x: Rational) -> tuple[int, int]:
    if isinstance(x, int):
        return x, 1
    return x.numerator, x.denominator


@functools.lru_cache(maxsize=None)
def amplitude(p: int, g: int) -> float:
    """``p**(-g/2)``."""
    return float(Fraction(p) ** -g) ** 0.5


def basis_value(idx: WaveletIndex, x: Point) -> complex:
    """Closed-form value of ``psi_{gamma n j}(x)``."""
    p, g = idx.prime, idx.gamma
    amp = amplitude(p, g)
    if isinstance(x, PAdic):
        y = x * Fraction(p) ** g - idx.n.value
        if _frac(y, p) != 0:
            return 0j
        return amp * _chi(y * Fraction(idx.j, p), p)
    xn, xd = _ratio(x)
    nn, nd = _ratio(idx.n.value)
    if g >= 0:
        xn *= p**g
    else:
        xd *= p**-g
    return amp * _mother_int(idx.j * (xn * nd - nn * xd), xd * nd, p)


def mother_value(p: int, x: Point) -> complex:
    """``psi(x) = chi(x/p) Omega(|x|_p)``."""
    if isinstance(x, PAdic):
        if _frac(x, p) != 0:
            return 0j
        return _chi(x * Fraction(1, p), p)
    return _mother_int(*_ratio(x), p)


def affine_value(a: Point, b: Point, x: Point, p: int | None = None) -> complex:
    """``psi^{a,b}(x) = |a|_p**-0.5 psi((x - b)/a)`` evaluated directly."""
    if p is not None and not any(isinstance(t, PAdic) for t in (a, b, x)):
        if a == 0:
            raise PAdicError("dilation by zero")
        scale = amplitude(p, -rational_valuation(a, p))
        an, ad = _ratio(a)
        bn, bd = _ratio(b)
        xn, xd = _ratio(x)
        # (x - b)/a = (xn bd - bn xd) ad / (xd bd an)
        return scale * _mother_int((xn * bd - bn * xd) * ad, xd * bd * an, p)
    if p is None:
        p = next((t.prime for t in (x, a, b) if isinstance(t, PAdic)), None)
    if p is None:
        raise PAdicError("need a prime or a PAdic argument")
    a = as_padic(a, p)
    b = as_padic(b, p)
    x = as_padic(x, p)
    if a.exact_zero:
        raise PAdicError("dilation by zero")
    scale = float(Fraction(p) ** a.known_valuation()) ** 0.5
    if a.rational is not None and b.rational is not None and x.rational is not None:
        return scale * mother_value(p, (x.rational - b.rational) / a.rational)
    return scale * mother_value(p, (x - b) / a)


# -- representations ------------------------------------------------------------

def basis_wavelet(idx: WaveletIndex) -> SchwartzFunction:
    """``psi_{gamma n j}`` as p cells of scale ``1 - gamma``."""
    p, g = idx.prime, idx.gamma
    amp = float(Fraction(p) ** -g) ** 0.5
    shift = Fraction(p) ** -g
    cells = {shift * (idx.n.value + m): amp * root_of_unity(idx.j * m, p) for m in range(p)}
    return SchwartzFunction(p, 1 - g, cells)


def mother_wavelet(p: int) -> SchwartzFunction:
    check_prime(p)
    return basis_wavelet(WaveletIndex(0, CosetRep(p), 1))


def affine_wavelet(a: Point, b: Point, p: int | None = None) -> SchwartzFunction:
    """``psi^{a,b}`` built by transporting the cells of the mother wavelet."""
    if p is None:
        if not isinstance(a, PAdic):
            raise PAdicError("prime required for rational parameters")
        p = a.prime
    return affine_act(a, b, mother_wavelet(p))


def classify_affine(a: Point, b: Point, p: int | None = None) -> Classification:
    """Basis label and root-of-unity factor of ``psi^{a,b}``.

    With ``y = |a|_p b`` the label is ``(log_p |a|_p, {y}, (a|a|_p)^-1 mod p)``
    and the factor is ``chi(-j y_0 / p)`` where ``y_0`` is the digit of ``y``
    at position 0.
    """
    if p is None:
        if not isinstance(a, PAdic):
            raise PAdicError("prime required for rational parameters")
        p = a.prime
    a = as_padic(a, p)
    b = as_padic(b, p)
    if a.exact_zero:
        raise PAdicError("dilation by zero")
    v = a.known_valuation()
    y = b * PAdic.from_rational(Fraction(p) ** -v, p)
    j = unit_leading_inverse(a)
    d0 = digit_at(y, 0)
    index = WaveletIndex(-v, coset_rep(y), j)
    return Classification(index, UnitPhase.of(Fraction(-j * d0, p)))


def basis_affine_params(idx: WaveletIndex) -> tuple[Fraction, Fraction]:
    """``(a, b) = (p**-gamma / j, p**-gamma n)`` generating ``psi_{gamma n j}``."""
    p = idx.prime
    scale = Fraction(p) ** -idx.gamma
    return scale / idx.j, scale * idx.n.value


# -- transforms -----------------------------------------------------------------

def discrete_coefficient(f: SchwartzFunction, idx: WaveletIndex) -> complex:
    """``<psi_{gamma n j}, f>``."""
    return inner_product(basis_wavelet(idx), f)


def continuous_transform(f: SchwartzFunction, a: Point, b: Point,
                         method: str = "classify") -> complex:
    """``(Tf)(a, b) = <psi^{a,b}, f>``.

    ``method="classify"`` reads the value off the discrete coefficient of the
    classified index (times the conjugate phase); ``method="direct"``
    integrates against the transported wavelet.
    """
    p = f.prime
    if method == "direct":
        return inner_product(affine_wavelet(a, b, p), f)
    if method != "classify":
        raise ValueError(f"unknown method {method!r}")
    cls = classify_affine(a, b, p)
    return cls.phase.conjugate().to_complex() * discrete_coefficient(f, cls.index)


def admissibility_constant(p: int, depth: int = 2) -> float:
    """``C_psi = ||psi||**-2 * integral |<psi, psi^{a,b}>|**2 da db / |a|**2``.

    The ``(a, b)`` plane is cut into cells ``a in p**v (u + p Z_p)``,
    ``b in c + p**(v+1) Z_p`` on which the classification is constant, for
    ``|v| <= depth``.  Each cell contributes ``p**-2`` times the integrand at
    a representative.  Cells with ``|b| > max(1, |a|_p)`` are skipped because
    ``psi^{a,b}`` and ``psi`` have disjoint supports there; valuations beyond
    ``depth`` classify to ``gamma != 0`` and are orthogonal to ``psi``.
    """
    check_prime(p)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    psi = mother_wavelet(p)
    cell_weight = float(Fraction(p) ** -2)
    total = 0.0
    for v in range(-depth, depth + 1):
        if v >= 0:
            b_reps = [Fraction(c) for c in range(p ** (v + 1))]
        else:
            b_reps = [d * Fraction(p) ** v for d in range(p)]
        for u in range(1, p):
            a = u * Fraction(p) ** v
            for b in b_reps:
                overlap = inner_product(psi, affine_wavelet(a, b, p))
                total += abs(overlap) ** 2 * cell_weight
    return total / norm_sq(psi)


# -- coefficient tables and reconstruction ----------------------------------------

def support_window(f: SchwartzFunction) -> tuple[int, int]:
    """Scales ``[1 - k, R]`` that can carry the mean-zero part of ``f``.

    ``k`` is the resolution scale and ``p**-R Z_p`` the bounding ball.  Above
    ``R`` the only nonzero coefficients sit at ``n = 0`` and equal
    ``p**(-gamma/2) * integral(f)``.
    """
    if f.is_zero:
        return (1 - f.scale, -f.scale)
    return (1 - f.scale, f.bound_exponent)


def localized_indices(f: SchwartzFunction, gamma_min: int, gamma_max: int) -> list[WaveletIndex]:
    """Indices whose support meets ``supp f``, in canonical order."""
    p = f.prime
    lo = max(gamma_min, 1 - f.scale)
    out = []
    for g in range(lo, gamma_max + 1):
        shift = Fraction(p) ** g
        cosets = sorted({rational_residue(c * shift, p, 0) for c in f.cells})
        for n in cosets:
            rep = CosetRep(p, n)
            out.extend(WaveletIndex(g, rep, j) for j in range(1, p))
    return out


@dataclass(frozen=True)
class CoefficientTable:
    prime: int
    gamma_min: int
    gamma_max: int
    entries: tuple[tuple[WaveletIndex, complex], ...]

    def energy(self) -> float:
        return sum(abs(c) ** 2 for _, c in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def coefficient_table(f: SchwartzFunction, gamma_min: int, gamma_max: int) -> CoefficientTable:
    """All support-localized coefficients with ``gamma_min <= gamma <= gamma_max``.

    An empty window (``gamma_min > gamma_max``) gives an empty table.
    """
    entries = tuple((idx, discrete_coefficient(f, idx))
                    for idx in localized_indices(f, gamma_min, gamma_max))
    return CoefficientTable(f.prime, gamma_min, gamma_max, entries)


def tail_energy(f: SchwartzFunction, gamma_max: int) -> float:
    """Coefficient energy of scales above ``gamma_max`` (needs ``gamma_max >= R``)."""
    if f.is_zero:
        return 0.0
    if gamma_max < f.bound_exponent:
        raise WindowError(f"tail formula needs gamma_max >= {f.bound_exponent}")
    return abs(integral(f)) ** 2 * float(Fraction(f.prime) ** -gamma_max)


class Reconstruction(NamedTuple):
    approximation: SchwartzFunction
    residual_norm_sq: float
    tail_norm_sq: float


def synthesize(table: CoefficientTable) -> SchwartzFunction:
    """``sum(c * psi_idx)`` over the table, accumulated coarse to fine."""
    p = table.prime
    if not table.entries:
        return SchwartzFunction(p, 1 - table.gamma_max)
    by_scale: dict[int, list[tuple[WaveletIndex, complex]]] = {}
    for idx, c in table.entries:
        by_scale.setdefault(idx.gamma, []).append((idx, c))
    waves = {g: [(basis_wavelet(idx), c) for idx, c in items] for g, items in by_scale.items()}
    # work with integer keys centre * p**e; e is large enough for every
    # centre and for the coarsest cell width p**(1 - gamma_max)
    e = max(table.gamma_max - 1, 0)
    for items in waves.values():
        for w, _ in items:
            for centre in w.cells:
                e = max(e, rational_valuation(centre.denominator, p))
    acc: dict[int, complex] = {}
    k = 1 - table.gamma_max
    for g in range(table.gamma_max, table.gamma_min - 1, -1):
        new_k = 1 - g
        if new_k != k and acc:
            step = p ** (k + e)
            acc = {c + m * step: v for c, v in acc.items() for m in range(p ** (new_k - k))}
        k = new_k
        for w, c in waves.get(g, ()):
            for centre, val in w.cells.items():
                key = centre.numerator * p ** e // centre.denominator
                acc[key] = acc.get(key, 0) + c * val
    scale_den = p**e
    cells = {Fraction(key, scale_den): acc[key] for key in sorted(acc)}
    return SchwartzFunction._trusted(p, k, cells)


def reconstruct_partial(table: CoefficientTable, f: SchwartzFunction) -> Reconstruction:
    """Partial inverse transform of ``f`` from a coefficient window.

    ``residual_norm_sq`` is ``||f||**2`` minus the window energy.  When the
    window reaches past the bounding scale, ``tail_norm_sq`` is the analytic
    energy ``|integral f|**2 p**-gamma_max`` of the omitted coarse scales.
    Raises :class:`WindowError` if the window skips scales in
    :func:`support_window`.
    """
    if table.prime != f.prime:
        raise PAdicError("prime mismatch")
    lo, hi = support_window(f)
    if not f.is_zero and (table.gamma_min > lo or table.gamma_max < hi):
        raise WindowError(
            f"window [{table.gamma_min}, {table.gamma_max}] does not cover the "
            f"support-localized scales [{lo}, {hi}]")
    approx = synthesize(table)
    residual = norm_sq(f) - table.energy()
    return Reconstruction(approx, residual, tail_energy(f, table.gamma_max))
