"""The Monna map and the Haar wavelets it produces for p = 2.

``rho`` reverses digits around the point: ``sum x_i p**i -> sum x_i p**(-i-1)``.
It is applied only to finite expansions, where it is a bijection onto the
nonnegative rationals with power-of-p denominators.  Intervals on the real
side are half-open ``[left, left + length)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .padic import CosetRep, PAdic, PAdicError, is_p_power, valuation_of
from .schwartz import Ball, Point
from .wavelets import WaveletIndex, basis_value

DyadicReal = Fraction


@dataclass(frozen=True)
class RealInterval:
    left: Fraction
    length: Fraction

    @property
    def right(self) -> Fraction:
        return self.left + self.length

    def contains(self, t: Fraction) -> bool:
        return self.left <= t < self.right

    def __str__(self) -> str:
        return f"[{self.left}, {self.right})"


def _finite_value(x: Point, p: int | None) -> tuple[Fraction, int]:
    if isinstance(x, PAdic):
        if not x.is_finite_expansion:
            raise PAdicError(f"{x!r} is not a finite expansion")
        return x.rational, x.prime
    if p is None:
        raise PAdicError("prime required for rational arguments")
    q = Fraction(x)
    if q < 0 or not is_p_power(q.denominator, p):
        raise PAdicError(f"{q} is not a finite {p}-adic expansion")
    return q, p


def rho(x: Point, p: int | None = None) -> DyadicReal:
    """Digit reversal of a finite expansion, as an exact rational."""
    q, p = _finite_value(x, p)
    if q == 0:
        return Fraction(0)
    s = valuation_of(q.denominator, p)
    m = q.numerator          # q = m / p**s, digit i of m sits at position i - s
    rev, length = 0, 0
    while m:
        m, d = divmod(m, p)
        rev = rev * p + d
        length += 1
    # digit i lands at p**(s - 1 - i) = p**(length - 1 - i) * p**(s - length)
    return rev * Fraction(p) ** (s - length)


def rho_inverse(r: DyadicReal, p: int) -> PAdic:
    """The finite expansion mapped to ``r`` by :func:`rho`."""
    r = Fraction(r)
    if r < 0 or not is_p_power(r.denominator, p):
        raise PAdicError(f"{r} has no finite {p}-adic preimage")
    if r == 0:
        return PAdic.zero(p)
    s = valuation_of(r.denominator, p)
    m = r.numerator          # r = sum m_k p**(k - s), preimage digit at s - 1 - k
    out = Fraction(0)
    k = 0
    while m:
        m, d = divmod(m, p)
        if d:
            out += d * Fraction(p) ** (s - 1 - k)
        k += 1
    return PAdic.from_rational(out, p)


def ball_normal_form(ball: Ball) -> tuple[int, CosetRep, int]:
    """``(m, n, k)`` with ``ball = p**m n + p**k Z_p`` and ``n`` in ``Q_p/Z_p``.

    Taking ``m = k`` always works because the canonical centre has digits only
    below position ``k``.
    """
    p, k = ball.prime, ball.scale
    return k, CosetRep(p, ball.center * Fraction(p) ** -k), k


def ball_image(ball: Ball) -> RealInterval:
    """``rho(p**m n + p**k Z_p) = p**-m rho(n) + [0, p**-k)``."""
    p = ball.prime
    m, n, k = ball_normal_form(ball)
    return RealInterval(Fraction(p) ** -m * rho(n.value, p), Fraction(p) ** -k)


def haar_eval(gamma: int, n: int, t: Fraction) -> float:
    """``2**(-gamma/2) Psi(2**-gamma t - n)`` with half-open Haar pieces."""
    s = Fraction(t) * Fraction(2) ** -gamma - n
    if 0 <= s < Fraction(1, 2):
        sign = 1
    elif Fraction(1, 2) <= s < 1:
        sign = -1
    else:
        return 0.0
    return sign * float(Fraction(2) ** -gamma) ** 0.5


def random_finite_expansion(p: int, rng: random.Random, low: int = -8, high: int = 8) -> Fraction:
    """A nonnegative rational with digits in ``[low, high)``."""
    return rng.randrange(p ** (high - low)) * Fraction(p) ** low


def _support_samples(gamma: int, n: CosetRep, count: int, rng: random.Random) -> list[Fraction]:
    p = n.prime
    base = Fraction(p) ** -gamma * n.value
    width = Fraction(p) ** -gamma
    half = count - count // 2
    pts = [base + width * rng.randrange(p**8) for _ in range(half)]
    pts += [random_finite_expansion(p, rng) for _ in range(count // 2)]
    return pts


def haar_correspondence(gamma: int, n: CosetRep, samples: int = 500, seed: int = 0) -> float:
    """Largest ``|Psi_{gamma, rho(n)}(rho(x)) - psi_{gamma n 1}(x)|`` over samples (p = 2)."""
    if n.prime != 2:
        raise ValueError("the Haar correspondence holds for p = 2")
    rng = random.Random(seed)
    idx = WaveletIndex(gamma, n, 1)
    shift = rho(n.value, 2)
    worst = 0.0
    for x in _support_samples(gamma, n, samples, rng):
        worst = max(worst, abs(haar_eval(gamma, shift, rho(x, 2)) - basis_value(idx, x)))
    return worst
