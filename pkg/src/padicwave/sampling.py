"""Seeded generators for randomized checks.

Affine parameters follow one recipe everywhere: a valuation drawn uniformly
from ``[-6, 6]`` followed by uniformly drawn digits (the leading digit of
``a`` nonzero).  All values are exact finite expansions.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .padic import CosetRep, coset_from_index
from .schwartz import SchwartzFunction


def random_digits_value(p: int, rng: random.Random, valuation: int, count: int,
                        unit: bool = False) -> Fraction:
    digits = [rng.randrange(p) for _ in range(count)]
    if unit:
        digits[0] = rng.randrange(1, p)
    return sum((d * Fraction(p) ** (valuation + i) for i, d in enumerate(digits)), Fraction(0))


def random_affine(p: int, rng: random.Random, vrange: int = 6,
                  digits: int = 8) -> tuple[Fraction, Fraction]:
    """``(a, b)`` with ``|a|_p`` in ``[p**-vrange, p**vrange]``."""
    a = random_digits_value(p, rng, rng.randint(-vrange, vrange), digits, unit=True)
    b = random_digits_value(p, rng, rng.randint(-vrange, vrange), digits)
    return a, b


def random_coset(p: int, rng: random.Random, depth: int = 4) -> CosetRep:
    return coset_from_index(rng.randrange(p**depth), p)


def random_complex(rng: random.Random) -> complex:
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def random_function(p: int, rng: random.Random, scale: tuple[int, int] = (-1, 2),
                    span: int = 2, max_cells: int = 24, mean_zero: bool = False) -> SchwartzFunction:
    """A random test function at a random scale.

    The support sits inside ``p**-R Z_p`` with ``R = span - k`` levels above
    the resolution scale ``k``.  With ``mean_zero`` the last cell absorbs the
    integral so that ``integral(f) == 0`` up to rounding.
    """
    k = rng.randint(*scale)
    levels = rng.randint(1, span)
    total = p**levels
    chosen = sorted(rng.sample(range(total), min(total, rng.randint(2, max_cells))))
    low = Fraction(p) ** (k - levels)
    cells = {low * m: random_complex(rng) for m in chosen}
    if mean_zero:
        last = next(reversed(cells))
        cells[last] = 0
        cells[last] = -sum(cells.values())
    return SchwartzFunction(p, k, cells)


def random_rational(p: int, rng: random.Random, vrange: int = 6, digits: int = 8) -> Fraction:
    """A point with a random valuation; occasionally negative (infinite expansion)."""
    x = random_digits_value(p, rng, rng.randint(-vrange, vrange), digits, unit=True)
    return -x if rng.random() < 0.25 else x
