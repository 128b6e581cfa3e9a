"""Locally constant, compactly supported functions on Q_p.

Every :class:`SchwartzFunction` is stored at a single resolution scale ``k``:
a finite map from canonical centres of the balls ``c + p**k Z_p`` to complex
values.  Inner products between functions of different scales evaluate the
coarser one at the finer centres, so no refinement is needed there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from .padic import (
    PAdic,
    PAdicError,
    Rational,
    as_padic,
    check_prime,
    is_p_power,
    rational_residue,
    rational_valuation,
)

Point = Union[PAdic, Rational]


def measure_float(p: int, k: int) -> float:
    """Haar measure ``p**-k`` of a scale-``k`` ball as a float."""
    return float(Fraction(p) ** -k)


def residue_of(x: Point, p: int, k: int) -> Fraction:
    """Canonical centre of the scale-``k`` ball containing ``x``."""
    if isinstance(x, PAdic):
        if x.prime != p:
            raise PAdicError(f"prime mismatch: {x.prime} vs {p}")
        return x.residue(k)
    return rational_residue(x, p, k)


def _coarsen_center(c: Fraction, p: int, k: int) -> Fraction:
    # canonical centres are nonnegative with p-power denominators, so the
    # residue at a coarser scale is an ordinary rational remainder
    return c % (Fraction(p) ** k)


def _is_canonical(c: Fraction, p: int, k: int) -> bool:
    return c >= 0 and is_p_power(c.denominator, p) and c == _coarsen_center(c, p, k)


@dataclass(frozen=True, order=True)
class Ball:
    """The coset ``center + p**scale Z_p`` with canonical ``center``."""

    prime: int
    scale: int
    center: Fraction

    def __post_init__(self) -> None:
        c = Fraction(self.center)
        if not _is_canonical(c, self.prime, self.scale):
            raise PAdicError(f"{c} is not a canonical centre at scale {self.scale}")
        object.__setattr__(self, "center", c)

    @property
    def measure(self) -> Fraction:
        return Fraction(self.prime) ** -self.scale

    @property
    def radius_exponent(self) -> int:
        """Smallest ``R`` with this ball inside ``p**-R Z_p``."""
        if self.center == 0:
            return -self.scale
        return -rational_valuation(self.center, self.prime)

    def contains(self, x: Point) -> bool:
        return residue_of(x, self.prime, self.scale) == self.center

    def children(self) -> list[Ball]:
        p, k = self.prime, self.scale
        step = Fraction(p) ** k
        return [Ball(p, k + 1, self.center + d * step) for d in range(p)]

    def __str__(self) -> str:
        return f"{self.center} + {self.prime}^{self.scale} Z_{self.prime}"


def make_ball(center: Point, scale: int, p: int | None = None) -> Ball:
    """The ball of the given scale containing ``center``."""
    if p is None:
        if not isinstance(center, PAdic):
            raise PAdicError("prime required for rational centres")
        p = center.prime
    return Ball(p, scale, residue_of(center, p, scale))


_UNSET = object()


def _sorted_cells(items: list[tuple[Fraction, complex]]) -> dict[Fraction, complex]:
    # centres have p-power denominators, so scaling by the largest one gives
    # exact integer sort keys (much cheaper than comparing Fractions)
    if not items:
        return {}
    d = max(c.denominator for c, _ in items)
    items.sort(key=lambda cv: cv[0].numerator * (d // cv[0].denominator))
    return dict(items)


def _radius_exponent(c: Fraction, p: int, k: int) -> int:
    if c == 0:
        return -k
    return -rational_valuation(c, p)


class SchwartzFunction:
    """A finite linear combination of indicators of disjoint equal-scale balls."""

    __slots__ = ("prime", "scale", "_cells", "_bound")

    def __init__(self, prime: int, scale: int, cells: Mapping[Fraction, complex] | None = None):
        self.prime = check_prime(prime)
        self.scale = scale
        items = []
        for c, v in (cells or {}).items():
            c = Fraction(c)
            if not _is_canonical(c, prime, scale):
                raise PAdicError(f"{c} is not a canonical centre at scale {scale}")
            v = complex(v)
            if v != 0:
                items.append((c, v))
        self._cells = _sorted_cells(items)
        self._bound = _UNSET

    @classmethod
    def _trusted(cls, prime: int, scale: int, cells: dict[Fraction, complex]) -> SchwartzFunction:
        # internal: centres already canonical at ``scale``
        self = object.__new__(cls)
        self.prime, self.scale, self._bound = prime, scale, _UNSET
        self._cells = _sorted_cells([(c, complex(v)) for c, v in cells.items() if v != 0])
        return self

    @classmethod
    def from_balls(cls, prime: int, scale: int,
                   pairs: Iterable[tuple[Ball | Point, complex]]) -> SchwartzFunction:
        """Build from ``(ball-or-point, value)`` pairs; rejects overlapping cells."""
        cells: dict[Fraction, complex] = {}
        for where, value in pairs:
            if isinstance(where, Ball):
                if where.prime != prime or where.scale != scale:
                    raise PAdicError(f"ball {where} does not have scale {scale}")
                c = where.center
            else:
                c = residue_of(where, prime, scale)
            if c in cells:
                raise PAdicError(f"cells overlap: two entries for ball {c} + {prime}^{scale} Z_{prime}")
            cells[c] = value
        return cls(prime, scale, cells)

    @classmethod
    def zero(cls, p: int, scale: int = 0) -> SchwartzFunction:
        return cls(p, scale)

    # -- views --------------------------------------------------------------

    @property
    def cells(self) -> Mapping[Fraction, complex]:
        return MappingProxyType(self._cells)

    @property
    def bound_exponent(self) -> int | None:
        """Smallest ``R`` with support inside ``p**-R Z_p`` (None if zero)."""
        if self._bound is _UNSET:
            self._bound = max((_radius_exponent(c, self.prime, self.scale) for c in self._cells),
                              default=None)
        return self._bound

    @property
    def is_zero(self) -> bool:
        return not self._cells

    def balls(self) -> Iterator[tuple[Ball, complex]]:
        for c, v in self._cells.items():
            yield Ball(self.prime, self.scale, c), v

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        """Equality as functions: both sides refined to the finer scale, values compared exactly."""
        if not isinstance(other, SchwartzFunction):
            return NotImplemented
        if self.prime != other.prime:
            return False
        k = max(self.scale, other.scale)
        return refine_to_scale(self, k)._cells == refine_to_scale(other, k)._cells

    def __repr__(self) -> str:
        return f"SchwartzFunction(p={self.prime}, scale={self.scale}, cells={len(self)})"

    def __call__(self, x: Point) -> complex:
        return evaluate(self, x)

    def __add__(self, other: SchwartzFunction) -> SchwartzFunction:
        return linear_combine(1, self, 1, other)

    def __sub__(self, other: SchwartzFunction) -> SchwartzFunction:
        return linear_combine(1, self, -1, other)

    def __mul__(self, alpha: complex) -> SchwartzFunction:
        return SchwartzFunction(self.prime, self.scale,
                                {c: alpha * v for c, v in self._cells.items()})

    __rmul__ = __mul__

    def __neg__(self) -> SchwartzFunction:
        return self * -1


def indicator(ball: Ball, value: complex = 1) -> SchwartzFunction:
    return SchwartzFunction(ball.prime, ball.scale, {ball.center: value})


def unit_ball_indicator(p: int) -> SchwartzFunction:
    """``Omega(|x|_p)``, the indicator of ``Z_p``."""
    return indicator(Ball(p, 0, Fraction(0)))


def refine_to_scale(f: SchwartzFunction, k: int) -> SchwartzFunction:
    if k < f.scale:
        raise ValueError(f"cannot refine scale {f.scale} to coarser scale {k}")
    if k == f.scale:
        return f
    p = f.prime
    step = Fraction(p) ** f.scale
    offsets = [m * step for m in range(p ** (k - f.scale))]
    cells = {c + o: v for c, v in f.cells.items() for o in offsets}
    return SchwartzFunction._trusted(p, k, cells)


def coarsest(f: SchwartzFunction) -> SchwartzFunction:
    """Merge sibling cells with identical values as far as possible."""
    p = f.prime
    cur = f
    while not cur.is_zero:
        parent = cur.scale - 1
        groups: dict[Fraction, list[complex]] = {}
        for c, v in cur.cells.items():
            groups.setdefault(_coarsen_center(c, p, parent), []).append(v)
        if any(len(vs) != p or any(v != vs[0] for v in vs) for vs in groups.values()):
            break
        cur = SchwartzFunction(p, parent, {c: vs[0] for c, vs in groups.items()})
    return cur


def evaluate(f: SchwartzFunction, x: Point) -> complex:
    """Value of ``f`` at ``x`` (raises PrecisionError if ``x`` is too coarse)."""
    return f.cells.get(residue_of(x, f.prime, f.scale), 0j)


def _same_prime(f: SchwartzFunction, g: SchwartzFunction) -> None:
    if f.prime != g.prime:
        raise PAdicError(f"prime mismatch: {f.prime} vs {g.prime}")


def linear_combine(alpha: complex, f: SchwartzFunction,
                   beta: complex, g: SchwartzFunction) -> SchwartzFunction:
    """``alpha*f + beta*g`` at the common refinement; exact zeros are dropped."""
    _same_prime(f, g)
    k = max(f.scale, g.scale)
    f, g = refine_to_scale(f, k), refine_to_scale(g, k)
    cells = {c: alpha * v for c, v in f.cells.items()}
    for c, v in g.cells.items():
        cells[c] = cells.get(c, 0) + beta * v
    return SchwartzFunction(f.prime, k, cells)


def inner_product(f: SchwartzFunction, g: SchwartzFunction) -> complex:
    """``<f, g> = integral of conj(f) * g``; conjugate-linear in ``f``."""
    _same_prime(f, g)
    p = f.prime
    if f.is_zero or g.is_zero:
        return 0j
    if f.scale <= g.scale:
        fc, k = f.cells, f.scale
        total = sum((fc.get(_coarsen_center(c, p, k), 0j).conjugate() * v
                     for c, v in g.cells.items()), 0j)
        return total * measure_float(p, g.scale)
    gc, k = g.cells, g.scale
    total = sum((v.conjugate() * gc.get(_coarsen_center(c, p, k), 0j)
                 for c, v in f.cells.items()), 0j)
    return total * measure_float(p, f.scale)


def norm_sq(f: SchwartzFunction) -> float:
    return sum(abs(v) ** 2 for v in f.cells.values()) * measure_float(f.prime, f.scale)


def integral(f: SchwartzFunction) -> complex:
    """Haar integral; cells are summed in canonical centre order."""
    return sum(f.cells.values(), 0j) * measure_float(f.prime, f.scale)


def affine_act(a: Point, b: Point, f: SchwartzFunction) -> SchwartzFunction:
    """``G(a, b) f(x) = |a|_p**-0.5 * f((x - b) / a)``.

    The ball ``c + p**k Z_p`` is carried to ``a*c + b + p**(k + v(a)) Z_p``.
    """
    p = f.prime
    a = as_padic(a, p)
    b = as_padic(b, p)
    if a.exact_zero:
        raise PAdicError("dilation by zero")
    v = a.known_valuation()
    k = f.scale + v
    factor = float(Fraction(p) ** v) ** 0.5
    cells = {}
    if a.rational is not None and b.rational is not None:
        aq, bq = a.rational, b.rational
        for c, val in f.cells.items():
            cells[rational_residue(aq * c + bq, p, k)] = factor * val
    else:
        for c, val in f.cells.items():
            cells[(a * PAdic.from_rational(c, p) + b).residue(k)] = factor * val
    return SchwartzFunction(p, k, cells)
