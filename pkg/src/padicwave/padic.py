"""Finite-precision p-adic numbers.

A :class:`PAdic` stores the canonical base-p digits of a number on a window
``[valuation, precision)``: the value is known modulo ``p**precision``.  When a
number originates from an exact rational (parsing, or arithmetic on exact
inputs) the rational travels along, so digits outside the window stay
available and nothing is silently truncated.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

DEFAULT_DIGITS = 32

Rational = Union[int, Fraction]


class PAdicError(ValueError):
    """Invalid p-adic input or operation."""


class PrecisionError(PAdicError):
    """A requested digit or valuation is not determined by the stored window."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise PAdicError(f"{p!r} is not a prime")
    return p


def valuation_of(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(q: Fraction, p: int) -> int:
    return valuation_of(q.numerator, p) - valuation_of(q.denominator, p)


def rational_residue(q: Rational, p: int, k: int) -> Fraction:
    """Canonical representative of ``q + p**k Z_p``.

    The result is ``sum(q_i p**i for i < k)``, a nonnegative rational with a
    power-of-p denominator that is strictly smaller than ``p**k``.
    """
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    s = valuation_of(q.denominator, p)
    unit_den = q.denominator // p**s
    width = k + s
    if width <= 0:
        return Fraction(0)
    modulus = p**width
    r = q.numerator * pow(unit_den, -1, modulus) % modulus
    return Fraction(r, p**s)


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _digits_of(m: int, p: int, count: int) -> tuple[int, ...]:
    out = []
    for _ in range(count):
        m, d = divmod(m, p)
        out.append(d)
    return tuple(out)


@dataclass(frozen=True)
class PAdic:
    """A p-adic number known modulo ``p**precision``.

    ``digits[i]`` is the coefficient of ``p**(valuation + i)``.  Three kinds of
    values exist:

    * ``exact_zero`` -- the literal zero (no digits, norm 0);
    * zero-to-precision -- ``exact_zero`` is False and ``digits`` is empty; the
      value is only known to be divisible by ``p**precision``
      (``valuation == precision``);
    * ordinary values -- the lowest digit is nonzero.

    ``rational`` holds the exact value when it is known.
    """

    prime: int
    valuation: int
    digits: tuple[int, ...]
    precision: int
    exact_zero: bool = False
    rational: Fraction | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        p = self.prime
        if self.precision != self.valuation + len(self.digits):
            raise PAdicError("precision must equal valuation + len(digits)")
        if any(not 0 <= d < p for d in self.digits):
            raise PAdicError(f"digits must lie in [0, {p - 1}]")
        if self.digits and self.digits[0] == 0:
            raise PAdicError("lowest stored digit must be nonzero; use PAdic.from_window")

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> PAdic:
        return cls(p, 0, (), 0, exact_zero=True, rational=Fraction(0))

    @classmethod
    def from_window(cls, p: int, low: int, mantissa: int, precision: int,
                    rational: Fraction | None = None) -> PAdic:
        """Canonicalise the value ``mantissa * p**low (mod p**precision)``."""
        if rational is not None and rational == 0:
            return cls.zero(p)
        width = precision - low
        if width <= 0:
            if rational is not None:
                # exact values always keep their leading digit
                return cls.from_rational(rational, p, 1)
            return cls(p, precision, (), precision)
        mantissa %= p**width
        if mantissa == 0:
            if rational is not None:
                return cls.from_rational(rational, p, 1)
            return cls(p, precision, (), precision)
        shift = valuation_of(mantissa, p)
        mantissa //= p**shift
        low += shift
        return cls(p, low, _digits_of(mantissa, p, precision - low), precision,
                   rational=rational)

    @classmethod
    def from_rational(cls, q: Rational, p: int, digits: int = DEFAULT_DIGITS) -> PAdic:
        """Expand ``q`` to ``digits`` digits above its valuation."""
        q = Fraction(q)
        if q == 0:
            return cls.zero(p)
        if digits < 1:
            raise PAdicError("at least one digit is required")
        v = rational_valuation(q, p)
        unit = q / Fraction(p) ** v
        modulus = p**digits
        m = unit.numerator * pow(unit.denominator, -1, modulus) % modulus
        return cls(p, v, _digits_of(m, p, digits), v + digits, rational=q)

    @classmethod
    def from_digits(cls, p: int, valuation: int, digits: list[int] | tuple[int, ...],
                    min_digits: int = DEFAULT_DIGITS) -> PAdic:
        """The finite expansion ``sum(d * p**(valuation + i))``."""
        for d in digits:
            if not 0 <= d < p:
                raise PAdicError(f"digit {d} out of range for p={p}")
        value = sum(Fraction(d) * Fraction(p) ** (valuation + i) for i, d in enumerate(digits))
        if value == 0:
            return cls.zero(p)
        v = rational_valuation(value, p)
        top = valuation + len(digits)
        return cls.from_rational(value, p, max(min_digits, top - v))

    # -- basic properties ---------------------------------------------------

    @property
    def is_zero_to_precision(self) -> bool:
        return not self.exact_zero and not self.digits

    @property
    def is_exact(self) -> bool:
        return self.rational is not None

    @property
    def is_finite_expansion(self) -> bool:
        """True when the value is exactly a finite sum of digits times powers of p."""
        q = self.rational
        return q is not None and q >= 0 and is_p_power(q.denominator, self.prime)

    @property
    def mantissa(self) -> int:
        m = 0
        for d in reversed(self.digits):
            m = m * self.prime + d
        return m

    def window_value(self) -> Fraction:
        """The stored digits as a rational (exact value if known)."""
        if self.rational is not None:
            return self.rational
        return self.mantissa * Fraction(self.prime) ** self.valuation

    def with_precision(self, digits: int) -> PAdic:
        """Re-expand an exact value to ``digits`` digits above the valuation."""
        if self.rational is None:
            raise PrecisionError("only exact values can be re-expanded")
        return PAdic.from_rational(self.rational, self.prime, digits)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: PAdic) -> None:
        if not isinstance(other, PAdic):
            raise TypeError(f"expected PAdic, got {type(other).__name__}")
        if other.prime != self.prime:
            raise PAdicError(f"prime mismatch: {self.prime} vs {other.prime}")

    def _coerce(self, other) -> PAdic:
        if isinstance(other, (int, Fraction)):
            return PAdic.from_rational(other, self.prime, len(self.digits) or DEFAULT_DIGITS)
        self._check(other)
        return other

    def __add__(self, other) -> PAdic:
        other = self._coerce(other)
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        p = self.prime
        low = min(self.valuation, other.valuation)
        prec = min(self.precision, other.precision)
        m = (self.mantissa * p ** (self.valuation - low)
             + other.mantissa * p ** (other.valuation - low))
        exact = None
        if self.rational is not None and other.rational is not None:
            exact = self.rational + other.rational
        return PAdic.from_window(p, low, m, prec, exact)

    __radd__ = __add__

    def __neg__(self) -> PAdic:
        if self.exact_zero or self.is_zero_to_precision:
            return self
        exact = -self.rational if self.rational is not None else None
        return PAdic.from_window(self.prime, self.valuation, -self.mantissa, self.precision, exact)

    def __sub__(self, other) -> PAdic:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> PAdic:
        return self._coerce(other) - self

    def __mul__(self, other) -> PAdic:
        other = self._coerce(other)
        if self.exact_zero or other.exact_zero:
            return PAdic.zero(self.prime)
        prec = min(self.precision + other.valuation, other.precision + self.valuation)
        exact = None
        if self.rational is not None and other.rational is not None:
            exact = self.rational * other.rational
        return PAdic.from_window(self.prime, self.valuation + other.valuation,
                                 self.mantissa * other.mantissa, prec, exact)

    __rmul__ = __mul__

    def inverse(self) -> PAdic:
        if self.exact_zero:
            raise PAdicError("inverse of exact zero")
        if self.is_zero_to_precision:
            raise PrecisionError("inverse of a zero-to-precision value")
        rel = self.precision - self.valuation
        m = pow(self.mantissa, -1, self.prime**rel)
        exact = 1 / self.rational if self.rational is not None else None
        return PAdic.from_window(self.prime, -self.valuation, m, rel - self.valuation, exact)

    def __truediv__(self, other) -> PAdic:
        return self * self._coerce(other).inverse()

    # -- digit access -------------------------------------------------------

    def known_valuation(self) -> int:
        if self.exact_zero:
            raise PAdicError("zero has infinite valuation")
        if self.is_zero_to_precision:
            raise PrecisionError(
                f"indeterminate valuation: value is 0 mod {self.prime}^{self.precision}")
        return self.valuation

    def digit_at(self, k: int) -> int:
        """Coefficient of ``p**k`` in the canonical expansion."""
        if self.rational is not None:
            if self.exact_zero:
                return 0
            r = rational_residue(self.rational, self.prime, k + 1)
            return math.floor(r / Fraction(self.prime) ** k)
        if k >= self.precision:
            raise PrecisionError(f"digit {k} lies outside the known window [.., {self.precision})")
        if k < self.valuation:
            return 0
        return self.digits[k - self.valuation]

    def residue(self, k: int) -> Fraction:
        """Canonical representative of the coset ``x + p**k Z_p``."""
        if self.rational is not None:
            return rational_residue(self.rational, self.prime, k)
        if k > self.precision:
            raise PrecisionError(
                f"need digits below {k} but value is known only mod {self.prime}^{self.precision}")
        p = self.prime
        r = Fraction(0)
        for i, d in enumerate(self.digits):
            pos = self.valuation + i
            if pos >= k:
                break
            if d:
                r += d * Fraction(p) ** pos
        return r

    def __repr__(self) -> str:
        if self.exact_zero:
            return f"PAdic(0, p={self.prime})"
        if self.rational is not None:
            return f"PAdic({self.rational}, p={self.prime}, mod p^{self.precision})"
        ds = ",".join(map(str, self.digits))
        return f"PAdic(v={self.valuation}; digits={ds}, p={self.prime})"


@dataclass(frozen=True, order=True)
class UnitPhase:
    """The point ``exp(2*pi*i*numerator/denominator)`` on the unit circle."""

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        q = Fraction(self.numerator, self.denominator) % 1
        object.__setattr__(self, "numerator", q.numerator)
        object.__setattr__(self, "denominator", q.denominator)

    @classmethod
    def of(cls, q: Rational) -> UnitPhase:
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __mul__(self, other: UnitPhase) -> UnitPhase:
        return UnitPhase.of(self.value + other.value)

    def inverse(self) -> UnitPhase:
        return UnitPhase.of(-self.value)

    conjugate = inverse

    def to_complex(self) -> complex:
        return root_of_unity(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def root_of_unity(num: int, den: int) -> complex:
    """``exp(2*pi*i*num/den)`` with exact values on the axes."""
    num %= den
    if num == 0:
        return 1 + 0j
    if 2 * num == den:
        return -1 + 0j
    if 4 * num == den:
        return 1j
    if 4 * num == 3 * den:
        return -1j
    t = 2 * math.pi * num / den
    return complex(math.cos(t), math.sin(t))


@dataclass(frozen=True, order=True)
class CosetRep:
    """An element of ``Q_p / Z_p``, stored as its fractional digits.

    ``value`` is ``sum(n_l p**l for l < 0)``, a rational in ``[0, 1)`` with a
    power-of-p denominator.
    """

    prime: int
    value: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        v = Fraction(self.value)
        if not 0 <= v < 1 or not is_p_power(v.denominator, self.prime):
            raise PAdicError(f"{v} is not a canonical element of Q_{self.prime}/Z_{self.prime}")
        object.__setattr__(self, "value", v)

    @classmethod
    def of(cls, x: Rational, p: int) -> CosetRep:
        return cls(p, rational_residue(x, p, 0))

    @property
    def digits(self) -> dict[int, int]:
        """Nonzero digits keyed by (negative) position."""
        p, v = self.prime, self.value
        out = {}
        depth = valuation_of(v.denominator, p)
        m = int(v * p**depth)
        for i in range(depth):
            m, d = divmod(m, p)
            if d:
                out[i - depth] = d
        return out

    def padic(self, digits: int = DEFAULT_DIGITS) -> PAdic:
        return PAdic.from_rational(self.value, self.prime, digits)

    def __str__(self) -> str:
        return str(self.value)


# -- public operations -------------------------------------------------------

_DIGIT_LITERAL = re.compile(r"^\s*v\s*=\s*(-?\d+)\s*;\s*digits\s*=\s*([\d,\s]*)$")
_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_padic(text: str, p: int, target_precision: int = DEFAULT_DIGITS) -> PAdic:
    """Parse ``"m/n"``, an integer, or ``"v=<int>;digits=d0,d1,..."``."""
    check_prime(p)
    m = _DIGIT_LITERAL.match(text)
    if m:
        body = m.group(2).strip()
        digits = [int(t) for t in body.split(",") if t.strip()] if body else []
        return PAdic.from_digits(p, int(m.group(1)), digits, target_precision)
    m = _RATIONAL_LITERAL.match(text)
    if not m:
        raise PAdicError(f"cannot parse p-adic literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise PAdicError("zero denominator")
    return PAdic.from_rational(Fraction(num, den), p, target_precision)


def format_literal(x: PAdic | CosetRep | Fraction | int) -> str:
    """Inverse of :func:`parse_padic` (rationals print as ``m/n``)."""
    if isinstance(x, CosetRep):
        x = x.value
    if isinstance(x, PAdic):
        if x.rational is not None:
            x = x.rational
        else:
            ds = ",".join(map(str, x.digits))
            return f"v={x.valuation};digits={ds}"
    return str(Fraction(x))


def arith(op: str, x: PAdic, y: PAdic | None = None) -> PAdic:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    raise PAdicError(f"unknown operation {op!r}")


def norm_and_valuation(x: PAdic) -> tuple[Fraction, float | int]:
    """``(|x|_p, v_p(x))``; zero gives ``(0, math.inf)``."""
    if x.exact_zero:
        return Fraction(0), math.inf
    v = x.known_valuation()
    return Fraction(x.prime) ** -v, v


def fractional_part(x: PAdic) -> Fraction:
    """``sum(x_j p**j for j < 0)``, the rational in ``[0, 1)``."""
    return x.residue(0)


def digit_at(x: PAdic, k: int) -> int:
    return x.digit_at(k)


def character(x: PAdic) -> UnitPhase:
    """The additive character ``chi(x) = exp(2*pi*i*{x})`` as an exact phase."""
    return UnitPhase.of(fractional_part(x))


def unit_leading_inverse(a: PAdic) -> int:
    """Inverse mod p of the lowest nonzero digit of ``a``."""
    v = a.known_valuation()
    return pow(a.digits[0] if a.digits else a.digit_at(v), -1, a.prime)


def coset_rep(x: PAdic) -> CosetRep:
    return CosetRep(x.prime, fractional_part(x))


def as_padic(x, p: int, digits: int = DEFAULT_DIGITS) -> PAdic:
    """Accept ints, Fractions, literals or PAdic values."""
    if isinstance(x, PAdic):
        if x.prime != p:
            raise PAdicError(f"prime mismatch: {x.prime} vs {p}")
        return x
    if isinstance(x, str):
        return parse_padic(x, p, digits)
    if isinstance(x, CosetRep):
        return x.padic(digits)
    return PAdic.from_rational(Fraction(x), p, digits)


def coset_from_index(m: int, p: int) -> CosetRep:
    """The coset whose reversed digits spell ``m`` in base p.

    This is the bijection ``N_0 -> Q_p/Z_p`` underlying the digit-reversal
    map: ``m = sum(m_i p**i)`` corresponds to ``n = sum(m_i p**(-i-1))``.
    """
    if m < 0:
        raise ValueError("index must be nonnegative")
    value = Fraction(0)
    i = 0
    while m:
        m, d = divmod(m, p)
        value += Fraction(d, p ** (i + 1))
        i += 1
    return CosetRep(p, value)


def enumerate_cosets(p: int, count: int) -> list[CosetRep]:
    """The first ``count`` cosets in digit-reversal order (starting at 0)."""
    return [coset_from_index(m, p) for m in range(count)]
