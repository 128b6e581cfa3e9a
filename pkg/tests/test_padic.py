import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from conftest import finite_expansions, primes, rationals
from padicwave.padic import (
    CosetRep,
    PAdic,
    PAdicError,
    PrecisionError,
    UnitPhase,
    arith,
    as_padic,
    character,
    coset_from_index,
    coset_rep,
    digit_at,
    enumerate_cosets,
    format_literal,
    fractional_part,
    norm_and_valuation,
    parse_padic,
    root_of_unity,
    unit_leading_inverse,
)


def P(q, p, digits=32):
    return PAdic.from_rational(Fraction(q), p, digits)


# -- parsing ----------------------------------------------------------------------

def test_parse_five_quarters():
    x = parse_padic("5/4", 2, 8)
    assert x.valuation == -2
    assert list(x.digits) == [1, 0, 1, 0, 0, 0, 0, 0]


def test_parse_minus_one_base_three():
    x = parse_padic("-1", 3, 4)
    assert x.valuation == 0
    assert list(x.digits) == [2, 2, 2, 2]
    assert sum(d * 3**i for i, d in enumerate(x.digits)) % 3**4 == (-1) % 3**4


def test_parse_one_seventh():
    x = parse_padic("1/7", 5, 6)
    assert x.valuation == 0 and x.digits[0] == 3
    m = sum(d * 5**i for i, d in enumerate(x.digits))
    assert 7 * m % 5**6 == 1


def test_parse_digit_literal():
    x = parse_padic("v=-2;digits=1,0,1", 2)
    assert x.valuation == -2 and x.digits[:3] == (1, 0, 1)
    assert x.residue(1) == Fraction(5, 4)


@pytest.mark.parametrize("text", ["", "1/0", "abc", "v=x;digits=1", "v=0;digits=2", "1.5"])
def test_parse_rejects(text):
    with pytest.raises(PAdicError):
        parse_padic(text, 2)


def test_parse_rejects_composite_prime():
    with pytest.raises(PAdicError):
        parse_padic("1", 4)


def test_format_literal_roundtrip():
    for q in (Fraction(5, 4), Fraction(-7, 9), Fraction(0), Fraction(12)):
        assert parse_padic(format_literal(q), 3).rational == q
    assert format_literal(CosetRep(3, Fraction(1, 27))) == "1/27"


# -- arithmetic -------------------------------------------------------------------

def test_add_example():
    s = arith("add", P("5/4", 2), P("3/4", 2))
    assert s.valuation == 1 and s.digits[0] == 1
    assert s.rational == 2


def test_mul_example():
    m = arith("mul", P(12, 2), P(Fraction(1, 3), 2))
    assert m.rational == 4
    assert norm_and_valuation(m) == (Fraction(1, 4), 2)


def test_inverse_multiplies_back():
    x = PAdic.from_rational(2, 7, 5)
    y = arith("inv", x)
    prod = arith("mul", x, y)
    assert prod.residue(5) == 1


def test_inverse_of_window_value_multiplies_back():
    # no exact rational carried: only the digit window
    x = PAdic.from_window(7, 0, 2 + 3 * 7 + 4 * 49, 5)
    assert x.rational is None
    y = x.inverse()
    assert (x * y).residue(5) == 1


def test_precision_rules():
    x = PAdic.from_rational(Fraction(1, 3), 2, 10)
    y = PAdic.from_rational(4, 2, 6)      # valuation 2, known mod 2**8
    assert (x + y).precision == min(x.precision, y.precision)
    assert (x * y).precision == min(x.precision + 2, y.precision + 0)


def test_inverse_of_zero_raises():
    with pytest.raises(PAdicError):
        PAdic.zero(3).inverse()


def test_norm_examples():
    assert norm_and_valuation(P(12, 2)) == (Fraction(1, 4), 2)
    assert norm_and_valuation(PAdic.zero(2)) == (Fraction(0), math.inf)
    assert norm_and_valuation(P(Fraction(5, 6), 3)) == (Fraction(3), -1)


def test_fractional_part_examples():
    assert fractional_part(P(Fraction(5, 4), 2)) == Fraction(1, 4)
    assert fractional_part(P(2, 3)) == 0
    assert fractional_part(P(Fraction(-1, 2), 2)) == Fraction(1, 2)


def test_from_digits_is_exact():
    x = PAdic.from_digits(3, 0, [1, 2])
    assert x.rational == 7 and x.is_finite_expansion


def test_digit_at_examples():
    x = P(Fraction(5, 4), 2)
    assert [digit_at(x, k) for k in (-2, -1, 0)] == [1, 0, 1]


def test_digit_at_beyond_precision():
    x = PAdic.from_window(3, 0, 7, 2)
    assert x.digit_at(1) == 2
    with pytest.raises(PrecisionError):
        x.digit_at(2)


def test_character_examples():
    assert character(P(Fraction(1, 2), 2)) == UnitPhase(1, 2)
    assert character(P(Fraction(1, 2), 2)).to_complex() == -1
    assert character(P(Fraction(5, 4), 2)).to_complex() == 1j
    for p in (2, 3, 5):
        assert character(P(17, p)) == UnitPhase(0, 1)


def test_unit_leading_inverse_examples():
    assert unit_leading_inverse(P(2, 5)) == 3
    assert unit_leading_inverse(P(Fraction(1, 3), 3)) == 1
    assert unit_leading_inverse(P(10, 7)) == 5


def test_coset_rep_examples():
    assert coset_rep(P(Fraction(5, 4), 2)).digits == {-2: 1}
    assert coset_rep(P(Fraction(5, 4), 2)).value == Fraction(1, 4)
    assert coset_rep(P(11, 5)).value == 0
    c = coset_rep(P(Fraction(-1, 3), 3))
    assert c.value == Fraction(2, 3) and c.digits == {-1: 2}


def test_root_of_unity_exact_on_axes():
    assert root_of_unity(1, 2) == -1
    assert root_of_unity(1, 4) == 1j
    assert root_of_unity(3, 4) == -1j
    assert root_of_unity(5, 5) == 1


def test_enumerate_cosets_distinct():
    for p in (2, 3, 5):
        cs = enumerate_cosets(p, 40)
        assert len(set(cs)) == 40
        assert cs[0].value == 0
        assert all(0 <= c.value < 1 for c in cs)


# -- properties -------------------------------------------------------------------

@given(primes, rationals(nonzero=True))
def test_digits_match_oracle(p, q):
    x = P(q, p, 12)
    v, _ = oracles.split(q, p)
    assert x.valuation == v
    assert list(x.digits[:12]) == oracles.hensel_digits(q, p, v, 12)


@given(primes, rationals(), st.integers(8, 40))
def test_roundtrip_mod_p_power(p, q, n):
    x = P(q, p, n)
    assume(not x.exact_zero)
    top = x.precision
    back = x.window_value()
    diff = Fraction(q) - back
    assert diff == 0 or oracles.split(diff, p)[0] >= top


@given(primes, rationals(nonzero=True), rationals(nonzero=True))
def test_norm_multiplicative(p, q, r):
    nq, _ = norm_and_valuation(P(q, p))
    nr, _ = norm_and_valuation(P(r, p))
    nqr, _ = norm_and_valuation(P(q, p) * P(r, p))
    assert nqr == nq * nr


@given(primes, rationals(), rationals())
def test_ultrametric(p, q, r):
    assume(q + r != 0)
    n = lambda t: norm_and_valuation(P(t, p))[0]
    assert n(q + r) <= max(n(q), n(r))


@given(primes, rationals(), rationals())
def test_character_homomorphism(p, q, r):
    assert character(P(q + r, p)) == character(P(q, p)) * character(P(r, p))


@given(primes, rationals(nonzero=True), st.integers(-8, 8))
def test_digit_consistency(p, q, k):
    x = P(q, p)
    assert x.residue(k + 1) - x.residue(k) == digit_at(x, k) * Fraction(p) ** k


@given(primes, rationals())
def test_fractional_part_matches_oracle(p, q):
    assert fractional_part(P(q, p)) == oracles.frac_part(q, p)


@given(primes, rationals(nonzero=True))
def test_window_arithmetic_agrees_with_exact(p, q):
    a = P(q, p, 16)
    b = PAdic.from_window(p, a.valuation, a.mantissa, a.precision)   # same digits, no rational
    assert b.rational is None
    assert (b * b).residue(a.valuation * 2 + 8) == (a * a).residue(a.valuation * 2 + 8)
    assert (b + b).residue(a.valuation + 8) == (a + a).residue(a.valuation + 8)


@given(st.sampled_from((2, 3, 5)), st.integers(0, 500))
def test_coset_index_bijection(p, m):
    c = coset_from_index(m, p)
    assert isinstance(c, CosetRep)
    assert coset_from_index(m, p) == c
    # distinct indices give distinct cosets
    assert coset_from_index(m + 1, p) != c


@given(primes, finite_expansions(3))
def test_as_padic_idempotent(p, q):
    x = as_padic(q, p)
    assert as_padic(x, p) is x
