import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import cosets, schwartz_functions, small_primes
from padicwave.padic import PAdic, PAdicError, UnitPhase, enumerate_cosets
from padicwave.sampling import random_affine
from padicwave.schwartz import evaluate, inner_product, norm_sq, unit_ball_indicator
from padicwave.wavelets import (
    WaveletIndex,
    WindowError,
    admissibility_constant,
    affine_value,
    affine_wavelet,
    basis_affine_params,
    basis_value,
    basis_wavelet,
    classify_affine,
    coefficient_table,
    continuous_transform,
    discrete_coefficient,
    localized_indices,
    mother_value,
    mother_wavelet,
    reconstruct_partial,
    support_window,
    synthesize,
    tail_energy,
)


def idx(g, n, j, p):
    return WaveletIndex.of(g, Fraction(n), j, p)


# -- basis and mother wavelets ----------------------------------------------------

def test_basis_wavelet_p2():
    w = basis_wavelet(idx(0, 0, 1, 2))
    assert w.scale == 1
    assert dict(w.cells) == {Fraction(0): 1, Fraction(1): -1}


def test_basis_wavelet_value_at_zero():
    for p in (2, 3, 5, 7):
        assert basis_value(idx(0, 0, 1, p), 0) == 1
        assert evaluate(basis_wavelet(idx(0, 0, 1, p)), 0) == 1


def test_basis_wavelets_unit_norm():
    for p in (2, 3, 5):
        for n in enumerate_cosets(p, 6):
            for g in (-3, 0, 2):
                for j in range(1, p):
                    assert norm_sq(basis_wavelet(WaveletIndex(g, n, j))) == pytest.approx(1, abs=1e-14)


def test_mother_values():
    assert mother_value(2, 1) == -1
    assert mother_value(3, 1) == pytest.approx(cmath.exp(2j * cmath.pi / 3), abs=1e-15)
    for p in (2, 3, 5):
        assert mother_wavelet(p) == basis_wavelet(idx(0, 0, 1, p))


def test_index_validation():
    with pytest.raises(PAdicError):
        idx(0, 0, 0, 3)
    with pytest.raises(PAdicError):
        idx(0, 0, 3, 3)


def test_affine_wavelet_identity():
    for p in (2, 3, 5):
        assert affine_wavelet(1, 0, p) == mother_wavelet(p)


def test_affine_wavelet_of_basis_params():
    for p in (2, 3, 5):
        for n in enumerate_cosets(p, 5):
            for g in (-2, 0, 1):
                for j in range(1, p):
                    i = WaveletIndex(g, n, j)
                    a, b = basis_affine_params(i)
                    assert affine_wavelet(a, b, p) == basis_wavelet(i)


def test_affine_wavelet_sign_flip():
    w = affine_wavelet(1, 1, 2)
    for x in (0, 1, 2, 3, Fraction(1, 2)):
        assert evaluate(w, x) == -basis_value(idx(0, 0, 1, 2), x)


def test_affine_value_requires_prime():
    with pytest.raises(PAdicError):
        affine_value(Fraction(1), Fraction(0), Fraction(1))
    with pytest.raises(PAdicError):
        affine_value(0, 0, 1, 2)


# -- classification ---------------------------------------------------------------

def test_classify_example_p2():
    c = classify_affine(1, 1, 2)
    assert (c.index.gamma, c.index.n.value, c.index.j) == (0, 0, 1)
    assert c.phase == UnitPhase(1, 2) and c.factor == -1


def test_classify_example_p3():
    c = classify_affine(18, Fraction(1, 3), 3)
    assert (c.index.gamma, c.index.n.value, c.index.j) == (-2, Fraction(1, 27), 2)
    assert c.phase == UnitPhase(0, 1)


def test_classify_accepts_padic_arguments():
    a = PAdic.from_rational(18, 3)
    b = PAdic.from_rational(Fraction(1, 3), 3)
    assert classify_affine(a, b) == classify_affine(18, Fraction(1, 3), 3)


def test_classify_roundtrip_window():
    for p in (2, 3, 5):
        for n in enumerate_cosets(p, 20):
            for g in range(-4, 5):
                for j in range(1, p):
                    i = WaveletIndex(g, n, j)
                    c = classify_affine(*basis_affine_params(i), p)
                    assert c.index == i and c.phase == UnitPhase(0, 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_classification_matches_definition_oracle(p):
    rng = random.Random(p)
    for _ in range(60):
        a, b = random_affine(p, rng)
        c = classify_affine(a, b, p)
        for _ in range(20):
            x = b + a * rng.randrange(p**5) if rng.random() < 0.7 else rng.randrange(p**6) * Fraction(p) ** -3
            direct = oracles.mother_affine_value(p, a, b, x)
            i = c.index
            via_basis = c.factor * oracles.wavelet_value(p, i.gamma, i.n.value, i.j, x)
            assert abs(direct - via_basis) <= 1e-12 * max(1, abs(direct))
            assert abs(affine_value(a, b, x, p) - direct) <= 1e-12 * max(1, abs(direct))


@given(small_primes.flatmap(lambda p: st.tuples(
    st.just(p), st.integers(-6, 6), st.integers(1, p**4 - 1).filter(lambda u: u % p),
    st.integers(-4, 4), st.integers(0, p**6), st.integers(0, p**6))))
def test_classification_soundness_property(args):
    p, v, u, w, m, t = args
    a = Fraction(p) ** v * u
    b = Fraction(p) ** w * m
    c = classify_affine(a, b, p)
    for x in (b + a * t, b + Fraction(p) ** (w - 2) * t, Fraction(t, p**3)):
        lhs = affine_value(a, b, x, p)
        rhs = c.factor * basis_value(c.index, x)
        assert abs(lhs - rhs) <= 1e-12


@given(small_primes.flatmap(lambda p: st.tuples(cosets(p), st.integers(-5, 5), st.integers(0, p**7))))
def test_basis_value_matches_oracle(args):
    n, g, t = args
    p = n.prime
    x = t * Fraction(p) ** (-g - 3)
    for j in range(1, p):
        got = basis_value(WaveletIndex(g, n, j), x)
        assert got == pytest.approx(oracles.wavelet_value(p, g, n.value, j, x), abs=1e-12)
        assert got == evaluate(basis_wavelet(WaveletIndex(g, n, j)), x)


# -- coefficients and transform ---------------------------------------------------

def test_discrete_coefficient_diagonal():
    for p in (2, 3):
        i = idx(0, 0, 1, p)
        assert discrete_coefficient(basis_wavelet(i), i) == pytest.approx(1, abs=1e-15)


def test_omega_coefficients():
    for p in (2, 3, 5):
        omega = unit_ball_indicator(p)
        for g in range(1, 6):
            for j in range(1, p):
                assert discrete_coefficient(omega, idx(g, 0, j, p)) == pytest.approx(p ** (-g / 2), abs=1e-15)
        for g in range(-2, 1):
            assert discrete_coefficient(omega, idx(g, 0, 1, p)) == pytest.approx(0, abs=1e-15)
        n = enumerate_cosets(p, 2)[1]
        assert discrete_coefficient(omega, WaveletIndex(1, n, 1)) == 0


def test_continuous_transform_examples():
    psi = basis_wavelet(idx(0, 0, 1, 2))
    assert continuous_transform(psi, 1, 0) == pytest.approx(1)
    assert continuous_transform(psi, 1, 1) == pytest.approx(-1)
    assert continuous_transform(psi, 1, 1, method="direct") == pytest.approx(-1)
    other = basis_wavelet(idx(3, 0, 1, 2))
    assert continuous_transform(other, 1, 0) == 0


def test_continuous_transform_rejects_unknown_method():
    with pytest.raises(ValueError):
        continuous_transform(unit_ball_indicator(2), 1, 0, method="fft")


@given(small_primes.flatmap(lambda p: st.tuples(
    schwartz_functions(p), st.integers(-3, 3), st.integers(1, p**3 - 1).filter(lambda u: u % p),
    st.integers(0, p**5))))
def test_transform_consistency(args):
    f, v, u, m = args
    p = f.prime
    a = Fraction(p) ** v * u
    b = m * Fraction(p) ** -2
    direct = continuous_transform(f, a, b, method="direct")
    assert direct == pytest.approx(continuous_transform(f, a, b), abs=1e-12)
    assert direct == pytest.approx(inner_product(affine_wavelet(a, b, p), f), abs=1e-12)


# -- admissibility ----------------------------------------------------------------

@pytest.mark.parametrize("p,expected", [(2, 0.5), (3, 1 / 3), (5, 0.2)])
def test_admissibility(p, expected):
    assert admissibility_constant(p) == pytest.approx(expected, abs=1e-12)


def test_admissibility_stable_in_depth():
    assert admissibility_constant(2, 1) == pytest.approx(admissibility_constant(2, 3), abs=1e-14)


# -- orthonormality ---------------------------------------------------------------

@given(small_primes.flatmap(lambda p: st.tuples(
    cosets(p), cosets(p), st.integers(-3, 3), st.integers(-3, 3),
    st.integers(1, p - 1), st.integers(1, p - 1))))
def test_orthonormality_property(args):
    n1, n2, g1, g2, j1, j2 = args
    a, b = WaveletIndex(g1, n1, j1), WaveletIndex(g2, n2, j2)
    expected = 1 if a == b else 0
    assert inner_product(basis_wavelet(a), basis_wavelet(b)) == pytest.approx(expected, abs=1e-12)


# -- reconstruction ---------------------------------------------------------------

def test_support_window():
    omega = unit_ball_indicator(3)
    assert support_window(omega) == (1, 0)
    assert support_window(basis_wavelet(idx(0, 0, 1, 3))) == (0, 0)


def test_localized_indices_sorted_and_local():
    f = basis_wavelet(idx(-1, Fraction(1, 2), 1, 2))
    ids = localized_indices(f, -3, 3)
    assert ids == sorted(ids)
    assert all(i.gamma >= 1 - f.scale for i in ids)


def test_reconstruct_single_wavelet():
    psi = basis_wavelet(idx(0, 0, 1, 3))
    r = reconstruct_partial(coefficient_table(psi, 0, 0), psi)
    assert r.residual_norm_sq == pytest.approx(0, abs=1e-15)
    assert r.approximation == psi or norm_sq(r.approximation - psi) < 1e-28


@pytest.mark.parametrize("p", [2, 3, 5])
def test_omega_partial_parseval(p):
    omega = unit_ball_indicator(p)
    for G in (1, 4, 8):
        table = coefficient_table(omega, 1, G)
        assert table.energy() == pytest.approx(1 - p**-G, abs=1e-12)
        assert tail_energy(omega, G) == pytest.approx(p**-G, abs=1e-15)


def test_omega_reconstruction_residual():
    for p in (2, 3):
        omega = unit_ball_indicator(p)
        r = reconstruct_partial(coefficient_table(omega, 1, 6), omega)
        assert r.residual_norm_sq == pytest.approx(p**-6, abs=1e-12)
        assert norm_sq(omega - r.approximation) == pytest.approx(p**-6, abs=1e-12)


def test_empty_window_gives_empty_table():
    table = coefficient_table(unit_ball_indicator(2), 3, 2)
    assert len(table) == 0 and table.energy() == 0


def test_reconstruct_rejects_short_window():
    f = basis_wavelet(idx(0, 0, 1, 2))
    with pytest.raises(WindowError):
        reconstruct_partial(coefficient_table(f, 1, 1), f)


def test_tail_energy_requires_window_above_support():
    with pytest.raises(WindowError):
        tail_energy(unit_ball_indicator(2) * 1, -1)


@given(small_primes.flatmap(lambda p: schwartz_functions(p, mean_zero=True)))
def test_mean_zero_reconstruction(f):
    lo, hi = support_window(f)
    table = coefficient_table(f, lo, hi)
    assert table.energy() == pytest.approx(norm_sq(f), abs=1e-9)
    assert norm_sq(synthesize(table) - f) <= 1e-18 + 1e-12 * norm_sq(f)


@given(small_primes.flatmap(lambda p: schwartz_functions(p)))
def test_parseval_with_tail(f):
    lo, hi = support_window(f)
    table = coefficient_table(f, lo, hi)
    assert table.energy() + tail_energy(f, hi) == pytest.approx(norm_sq(f), abs=1e-9)
