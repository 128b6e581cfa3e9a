import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from padicwave.padic import CosetRep, coset_from_index  # noqa: E402
from padicwave.schwartz import SchwartzFunction  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PRIMES = (2, 3, 5, 7)
primes = st.sampled_from(PRIMES)
small_primes = st.sampled_from((2, 3, 5))


@st.composite
def rationals(draw, p=None, nonzero=False):
    """Rationals with a mix of p-power and coprime denominators, possibly negative."""
    num = draw(st.integers(-10**6, 10**6).filter(lambda n: n != 0 or not nonzero))
    den = draw(st.integers(1, 10**4))
    return Fraction(num, den)


@st.composite
def finite_expansions(draw, p, low=-6, high=6, nonzero=False):
    """Nonnegative rationals with base-p digits in ``[low, high)``."""
    m = draw(st.integers(1 if nonzero else 0, p ** (high - low) - 1))
    return m * Fraction(p) ** low


@st.composite
def cosets(draw, p, depth=3):
    return coset_from_index(draw(st.integers(0, p**depth - 1)), p)


@st.composite
def schwartz_functions(draw, p, max_cells=8, mean_zero=False):
    k = draw(st.integers(-2, 2))
    levels = draw(st.integers(1, 2))
    idx = draw(st.lists(st.integers(0, p**levels - 1), min_size=1, max_size=max_cells, unique=True))
    low = Fraction(p) ** (k - levels)
    values = draw(st.lists(st.complex_numbers(max_magnitude=4, allow_nan=False, allow_infinity=False),
                           min_size=len(idx), max_size=len(idx)))
    cells = {low * m: complex(v) for m, v in zip(idx, values)}
    if mean_zero:
        last = low * idx[-1]
        cells[last] = 0j
        cells[last] = -sum(cells.values())
    return SchwartzFunction(p, k, cells)


# -- acceptance summary -----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
