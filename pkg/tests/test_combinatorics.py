import pytest
from hypothesis import given, strategies as st

from scrollbetti.combinatorics import binom, ceil_div
from scrollbetti.errors import NegativeUpperIndex, NonpositiveDenominator


@pytest.mark.parametrize("n, k, want", [(5, 2, 10), (3, 5, 0), (4, -1, 0), (0, 0, 1), (7, 7, 1)])
def test_binom_examples(n, k, want):
    assert binom(n, k) == want


def test_binom_rejects_negative_upper_index():
    with pytest.raises(NegativeUpperIndex):
        binom(-1, 0)


def test_binom_is_exact_for_large_arguments():
    assert binom(200, 100) == 90548514656103281165404177077484163874504589675413336841320


@given(st.integers(2, 64), st.data())
def test_pascal(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


@pytest.mark.parametrize("num, den, want", [(10, 3, 4), (9, 3, 3), (-1, 3, 0), (-3, 3, -1), (0, 5, 0)])
def test_ceil_div_examples(num, den, want):
    assert ceil_div(num, den) == want


@pytest.mark.parametrize("den", [0, -2])
def test_ceil_div_rejects_nonpositive_denominator(den):
    with pytest.raises(NonpositiveDenominator):
        ceil_div(1, den)


@given(st.integers(-10**6, 10**6), st.integers(1, 1000))
def test_ceil_div_characterization(n, d):
    q = ceil_div(n, d)
    assert (q - 1) * d < n <= q * d
