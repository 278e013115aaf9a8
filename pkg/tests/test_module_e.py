import warnings

import pytest
from hypothesis import given, strategies as st

from scrollbetti.combinatorics import binom, ceil_div
from scrollbetti.errors import InvalidSpec, POutOfRange, ROutOfRange
from scrollbetti.module_e import (
    ModuleESpec,
    _betti_e,
    betti_e,
    betti_rnc_module,
    betti_scroll_surface,
    regularity_e,
)
from scrollbetti.table import BettiTable


@st.composite
def specs(draw, r_max=10):
    r = draw(st.integers(3, r_max))
    s = draw(st.integers(1, r))
    t = draw(st.integers(2, 4 * s + 6))
    return ModuleESpec(r, s, t)


@pytest.mark.parametrize("r, s, t, want", [(6, 2, 3, 2), (4, 1, 2, 2), (6, 2, 14, 8)])
def test_regularity(r, s, t, want):
    assert regularity_e(ModuleESpec(r, s, t)) == want


@pytest.mark.parametrize("args", [(2, 1, 2), (4, 0, 2), (4, 5, 2), (4, 2, 1)])
def test_invalid_spec(args):
    with pytest.raises(InvalidSpec):
        ModuleESpec(*args)


def test_split():
    assert ModuleESpec(6, 2, 13).split == (3, 5)
    assert ModuleESpec(6, 2, 12).split == (2, 5)
    assert ModuleESpec(4, 1, 2).split == (2, 0)


def test_published_small_cases():
    assert betti_e(ModuleESpec(4, 1, 2)) == BettiTable.from_rows(5, {2: [1, 3, 3, 1, 0]})
    assert betti_e(ModuleESpec(6, 2, 2)) == BettiTable.from_rows(
        7, {1: [1, 4, 6, 4, 1, 0, 0], 2: [0, 1, 4, 6, 4, 1, 0]}
    )
    assert betti_e(ModuleESpec(6, 2, 3)) == BettiTable.from_rows(7, {2: [2, 10, 20, 20, 10, 2, 0]})


@pytest.mark.parametrize("r", range(4, 12))
def test_one_dimensional_curve_formula(r):
    # s = 1: a line, single row s*C(r-1, i)
    want = BettiTable(r + 1, {(i, 2): binom(r - 1, i) for i in range(r + 1)})
    assert betti_e(ModuleESpec(r, 1, 2)) == want


@pytest.mark.parametrize("r", range(4, 12))
def test_conic_formulas(r):
    e2, e3 = betti_e(ModuleESpec(r, 2, 2)), betti_e(ModuleESpec(r, 2, 3))
    for i in range(r + 1):
        assert e2[(i, 1)] == binom(r - 2, i)
        assert e2[(i, 2)] == binom(r - 2, i - 1)
        assert e3[(i, 2)] == 2 * binom(r - 1, i)
        assert e3[(i, 1)] == 0


@pytest.mark.parametrize("r", range(4, 12))
def test_twisted_cubic_formulas(r):
    e2, e3 = betti_e(ModuleESpec(r, 3, 2)), betti_e(ModuleESpec(r, 3, 3))
    for i in range(r + 1):
        assert e2[(i, 1)] == 2 * binom(r - 2, i) + binom(r - 3, i - 1)
        assert e2[(i, 2)] == binom(r - 3, i - 2)
        assert e3[(i, 1)] == binom(r - 3, i)
        assert e3[(i, 2)] == 2 * binom(r - 2, i - 1) + binom(r - 3, i - 1)


def test_e_6_3_3_values():
    t = betti_e(ModuleESpec(6, 3, 3))
    assert t.row(1) == [1, 3, 3, 1, 0, 0, 0]
    assert t.row(2) == [0, 3, 11, 15, 9, 2, 0]
    dual = betti_e(ModuleESpec(6, 3, 2))
    assert [t[(i, 2)] for i in range(6)] == [dual[(5 - i, 1)] for i in range(6)]


@given(specs(), st.integers(1, 5))
def test_shift_law(spec, n):
    lifted = ModuleESpec(spec.r, spec.s, spec.t + n * spec.s)
    assert betti_e(lifted) == betti_e(spec).shift(n)


@given(specs())
def test_row_support_and_regularity(spec):
    t = betti_e(spec)
    low = ceil_div(spec.t - 1, spec.s)
    assert set(t.row_indices()) <= {low, low + 1}
    assert t.top_row() == regularity_e(spec)
    first_row_empty = all(v == 0 for v in t.row(low))
    assert first_row_empty == (spec.t % spec.s == 1 % spec.s)
    assert t.is_nonnegative()
    assert all(i < spec.r for (i, _), _v in t.items())


@given(specs(r_max=12))
def test_duality(spec):
    p, _ = spec.split
    if p > spec.s:
        return
    e = betti_e(ModuleESpec(spec.r, spec.s, p))
    f = betti_e(ModuleESpec(spec.r, spec.s, spec.s + 2 - p))
    for i in range(spec.r):
        assert e[(i, 1)] == f[(spec.r - 1 - i, 2)]
        assert e[(i, 2)] == f[(spec.r - 1 - i, 1)]


def test_column_r_never_populated():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for r in range(3, 13):
            for s in range(1, r + 1):
                for t in range(2, s + 2):
                    betti_e(ModuleESpec(r, s, t))


def test_rnc_module_examples():
    assert betti_rnc_module(4, 3) == BettiTable.from_rows(5, {1: [1, 0, 0, 0, 0], 2: [0, 3, 2, 0, 0]})
    assert betti_rnc_module(6, 5) == BettiTable.from_rows(
        7, {1: [1, 0, 0, 0, 0, 0, 0], 2: [0, 10, 20, 15, 4, 0, 0]}
    )


@pytest.mark.parametrize("r", range(3, 12))
def test_rnc_module_at_p_equal_r(r):
    t = betti_rnc_module(r, r)
    assert t.row(1) == [0] * (r + 1)
    assert t.row(2) == [(i + 1) * binom(r - 1, i + 1) for i in range(r + 1)]


@pytest.mark.parametrize("r", range(3, 12))
def test_rnc_module_agrees_with_general_formula(r):
    for p in range(2, r + 1):
        assert betti_rnc_module(r, p) == _betti_e(r - 1, r - 1, p).padded(r + 1)
        if r >= 4:
            assert betti_rnc_module(r, p) == betti_e(ModuleESpec(r - 1, r - 1, p)).padded(r + 1)


def test_rnc_module_errors():
    with pytest.raises(POutOfRange):
        betti_rnc_module(5, 1)
    with pytest.raises(POutOfRange):
        betti_rnc_module(5, 6)
    with pytest.raises(ROutOfRange):
        betti_rnc_module(2, 2)


@pytest.mark.parametrize(
    "r, row",
    [(3, [1, 0, 0, 0]), (4, [3, 2, 0, 0, 0]), (6, [10, 20, 15, 4, 0, 0, 0])],
)
def test_surface(r, row):
    assert betti_scroll_surface(r) == BettiTable.from_rows(r + 1, {2: row})


def test_surface_needs_r_at_least_3():
    with pytest.raises(ROutOfRange):
        betti_scroll_surface(2)
