"""Independent checks on Betti tables.

Two routes, neither of which uses the closed formulas being checked:

* Hilbert functions from sheaf data, compared with a Betti table through the
  K-polynomial identity ``sum (-1)^i b_ij z^(i+j) = (1-z)^(r+1) * HS_M(z)``.
  This is necessary but not sufficient: consecutive cancellation hides errors.
* A brute-force Koszul computation of beta(E(r,s,p)) that enumerates wedge
  powers of ``O(-1)^s + O^(r-s)`` on P^1 subset by subset.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import InsufficientBound, POutOfRange
from .module_e import ModuleESpec
from .scroll import ScrollDivisor
from .table import BettiTable

__all__ = [
    "HilbertFunction",
    "KCheck",
    "h0_scroll",
    "hf_module_e",
    "hf_section_module",
    "hf_ideal_of_x",
    "k_polynomial_check",
    "koszul_oracle_betti_e",
    "default_bound",
]


@dataclass(frozen=True)
class HilbertFunction:
    """``values[n]`` is the dimension in degree ``n`` for ``0 <= n <= bound``;
    every module handled here vanishes in negative degrees."""

    values: tuple[int, ...]

    @property
    def bound(self) -> int:
        return len(self.values) - 1

    def __call__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.bound:
            raise InsufficientBound(f"degree {n} beyond tabulated bound {self.bound}")
        return self.values[n]


def default_bound(table: BettiTable) -> int:
    top = table.top_row()
    return (top if top is not None else 0) + table.r + 2


def h0_scroll(a1: int, a2: int, c: int, d: int) -> int:
    """h^0(S, cH + dF) on S(a1, a2), by pushing forward to P^1."""
    if c < 0:
        return 0
    return sum(max(0, j * a1 + (c - j) * a2 + d + 1) for j in range(c + 1))


def hf_module_e(spec: ModuleESpec, bound: int) -> HilbertFunction:
    # E(r,s,t)_n = H^0(P^1, O(ns - t))
    return HilbertFunction(tuple(max(0, n * spec.s - spec.t + 1) for n in range(bound + 1)))


def hf_section_module(a1: int, a2: int, a: int, b: int, bound: int) -> HilbertFunction:
    """Hilbert function of the module of twisted sections of O_S(-aH - bF)."""
    return HilbertFunction(tuple(h0_scroll(a1, a2, n - a, -b) for n in range(bound + 1)))


def hf_ideal_of_x(x: ScrollDivisor, bound: int) -> HilbertFunction:
    """dim I(X)_n = dim I(S)_n + h^0(S, (n-a)H - bF); S is projectively normal."""
    r = x.r
    if h0_scroll(x.a1, x.a2, 1, 0) != r + 1:
        raise RuntimeError("scroll pushforward formula fails h^0(S, H) = r + 1")
    vals = []
    for n in range(bound + 1):
        ideal_s = comb(n + r, r) - h0_scroll(x.a1, x.a2, n, 0)
        vals.append(ideal_s + h0_scroll(x.a1, x.a2, n - x.a, -x.b))
    return HilbertFunction(tuple(vals))


@dataclass(frozen=True)
class KCheck:
    passed: bool
    first_mismatch: int | None = None
    expected: int | None = None
    found: int | None = None

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        if self.passed:
            return "Pass"
        return (
            f"Fail at degree {self.first_mismatch}: table gives {self.found}, "
            f"Hilbert series gives {self.expected}"
        )


def k_polynomial_check(table: BettiTable, hf: HilbertFunction, r: int) -> KCheck:
    if table.columns != r + 1:
        raise ValueError(f"table has {table.columns} columns, expected {r + 1}")
    need = default_bound(table)
    if hf.bound < need:
        raise InsufficientBound(f"Hilbert function bound {hf.bound} < required {need}")
    lhs: Counter[int] = Counter()
    for (i, j), v in table.items():
        lhs[i + j] += (-1) ** i * v
    low = min([0, *lhs.keys()])
    for d in range(low, hf.bound + 1):
        rhs = sum((-1) ** k * comb(r + 1, k) * hf(d - k) for k in range(r + 2))
        if lhs[d] != rhs:
            return KCheck(False, d, rhs, lhs[d])
    return KCheck(True)


@lru_cache(maxsize=None)
def _wedge_degrees(r: int, s: int) -> dict[int, Counter]:
    """For each m, the splitting type of the m-th wedge power of
    ``O(-1)^s + O^(r-s)``, as ``{-degree: multiplicity}``, by listing subsets."""
    kinds = [1] * s + [0] * (r - s)
    out = {}
    for m in range(r + 1):
        out[m] = Counter(sum(c) for c in combinations(kinds, m))
    return out


def _h1_p1(d: int) -> int:
    return max(0, -d - 1)


def _h1_wedge(r: int, s: int, m: int, twist: int) -> int:
    """h^1(P^1, wedge^m(O(-1)^s + O^(r-s)) tensor O(twist))."""
    if m < 0 or m > r:
        return 0
    return sum(mult * _h1_p1(twist - k) for k, mult in _wedge_degrees(r, s)[m].items())


def koszul_oracle_betti_e(r: int, s: int, p: int) -> BettiTable:
    """beta(E(r,s,p)) from the Koszul cohomology sequence, rows 1 and 2.

    The curve S(s) is a P^1 on which the syzygy bundle of P^r restricts to
    ``O(-1)^s + O^(r-s)`` and O_{P^r}(1) restricts to O(s).
    """
    if not 1 <= s <= r:
        raise POutOfRange(f"need 1 <= s <= r, got s={s}, r={r}")
    if not 2 <= p <= s + 1:
        raise POutOfRange(f"need 2 <= p <= s+1={s + 1}, got p={p}")
    entries = {}
    for i in range(r + 1):
        entries[(i, 1)] = (
            _h1_wedge(r, s, i + 1, -p)
            - comb(r + 1, i + 1) * _h1_p1(-p)
            + _h1_wedge(r, s, i, s - p)
        )
        entries[(i, 2)] = _h1_wedge(r, s, i + 1, s - p)
    return BettiTable(r + 1, entries)
