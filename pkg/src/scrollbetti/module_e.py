"""Betti tables of E(r, s, t), the module of twisted sections of O(-t) on a
rational normal curve of degree s in P^r, and the tables derived from them.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .combinatorics import binom, ceil_div
from .errors import InvalidSpec, POutOfRange, ROutOfRange
from .table import BettiTable

__all__ = [
    "ModuleESpec",
    "regularity_e",
    "betti_e",
    "betti_rnc_module",
    "betti_scroll_surface",
]


@dataclass(frozen=True)
class ModuleESpec:
    """Parameters of E(r, s, t): ambient P^r, curve degree s, twist t."""

    r: int
    s: int
    t: int

    def __post_init__(self):
        if self.r < 3:
            raise InvalidSpec(f"E(r,s,t) needs r >= 3, got r={self.r}")
        if not 1 <= self.s <= self.r:
            raise InvalidSpec(f"E(r,s,t) needs 1 <= s <= r, got s={self.s}, r={self.r}")
        if self.t < 2:
            raise InvalidSpec(f"E(r,s,t) is only defined for t >= 2, got t={self.t}")

    @property
    def split(self) -> tuple[int, int]:
        """The unique ``(p, ell)`` with ``t = p + ell*s`` and ``2 <= p <= s+1``."""
        ell = ceil_div(self.t - 1, self.s) - 1
        return self.t - ell * self.s, ell

    def __str__(self) -> str:
        return f"E({self.r},{self.s},{self.t})"


def regularity_e(spec: ModuleESpec) -> int:
    return ceil_div(spec.t - 1, spec.s) + 1


def _first_row(r: int, s: int, p: int, i: int) -> int:
    return sum((s + 1 - p - k) * binom(s, k) * binom(r - s, i - k) for k in range(0, s + 2 - p))


def _second_row(r: int, s: int, p: int, i: int) -> int:
    return sum(
        (k + p - s - 1) * binom(s, k) * binom(r - s, i + 1 - k)
        for k in range(s + 2 - p, i + 2)
    )


def _betti_e(r: int, s: int, t: int) -> BettiTable:
    # No r >= 3 check here: the hyperplane-section terms need E(2,2,p) on the quadric.
    ell = ceil_div(t - 1, s) - 1
    p = t - ell * s
    entries = {}
    for i in range(r + 1):
        entries[(i, ell + 1)] = _first_row(r, s, p, i)
        entries[(i, ell + 2)] = _second_row(r, s, p, i)
    table = BettiTable(r + 1, entries)
    if any(table[(r, j)] for j in (ell + 1, ell + 2)):
        warnings.warn(f"E({r},{s},{t}) has a nonzero entry in column {r}", RuntimeWarning)
    return table


def betti_e(spec: ModuleESpec) -> BettiTable:
    """Closed-form Betti table of E(r,s,t), supported on rows ell+1 and ell+2.

    >>> betti_e(ModuleESpec(6, 2, 3)).row(2)
    [2, 10, 20, 20, 10, 2, 0]
    """
    return _betti_e(spec.r, spec.s, spec.t)


def betti_rnc_module(r: int, p: int) -> BettiTable:
    """Table of E(r-1, r-1, p) padded to r+1 columns, for 2 <= p <= r.

    Evaluated from the dedicated two-row formula for a rational normal curve
    of degree r-1 in P^(r-1) rather than from the general sum.
    """
    if r < 3:
        raise ROutOfRange(f"r must be >= 3, got {r}")
    if not 2 <= p <= r:
        raise POutOfRange(f"need 2 <= p <= r={r}, got p={p}")
    entries = {}
    for i in range(r + 1):
        if i <= r - 1 - p:
            entries[(i, 1)] = (r - p - i) * binom(r - 1, i)
        else:
            entries[(i, 2)] = (i + 1 + p - r) * binom(r - 1, i + 1)
    return BettiTable(r + 1, entries)


def betti_scroll_surface(r: int) -> BettiTable:
    """Single quadric row of any surface of minimal degree in P^r."""
    if r < 3:
        raise ROutOfRange(f"surface of minimal degree needs r >= 3, got {r}")
    return BettiTable(r + 1, {(i, 2): (i + 1) * binom(r - 1, i + 2) for i in range(r + 1)})
