"""Exact binomials and ceiling division with the conventions used by every formula."""
from __future__ import annotations

from math import comb

from .errors import NegativeUpperIndex, NonpositiveDenominator


def binom(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k < 0 or k > n.

    A negative upper index never occurs in the Betti formulas, so it is
    treated as a transcription bug rather than extended.
    """
    if n < 0:
        raise NegativeUpperIndex(f"binom({n}, {k}): upper index must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def ceil_div(num: int, den: int) -> int:
    if den < 1:
        raise NonpositiveDenominator(f"ceil_div denominator must be >= 1, got {den}")
    return -(-num // den)
