"""Divisor classes aH + bF on a smooth rational normal surface scroll S(a1, a2).

H is the hyperplane class, F a ruling line, and the minimal section C0 is
linearly equivalent to H - a2*F.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .combinatorics import ceil_div
from .errors import Degenerate, NotSmoothScroll, OutOfProblemScope

__all__ = [
    "ScrollDivisor",
    "DivisorInvariants",
    "Route",
    "RouteVerdict",
    "validate",
    "invariants",
    "decomposition_route",
    "regularity_drops",
    "minimal_section_splits",
]


def _nondegenerate(a2: int, a: int, b: int) -> bool:
    return (a == 0 and b > a2) or (a == 1 and b >= 1) or (a >= 2 and b >= -a * a2)


@dataclass(frozen=True)
class ScrollDivisor:
    """A nondegenerate divisor class ``aH + bF`` on ``S(a1, a2)`` in ``P^r``, r = a1+a2+1."""

    a1: int
    a2: int
    a: int
    b: int

    def __post_init__(self):
        if self.a1 < 1 or self.a1 > self.a2:
            raise NotSmoothScroll(f"need 1 <= a1 <= a2, got S({self.a1},{self.a2})")
        if not _nondegenerate(self.a2, self.a, self.b):
            raise Degenerate(
                f"{self.a}H+{self.b}F on S({self.a1},{self.a2}) is degenerate: need "
                f"a=0 and b>{self.a2}, or a=1 and b>=1, or a>=2 and b>={-self.a * self.a2}"
            )

    @property
    def r(self) -> int:
        return self.a1 + self.a2 + 1

    @property
    def in_problem_scope(self) -> bool:
        """True for the classes whose Betti tables are the subject of this library."""
        return (self.a == 0 and self.b > self.a2) or (self.a >= 1 and self.b >= 2)

    def plus_minimal_section(self) -> ScrollDivisor:
        """The class of X + C0, i.e. (a+1)H + (b-a2)F."""
        return ScrollDivisor(self.a1, self.a2, self.a + 1, self.b - self.a2)

    def __str__(self) -> str:
        return f"{self.a}H+{self.b}F on S({self.a1},{self.a2})"


def validate(a1: int, a2: int, a: int, b: int) -> ScrollDivisor:
    return ScrollDivisor(a1, a2, a, b)


@dataclass(frozen=True)
class DivisorInvariants:
    """Invariants driving the decomposition.

    ``delta`` measures the distance from the ACM property, ``epsilon`` is the
    residue of b in ``[2, a2+1]`` modulo a2, and ``q[l-1]`` is the
    intersection number of ``X + (l-1)C0`` with ``C0``.
    """

    delta: int
    epsilon: int
    q: tuple[int, ...]
    reg_x: int
    reg_y: int


def _require_scope(x: ScrollDivisor) -> None:
    if not x.in_problem_scope:
        raise OutOfProblemScope(
            f"{x} is outside the covered range (need a=0 and b>{x.a2}, or a>=1 and b>=2)"
        )


def invariants(x: ScrollDivisor) -> DivisorInvariants:
    _require_scope(x)
    a1, a2, a, b = x.a1, x.a2, x.a, x.b
    delta = ceil_div(b - 1, a2)
    epsilon = b - (delta - 1) * a2
    q = tuple(a1 * a + b + (a1 - a2) * (ell - 1) for ell in range(1, delta + 1))
    reg_x = a + 1 + ceil_div(b - 1, a1)
    # Y = X + C0 has class (a+1)H + (b-a2)F
    if b <= a2 + 1:
        reg_y = a + 2
    else:
        reg_y = a + 2 + ceil_div(b - a2 - 1, a1)
    return DivisorInvariants(delta, epsilon, q, reg_x, reg_y)


def _residue_in(b: int, a1: int, lo: int, hi: int) -> bool:
    return any((b - g) % a1 == 0 for g in range(lo, hi + 1))


def regularity_drops(x: ScrollDivisor) -> bool:
    """Sufficient condition for reg(X) > reg(X + C0)."""
    _require_scope(x)
    a1, a2, b = x.a1, x.a2, x.b
    if a1 + 2 <= b <= a2 + 1:
        return True
    return a2 >= a1 + 1 and b >= a2 + 2 and _residue_in(b, a1, 2, a2 - a1 + 1)


def minimal_section_splits(x: ScrollDivisor) -> bool:
    """Sufficient condition for beta(X) = beta(X + C0) + beta(E(r, a1, a1*a + b))."""
    _require_scope(x)
    a1, a2, b = x.a1, x.a2, x.b
    if a1 + 1 <= b <= a2 + 1:
        return True
    return a2 >= a1 and b >= a2 + 2 and _residue_in(b, a1, 1, a2 - a1 + 1)


class Route(Enum):
    # a2 >= 2*a1 - 1 and a1+1 <= epsilon <= a2+1: everything splits into E-tables
    SPLIT = "split"
    # a1 = 2, epsilon = 2, a2 >= 3: residual H+2F curve table is known explicitly
    H_PLUS_2F = "h-plus-2f"
    # a1 = a2 = c and b = uc + 1: two-row closed form
    BALANCED = "balanced"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class RouteVerdict:
    route: Route
    reason: str = ""

    @property
    def supported(self) -> bool:
        return self.route is not Route.UNSUPPORTED


def decomposition_route(x: ScrollDivisor) -> RouteVerdict:
    inv = invariants(x)
    a1, a2, eps = x.a1, x.a2, inv.epsilon
    wide = a2 >= 2 * a1 - 1
    if wide and a1 + 1 <= eps <= a2 + 1:
        return RouteVerdict(Route.SPLIT, f"a₂ ≥ 2a₁−1 and {a1 + 1} ≤ ε={eps} ≤ {a2 + 1}")
    if a1 == 2 and eps == 2 and a2 >= 3:
        return RouteVerdict(Route.H_PLUS_2F, "a₁ = 2, ε = 2, a₂ ≥ 3")
    if a1 == a2 and (x.b - 1) % a1 == 0:
        return RouteVerdict(Route.BALANCED, f"S({a1},{a1}) with b = {(x.b - 1) // a1}*{a1} + 1")

    reasons = []
    if not wide:
        reasons.append(f"a₂ ≥ 2a₁−1 fails ({a2} < {2 * a1 - 1})")
    else:
        reasons.append(
            f"ε={eps} ≤ a₁={a1}: no closed form is known for the residual "
            f"H+{eps}F term"
        )
    if a1 == a2:
        reasons.append(f"the balanced-scroll formula needs b ≡ 1 (mod {a1}), got b={x.b}")
    return RouteVerdict(Route.UNSUPPORTED, "; ".join(reasons))
