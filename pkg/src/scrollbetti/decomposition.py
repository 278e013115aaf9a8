"""Assemble beta(X) for X = aH + bF on S(a1, a2) as a labeled sum of simpler tables.

Every supported divisor is written as

    beta(S) + (middle term, shifted) + sum of shifted E(r, a1, q_l) tables,

where the middle term depends on epsilon. The summands keep their labels so
the CLI can print the decomposition term by term.
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import binom
from .errors import NoClosedForm, ROutOfRange, UnsupportedCase
from .module_e import ModuleESpec, betti_e, betti_rnc_module, betti_scroll_surface
from .scroll import (
    DivisorInvariants,
    Route,
    RouteVerdict,
    ScrollDivisor,
    decomposition_route,
    invariants,
)
from .table import BettiTable

__all__ = [
    "Summand",
    "Decomposition",
    "betti_e_h_plus_eps_f",
    "betti_e_h2f_via_curve",
    "decompose",
    "evaluate_split_formula",
    "evaluate_residual_formula",
    "h_plus_2f_formula",
]


@dataclass(frozen=True)
class Summand:
    label: str
    provenance: str
    table: BettiTable


@dataclass(frozen=True)
class Decomposition:
    divisor: ScrollDivisor
    route: RouteVerdict
    invariants: DivisorInvariants
    summands: tuple[Summand, ...]
    total: BettiTable

    def summand_sum(self) -> BettiTable:
        return _sum(s.table for s in self.summands)

    @property
    def regularity_consistent(self) -> bool:
        """Top nonzero row of the total equals the predicted regularity of X."""
        return self.total.top_row() == self.invariants.reg_x


def _sum(tables) -> BettiTable:
    tables = list(tables)
    out = BettiTable.zero(tables[0].columns)
    for t in tables:
        out = out + t
    return out


def h_plus_2f_formula(r: int) -> BettiTable:
    """Explicit two-row table of E(H+2F) on S(2, r-3).

    Stated for r >= 6; it is also evaluated at r = 5 to reproduce the
    (incorrect) formula table of the balanced scroll S(2,2).
    """
    if r < 5:
        raise ROutOfRange(f"H+2F formula needs r >= 5, got {r}")
    entries = {}
    for i in range(r + 1):
        if i <= r - 4:
            entries[(i, 2)] = (
                binom(r - 2, i - 2) - binom(r + 1, i + 1) + (i + 2) * binom(r - 1, i + 1)
            )
        if i <= r - 5:
            entries[(i, 3)] = binom(r - 2, i - 1)
        elif i <= r - 3:
            entries[(i, 3)] = binom(i + 3, r - 1 - i)
        elif i <= r - 1:
            entries[(i, 3)] = binom(r + 1, i + 2)
    return BettiTable(r + 1, entries)


def betti_e_h_plus_eps_f(a1: int, a2: int, eps: int) -> BettiTable:
    """beta(E(H + eps*F)): the part of beta(M) beyond beta(S) for a curve M ≡ H + eps*F.

    For ``a1+1 <= eps <= a2+1`` it splits as
    ``beta(E(r-1,r-1,a1+eps))[1] + beta(E(r,a1,a1+eps))``; for a1 = 2, eps = 2
    and a2 >= 3 the explicit table is used. Other cases have no known formula.
    """
    if not 1 <= a1 <= a2:
        raise ValueError(f"need 1 <= a1 <= a2, got ({a1},{a2})")
    if not 2 <= eps <= a2 + 1:
        raise ValueError(f"epsilon must lie in [2, {a2 + 1}], got {eps}")
    r = a1 + a2 + 1
    if a1 + 1 <= eps:
        return betti_rnc_module(r, a1 + eps).shift(1) + betti_e(ModuleESpec(r, a1, a1 + eps))
    if a1 == 2 and eps == 2 and a2 >= 3:
        return h_plus_2f_formula(r)
    raise NoClosedForm(f"no closed form for E(H+{eps}F) on S({a1},{a2})")


def _second_betti_of_curve(r: int, i: int) -> int:
    # degree r+1 smooth rational curve on S(2, r-3), cubic syzygies
    if 0 <= i <= r - 5:
        return binom(r - 2, i - 1)
    if r - 4 <= i <= r - 3:
        return binom(i + 3, r - 1 - i)
    if r - 2 <= i <= r - 1:
        return binom(r + 1, i + 2)
    return 0


def _quadric_betti_of_curve(r: int, i: int) -> int:
    if i == 0:
        return binom(r, 2) - 2
    if 1 <= i <= r - 2:
        return (
            _second_betti_of_curve(r, i - 1)
            + r * binom(r - 1, i + 1)
            - binom(r - 1, i + 2)
            - binom(r + 1, i + 1)
        )
    return 0


def betti_e_h2f_via_curve(r: int) -> BettiTable:
    """beta(E(H+2F)) on S(2, r-3) as beta(C) - beta(S), with beta(C) taken from the
    known Betti numbers of a smooth rational curve of degree r+1 in P^r.

    Independent of :func:`h_plus_2f_formula`; used as a cross-check.
    """
    if r < 6:
        raise ROutOfRange(f"need r >= 6, got {r}")
    curve = BettiTable(
        r + 1,
        {
            **{(i, 2): _quadric_betti_of_curve(r, i) for i in range(r + 1)},
            **{(i, 3): _second_betti_of_curve(r, i) for i in range(r + 1)},
        },
    )
    return curve - betti_scroll_surface(r)


def _q_summands(x: ScrollDivisor, qs) -> list[Summand]:
    out = []
    for ell, q in enumerate(qs, start=1):
        spec = ModuleESpec(x.r, x.a1, q)
        p, shift = spec.split
        out.append(
            Summand(
                f"E({x.r},{x.a1},{q}) = E({x.r},{x.a1},{p})[{shift}]",
                f"minimal-section step {ell}",
                betti_e(spec),
            )
        )
    return out


def _surface_summand(x: ScrollDivisor) -> Summand:
    return Summand("β(S)", "quadrics through the scroll", betti_scroll_surface(x.r))


def _split_summands(x: ScrollDivisor, inv: DivisorInvariants) -> list[Summand]:
    r, p, shift = x.r, x.a1 + inv.epsilon, x.a + inv.delta - 1
    middle = Summand(
        f"E({r - 1},{r - 1},{p})[{shift}]",
        "hyperplane section of the ACM curve X + δ·C0",
        betti_rnc_module(r, p).shift(shift),
    )
    return [_surface_summand(x), middle, *_q_summands(x, inv.q)]


def _residual_summands(x: ScrollDivisor, inv: DivisorInvariants, residual: BettiTable, name: str):
    shift = x.a + inv.delta - 2
    middle = Summand(f"{name}[{shift}]", "residual curve term", residual.shift(shift))
    return [_surface_summand(x), middle, *_q_summands(x, inv.q[:-1])]


def _balanced_total(c: int, a: int, u: int) -> BettiTable:
    r = 2 * c + 1
    top = a + u + 1
    entries = {(i, top): (i + 1) * binom(2 * c, i + 1) + u * c * binom(2 * c, i) for i in range(r + 1)}
    return betti_scroll_surface(r) + BettiTable(r + 1, entries)


def _balanced_summands(x: ScrollDivisor) -> tuple[list[Summand], BettiTable]:
    c, a = x.a1, x.a
    u = (x.b - 1) // c
    r, shift = x.r, a + u - 1
    summands = [
        _surface_summand(x),
        Summand(
            f"E({2 * c},{2 * c},{2 * c + 1})[{shift}]",
            "hyperplane section of the ACM curve (a+u)H + F",
            betti_rnc_module(r, 2 * c + 1).shift(shift),
        ),
        Summand(
            f"{u} × E({r},{c},{c + 1})[{shift}]",
            f"{u} minimal-section steps",
            u * betti_e(ModuleESpec(r, c, c + 1)).shift(shift),
        ),
    ]
    return summands, _balanced_total(c, a, u)


def decompose(x: ScrollDivisor) -> Decomposition:
    verdict = decomposition_route(x)
    inv = invariants(x)
    if verdict.route is Route.SPLIT:
        summands = _split_summands(x, inv)
        total = None
    elif verdict.route is Route.H_PLUS_2F:
        summands = _residual_summands(x, inv, betti_e_h_plus_eps_f(2, x.a2, 2), "E(H+2F)")
        total = None
    elif verdict.route is Route.BALANCED:
        summands, total = _balanced_summands(x)
    else:
        raise UnsupportedCase(verdict.reason)

    summed = _sum(s.table for s in summands)
    if total is None:
        total = summed
    elif total != summed:
        raise AssertionError(f"closed form and summands disagree for {x}")
    total.assert_nonnegative()
    return Decomposition(x, verdict, inv, tuple(summands), total)


def evaluate_split_formula(x: ScrollDivisor) -> BettiTable:
    """Right-hand side of the split decomposition, evaluated without checking
    its hypotheses. Outside them it need not equal beta(X)."""
    return _sum(s.table for s in _split_summands(x, invariants(x)))


def evaluate_residual_formula(x: ScrollDivisor, residual: BettiTable) -> BettiTable:
    """``beta(S) + residual[a+delta-2] + sum_{l<delta} beta(E(r,a1,q_l))`` for a
    caller-supplied residual table, without checking hypotheses."""
    return _sum(s.table for s in _residual_summands(x, invariants(x), residual, "residual"))
