"""Verdicts shared by the CLI and the test suite.

Each check returns a :class:`Verdict`; nothing here raises on a failed check,
so callers decide whether a failure is fatal.
"""
from __future__ import annotations

from dataclasses import dataclass

from .decomposition import Decomposition, decompose
from .errors import OutsideKnownFormulas
from .golden import Fixture
from .module_e import ModuleESpec, betti_e, betti_scroll_surface, regularity_e
from .oracle import (
    default_bound,
    hf_ideal_of_x,
    hf_module_e,
    k_polynomial_check,
    koszul_oracle_betti_e,
)
from .scroll import ScrollDivisor, decomposition_route
from .table import BettiTable

__all__ = [
    "Verdict",
    "check_decomposition",
    "check_module_e",
    "check_fixture",
    "table_diff",
    "oracle_sweep",
    "k_polynomial_sweep",
]


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        tag = "Pass" if self.passed else "Fail"
        return f"{self.name}: {tag}" + (f" ({self.detail})" if self.detail else "")


def table_diff(lhs: BettiTable, rhs: BettiTable) -> dict[tuple[int, int], tuple[int, int]]:
    """Entries where the two tables differ, as ``{(i, j): (lhs, rhs)}``."""
    keys = {k for k, _ in lhs.items()} | {k for k, _ in rhs.items()}
    return {k: (lhs[k], rhs[k]) for k in sorted(keys, key=lambda k: (k[1], k[0])) if lhs[k] != rhs[k]}


def check_decomposition(dec: Decomposition) -> list[Verdict]:
    total = dec.total
    hf = hf_ideal_of_x(dec.divisor, default_bound(total))
    k = k_polynomial_check(total, hf, dec.divisor.r)
    top = total.top_row()
    return [
        Verdict("K-polynomial", k.passed, "" if k.passed else str(k)),
        Verdict(
            "regularity",
            dec.regularity_consistent,
            f"top row {top}, predicted {dec.invariants.reg_x}",
        ),
        Verdict("nonnegative", total.is_nonnegative()),
        Verdict("summands", dec.summand_sum() == total),
    ]


def check_module_e(spec: ModuleESpec, table: BettiTable | None = None) -> list[Verdict]:
    table = betti_e(spec) if table is None else table
    k = k_polynomial_check(table, hf_module_e(spec, default_bound(table)), spec.r)
    p, ell = spec.split
    koszul = koszul_oracle_betti_e(spec.r, spec.s, p).shift(ell)
    reg = regularity_e(spec)
    return [
        Verdict("K-polynomial", k.passed, "" if k.passed else str(k)),
        Verdict("Koszul oracle", koszul == table),
        Verdict("regularity", table.top_row() == reg, f"top row {table.top_row()}, predicted {reg}"),
    ]


def _expect_unsupported(params: dict) -> Verdict:
    try:
        decompose(ScrollDivisor(**params))
    except OutsideKnownFormulas as exc:
        return Verdict("refused", True, str(exc))
    return Verdict("refused", False, "engine produced a table for a case outside the formulas")


def check_fixture(fx: Fixture, store: dict[str, Fixture] | None = None) -> Verdict:
    """Compare a golden fixture with what the engine produces."""
    if fx.kind == "divisor":
        got = decompose(ScrollDivisor(**fx.params)).total
    elif fx.kind == "module_e":
        got = betti_e(ModuleESpec(**fx.params))
    elif fx.kind == "surface":
        got = betti_scroll_surface(**fx.params)
    elif fx.kind == "reference":
        v = _expect_unsupported(fx.params)
        return Verdict(fx.name, v.passed, v.detail)
    else:  # formula_not_beta
        if store is None or fx.reference not in store:
            return Verdict(fx.name, False, f"reference fixture {fx.reference!r} missing")
        diff = table_diff(fx.table, store[fx.reference].table)
        return Verdict(fx.name, bool(diff), f"differs from {fx.reference} at {sorted(diff)}")
    diff = table_diff(got, fx.table)
    return Verdict(fx.name, not diff, "" if not diff else f"engine vs fixture at {diff}")


def oracle_sweep(r_max: int = 10) -> list[Verdict]:
    """Koszul oracle against the closed form, for every 3 <= r <= r_max."""
    bad = []
    count = 0
    for r in range(3, r_max + 1):
        for s in range(1, r + 1):
            for p in range(2, s + 2):
                count += 1
                if koszul_oracle_betti_e(r, s, p) != betti_e(ModuleESpec(r, s, p)):
                    bad.append((r, s, p))
    return [Verdict(f"Koszul oracle, {count} tables", not bad, f"mismatch at {bad}" if bad else "")]


def k_polynomial_sweep(a1_max=3, a2_max=6, a_max=3, b_max=40) -> list[Verdict]:
    """K-polynomial identity for every supported divisor in the grid."""
    bad, count = [], 0
    for a1 in range(1, a1_max + 1):
        for a2 in range(a1, a2_max + 1):
            for a in range(a_max + 1):
                for b in range(2, b_max + 1):
                    if a == 0 and b <= a2:
                        continue
                    x = ScrollDivisor(a1, a2, a, b)
                    if not decomposition_route(x).supported:
                        continue
                    count += 1
                    dec = decompose(x)
                    if not all(v.passed for v in check_decomposition(dec)):
                        bad.append((a1, a2, a, b))
    return [Verdict(f"divisor checks, {count} divisors", not bad, f"failures at {bad}" if bad else "")]
