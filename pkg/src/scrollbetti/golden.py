"""Golden fixtures: published Betti tables stored as json next to the package.

The directory can be redirected with the ``SCROLLBETTI_FIXTURES`` environment
variable, which is how ``scrollbetti selftest`` is pointed at a custom store.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .table import BettiTable

__all__ = ["Fixture", "fixture_dir", "load_fixture", "load_all", "KINDS"]

ENV_VAR = "SCROLLBETTI_FIXTURES"
KINDS = ("divisor", "module_e", "surface", "reference", "formula_not_beta")


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    kind: str
    params: dict = field(hash=False)
    table: BettiTable
    reference: str | None = None

    @classmethod
    def from_dict(cls, data: dict) -> Fixture:
        kind = data["kind"]
        if kind not in KINDS:
            raise ValueError(f"fixture {data.get('name')!r}: unknown kind {kind!r}")
        return cls(
            name=data["name"],
            description=data.get("description", ""),
            kind=kind,
            params={k: int(v) for k, v in data["params"].items()},
            table=BettiTable.from_dict(data["table"]),
            reference=data.get("reference"),
        )


def fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("scrollbetti") / "fixtures"))


def load_fixture(name: str, directory: Path | None = None) -> Fixture:
    path = (directory or fixture_dir()) / f"{name}.json"
    return Fixture.from_dict(json.loads(path.read_text(encoding="utf-8")))


def load_all(directory: Path | None = None) -> dict[str, Fixture]:
    """All fixtures in the store, keyed by name, in sorted order."""
    directory = directory or fixture_dir()
    out = {}
    for path in sorted(directory.glob("*.json")):
        fx = Fixture.from_dict(json.loads(path.read_text(encoding="utf-8")))
        if fx.name in out:
            raise ValueError(f"duplicate fixture name {fx.name!r}")
        out[fx.name] = fx
    return out
