"""Structured verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partition import Partition
from .rootdata import GroupType, Weight


def weight_json(w: Sequence[int]) -> list:
    return [c // 2 if c % 2 == 0 else c / 2 for c in w]


@dataclass
class Report:
    """Outcome of a verification: what was claimed, where, and what broke."""

    claim: str
    group: GroupType
    domain: dict
    checked: int
    mismatches: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "group": str(self.group),
            "domain": _jsonable(self.domain),
            "checked": self.checked,
            "passed": self.passed,
            "mismatches": _jsonable(self.mismatches),
            **{k: _jsonable(v) for k, v in self.extra.items()},
        }


def _jsonable(x):
    if isinstance(x, Weight):
        return weight_json(x)
    if isinstance(x, Partition):
        return list(x)
    if isinstance(x, GroupType):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x
