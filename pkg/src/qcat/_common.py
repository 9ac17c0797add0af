"""Shared plumbing: search budgets and verdict records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration runs past its node or size budget."""


class PreconditionError(ValueError):
    """An operation was called on input that does not meet its precondition."""


@dataclass
class Budget:
    """Counts search nodes; raises :class:`BudgetExceeded` past the limits.

    ``max_level_size`` bounds the number of simplices per level that the
    searches are willing to scan.
    """

    max_nodes: int = 10**6
    max_level_size: int | None = 200
    nodes: int = 0

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exceeded")

    def check_size(self, what: str, size: int) -> None:
        if self.max_level_size is not None and size > self.max_level_size:
            raise BudgetExceeded(
                f"{what}: level size {size} exceeds budget {self.max_level_size}"
            )


def tick(budget: Budget | None, n: int = 1) -> None:
    if budget is not None:
        budget.tick(n)


@dataclass
class Verdict:
    """Boolean outcome of a finite check, with the evidence behind it."""

    holds: bool
    witness: Any = None
    detail: str = ""
    dmax: int | None = None
    extra: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds
