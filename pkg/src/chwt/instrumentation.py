"""Operation tallies.

Additions and subtractions count as one operation each; multiplications are
counted separately.  A tally is owned by a single call chain; transforms take
``tally=None`` by default, which skips all bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpTally:
    additions: int = 0
    multiplications: int = 0

    def reset(self) -> None:
        self.additions = 0
        self.multiplications = 0

    def read(self) -> tuple[int, int]:
        return self.additions, self.multiplications

    def add(self, additions: int = 0, multiplications: int = 0) -> None:
        self.additions += int(additions)
        self.multiplications += int(multiplications)

    def merge(self, other: OpTally) -> None:
        self.add(other.additions, other.multiplications)

    def __str__(self) -> str:
        return f"additions={self.additions} multiplications={self.multiplications}"


def record(tally: OpTally | None, additions: int = 0, multiplications: int = 0) -> None:
    if tally is not None:
        tally.add(additions, multiplications)
