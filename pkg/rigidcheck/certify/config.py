from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Tuple

AllLevels = Literal["all"]


@dataclass(slots=True, frozen=True)
class VerifyConfig:
    """Tunables shared by certification, sweeps and the analytic suites."""

    precision: int = 128
    max_precision: int = 512
    max_depth: int = 40
    max_leaves: int = 200_000
    levels: AllLevels | Tuple[int, ...] = "all"
    workers: int = 1
    derivative_points: int = 20
    seed: int = 0

    def __post_init__(self) -> None:
        if self.precision < 32:
            raise ValueError(f"precision must be at least 32 bits, got {self.precision}")
        if self.max_precision < self.precision:
            raise ValueError(
                f"max_precision ({self.max_precision}) must not be below precision ({self.precision})"
            )
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be at least 1, got {self.max_depth}")
        if self.max_leaves < 1:
            raise ValueError(f"max_leaves must be positive, got {self.max_leaves}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.derivative_points < 1:
            raise ValueError(f"derivative_points must be positive, got {self.derivative_points}")
        if self.levels != "all":
            levels = tuple(self.levels)
            if not levels or any(not isinstance(l, int) or l < 0 for l in levels):
                raise ValueError(f"levels must be 'all' or non-negative integers, got {self.levels!r}")
            object.__setattr__(self, "levels", tuple(sorted(set(levels))))

    def levels_for(self, k: int) -> Tuple[int, ...]:
        """Singularity levels to examine for a tuple of length k."""

        if self.levels == "all":
            return tuple(range(k + 1))
        return tuple(l for l in self.levels if l <= k)
