from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Tuple

# Singularity levels are plain integers 0 <= l <= k; l = 0 is the non-singular case.
SingularityLevel = int

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


class DegreeSyntaxError(ValueError):
    """Raised when a degree tuple written as text cannot be parsed."""


@dataclass(slots=True, frozen=True)
class DegreeTuple:
    """The k-uple d = (d_1, ..., d_k) of defining degrees, sorted non-decreasingly."""

    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.degrees:
            raise ValueError("Degree tuple must contain at least one degree")
        if any(not isinstance(d, int) or isinstance(d, bool) for d in self.degrees):
            raise ValueError(f"Degrees must be integers, got {self.degrees!r}")
        if any(d < 2 for d in self.degrees):
            raise ValueError(f"Every degree must be at least 2, got {self.degrees!r}")
        if any(a > b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError(f"Degrees must be sorted non-decreasingly, got {self.degrees!r}")

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeTuple":
        return cls(tuple(sorted(int(d) for d in degrees)))

    @classmethod
    def equal(cls, degree: int, k: int) -> "DegreeTuple":
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        return cls((degree,) * k)

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def M(self) -> int:
        return sum(self.degrees) - self.k

    @property
    def top(self) -> int:
        return self.degrees[-1]

    @property
    def is_equal_degree(self) -> bool:
        return self.degrees[0] == self.degrees[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def label(self) -> str:
        """Compact power notation, e.g. ``2^3,5``."""

        parts = []
        run_value, run_length = self.degrees[0], 0
        for d in self.degrees:
            if d == run_value:
                run_length += 1
                continue
            parts.append(_format_run(run_value, run_length))
            run_value, run_length = d, 1
        parts.append(_format_run(run_value, run_length))
        return ",".join(parts)


def _format_run(value: int, length: int) -> str:
    return str(value) if length == 1 else f"{value}^{length}"


def total_degree(d: DegreeTuple) -> int:
    """deg V = d_1 * ... * d_k, exact."""

    return prod(d.degrees)


def check_level(d: DegreeTuple, l: SingularityLevel) -> SingularityLevel:
    if not 0 <= l <= d.k:
        raise ValueError(f"Singularity level must satisfy 0 <= l <= k={d.k}, got {l}")
    return l


def parse_degrees(text: str) -> DegreeTuple:
    """Parse ``"2,3,3"``, ``"25^20"`` or mixed ``"2^3,5"`` into a sorted tuple."""

    if text is None or not text.strip():
        raise DegreeSyntaxError("Empty degree tuple")
    degrees: list[int] = []
    for raw in text.split(","):
        match = _TOKEN.match(raw)
        if match is None:
            raise DegreeSyntaxError(f"Malformed degree entry {raw!r} in {text!r}")
        value = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if count < 1:
            raise DegreeSyntaxError(f"Repeat count must be positive in {raw.strip()!r}")
        if value < 2:
            raise DegreeSyntaxError(f"Degree {value} is below 2 in {text!r}")
        degrees.extend([value] * count)
    return DegreeTuple.of(degrees)
