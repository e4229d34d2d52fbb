from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Tuple

from ..exact.degrees import DegreeTuple

ReductionMode = Literal["star", "plus"]


@dataclass(slots=True, frozen=True)
class RestrictedDegreeProfile:
    """Degrees m_1 <= ... <= m_M of the restricted equations g_1, g_2, ..."""

    m: Tuple[int, ...]
    source: DegreeTuple

    def __len__(self) -> int:
        return len(self.m)

    def __getitem__(self, e: int) -> int:
        """1-based access, ``profile[e] == m_e``."""

        if not 1 <= e <= len(self.m):
            raise IndexError(f"Index e={e} outside 1..{len(self.m)}")
        return self.m[e - 1]


@lru_cache(maxsize=1024)
def restricted_degrees(d: DegreeTuple) -> RestrictedDegreeProfile:
    """Each d_i contributes the degrees 2..d_i."""

    m = sorted(j for degree in d for j in range(2, degree + 1))
    return RestrictedDegreeProfile(tuple(m), d)


def restricted_degrees_by_formula(d: DegreeTuple) -> Tuple[int, ...]:
    """m_e = min{ j : sum_{alpha=2}^{j} #{i : d_i >= alpha} >= e }, from the counts k_beta."""

    k_beta = Counter(d.degrees)
    at_least = {alpha: sum(n for beta, n in k_beta.items() if beta >= alpha) for alpha in range(2, d.top + 1)}
    m = []
    running = 0
    for j in range(2, d.top + 1):
        previous, running = running, running + at_least[j]
        m.extend([j] * (running - previous))
    return tuple(m)


def star_tuple(k: int, M: int) -> DegreeTuple:
    """The tuple with r degrees a + 1 and k - r degrees a + 2, where M = ka + (k - r)."""

    if k < 1 or M < k:
        raise ValueError(f"Need 1 <= k <= M, got k={k}, M={M}")
    a = (M - 1) // k
    r = k - (M - k * a)
    return DegreeTuple((a + 1,) * r + (a + 2,) * (k - r))


def reduce_tuple(d: DegreeTuple, mode: ReductionMode) -> DegreeTuple:
    """The reductions d* (same k and M) and d+ (all degrees a + 1, M+ = ka).

    ``a`` and ``r`` solve M = ka + (k - r) with 0 <= r <= k - 1. When a = 0
    (every degree is 2) the plus reduction would leave no degree >= 2 and the
    tuple is returned unchanged.
    """

    a = (d.M - 1) // d.k
    if mode == "star":
        return star_tuple(d.k, d.M)
    if mode == "plus":
        if a == 0:
            return d
        return DegreeTuple.equal(a + 1, d.k)
    raise ValueError(f"Unknown reduction mode {mode!r}; expected 'star' or 'plus'")
