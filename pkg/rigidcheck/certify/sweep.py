"""Grid sweeps: one :class:`Certificate` per (k, M, shape) grid point."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from typing import Dict, Iterable, List, Literal, Sequence, Tuple

from ..bounds.profile import star_tuple
from ..exact.degrees import DegreeTuple
from .checks import Certificate, certify_tuple, min_hypothesis_M
from .config import VerifyConfig

logger = logging.getLogger(__name__)

MRule = Literal["min_multiple", "min_valid", "range", "block"]
Shape = Literal["equal", "star", "explicit"]

M_RULES = ("min_multiple", "min_valid", "range", "block")
SHAPES = ("equal", "star", "explicit")


def min_multiple_M(k: int) -> int:
    """Smallest multiple of k that is at least 8 k log k."""

    lowest = min_hypothesis_M(k)
    return -(-lowest // k) * k


@dataclass(slots=True, frozen=True)
class GridSpec:
    """Which instances a sweep visits.

    ``m_rule`` picks M for every k: the smallest multiple of k above
    8 k log k, the smallest admissible integer, an explicit ``m_values``
    list, or the block of k consecutive values starting at the smallest
    multiple (so the star shape runs through every remainder r).
    ``shape="explicit"`` ignores the k and M rules and visits ``tuples``.
    """

    k_values: Tuple[int, ...] = ()
    m_rule: MRule = "min_multiple"
    m_values: Tuple[int, ...] = ()
    shape: Shape = "equal"
    tuples: Tuple[DegreeTuple, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.m_rule not in M_RULES:
            raise ValueError(f"Unknown M rule {self.m_rule!r}; expected one of {M_RULES}")
        if self.shape not in SHAPES:
            raise ValueError(f"Unknown shape {self.shape!r}; expected one of {SHAPES}")
        if any(k < 1 for k in self.k_values):
            raise ValueError(f"k values must be positive, got {self.k_values!r}")
        if self.m_rule == "range" and self.shape != "explicit" and not self.m_values:
            raise ValueError("The 'range' M rule needs explicit m_values")
        object.__setattr__(self, "k_values", tuple(self.k_values))
        object.__setattr__(self, "m_values", tuple(self.m_values))
        object.__setattr__(self, "tuples", tuple(self.tuples))

    @classmethod
    def k_range(cls, k_lo: int, k_hi: int, **kwargs) -> "GridSpec":
        """Grid over k_lo..k_hi inclusive; an empty range gives an empty grid."""

        return cls(k_values=tuple(range(k_lo, k_hi + 1)), **kwargs)

    def m_values_for(self, k: int) -> Tuple[int, ...]:
        if self.m_rule == "min_valid":
            return (min_hypothesis_M(k),)
        if self.m_rule == "min_multiple":
            return (min_multiple_M(k),)
        if self.m_rule == "block":
            start = min_multiple_M(k)
            return tuple(range(start, start + k))
        return tuple(M for M in self.m_values if M >= k)

    def points(self) -> List[DegreeTuple]:
        """Distinct grid tuples in canonical (k, M, degrees) order."""

        if self.shape == "explicit":
            found = set(self.tuples)
        else:
            found = set()
            for k in self.k_values:
                for M in self.m_values_for(k):
                    if self.shape == "star":
                        found.add(star_tuple(k, M))
                    elif M % k == 0:
                        found.add(DegreeTuple.equal(M // k + 1, k))
        return sorted(found, key=lambda d: (d.k, d.M, d.degrees))

    def to_dict(self) -> Dict[str, object]:
        return {
            "k_values": list(self.k_values),
            "m_rule": self.m_rule,
            "m_values": list(self.m_values),
            "shape": self.shape,
            "tuples": [d.label() for d in self.tuples],
        }


def _run_serial(points: Sequence[DegreeTuple], config: VerifyConfig) -> Iterable[Certificate]:
    for d in points:
        yield certify_tuple(d, config)


def sweep(spec: GridSpec, config: VerifyConfig | None = None) -> List[Certificate]:
    """Certify every grid point; the result is sorted by (k, M, degrees)."""

    config = config or VerifyConfig()
    points = spec.points()
    if not points:
        raise ValueError(f"Sweep grid is empty: {spec.to_dict()}")

    logger.debug("sweeping %d grid points with %d worker(s)", len(points), config.workers)
    if config.workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            certificates = list(executor.map(certify_tuple, points, repeat(config), chunksize=4))
    else:
        certificates = list(_run_serial(points, config))

    certificates.sort(key=Certificate.sort_key)
    tally = summarize(certificates)
    logger.info(
        "sweep finished: %d certificates (%s)",
        len(certificates),
        ", ".join(f"{count} {status}" for status, count in tally.items() if count),
    )
    return certificates


def summarize(certificates: Iterable[Certificate]) -> Dict[str, int]:
    """Counts of overall statuses, every status present (zero if unseen)."""

    counts = Counter(certificate.overall for certificate in certificates)
    return {status: counts.get(status, 0) for status in ("pass", "fail", "inconclusive", "out_of_hypotheses")}
