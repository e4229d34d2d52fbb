"""Closed-form codimension bounds, evaluated exactly from named integer parameters."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Mapping, Tuple

from ..exact.slopes import binomial


class BoundName(str, Enum):
    A = "A"
    THM01 = "thm01"
    THM02 = "thm02"
    THM04 = "thm04"
    THM31_TARGET = "thm31_target"
    HYP_REDUCIBLE = "hyp_reducible"
    HYP_SINGULAR = "hyp_singular"
    STEP_IRREDUCIBLE = "step_irreducible"
    RANK_LOCUS = "rank_locus"
    LEMMA22 = "lemma22"
    PROP22 = "prop22"
    B_OF = "b_of"


Params = Mapping[str, int]

# Integer floor divisions below halve products of consecutive integers and are exact.


def _a(p: Params) -> Fraction | int:
    M, k = p["M"], p["k"]
    return Fraction((M - 4 * k) * (M - 5 * k), 2) + M + 2 * k


def _thm04(p: Params) -> Fraction | int:
    M, k = p["M"], p["k"]
    return Fraction((M - 5 * k) * (M - 6 * k), 2)


def _thm02(p: Params) -> Fraction | int:
    M, k = p["M"], p["k"]
    return (M - 4 * k + 1) * (M - 4 * k + 2) // 2 - (k - 1)


def _thm01(p: Params) -> Fraction | int:
    return min(_thm02(p), _thm04(p))


def _thm31_target(p: Params) -> Fraction | int:
    M, k = p["M"], p["k"]
    return Fraction((M - 5 * k) * (M - 6 * k), 2) + M + k


def _hyp_reducible(p: Params) -> Fraction | int:
    M, k, d_k = p["M"], p["k"], p["d_k"]
    return binomial(M + k + d_k - 1, d_k) - (M + k + 1)


def _hyp_singular(p: Params) -> Fraction | int:
    M, k = p["M"], p["k"]
    return (M + k - 6) * (M + k - 5) // 2 + 1


def _step_irreducible(p: Params) -> Fraction | int:
    M, k, j, d_j = p["M"], p["k"], p["j"], p["d_j"]
    return binomial(M + k + d_j - 1, d_j) - (M + k + 1) - (k - j)


def _rank_locus(p: Params) -> Fraction | int:
    M, l, a = p["M"], p["l"], p["a"]
    return (M + l + 1 - a) * (M + l + 2 - a) // 2


def _lemma22(p: Params) -> Fraction | int:
    return _rank_locus(p) - (p["e"] - 1)


def _b_of(p: Params) -> Fraction | int:
    k, l = p["k"], p["l"]
    return max(k + l + 1, 4 * l + 2)


def _prop22(p: Params) -> Fraction | int:
    M, l = p["M"], p["l"]
    b = _b_of(p)
    return (M + 3 - b) * (M + 4 - b) // 2 - (l - 1)


_CATALOG: Dict[BoundName, Tuple[FrozenSet[str], Callable[[Params], Fraction | int]]] = {
    BoundName.A: (frozenset({"M", "k"}), _a),
    BoundName.THM04: (frozenset({"M", "k"}), _thm04),
    BoundName.THM02: (frozenset({"M", "k"}), _thm02),
    BoundName.THM01: (frozenset({"M", "k"}), _thm01),
    BoundName.THM31_TARGET: (frozenset({"M", "k"}), _thm31_target),
    BoundName.HYP_SINGULAR: (frozenset({"M", "k"}), _hyp_singular),
    BoundName.HYP_REDUCIBLE: (frozenset({"M", "k", "d_k"}), _hyp_reducible),
    BoundName.STEP_IRREDUCIBLE: (frozenset({"M", "k", "j", "d_j"}), _step_irreducible),
    BoundName.RANK_LOCUS: (frozenset({"M", "l", "a"}), _rank_locus),
    BoundName.LEMMA22: (frozenset({"M", "l", "a", "e"}), _lemma22),
    BoundName.B_OF: (frozenset({"k", "l"}), _b_of),
    BoundName.PROP22: (frozenset({"M", "k", "l"}), _prop22),
}


def _lookup(name: BoundName | str) -> BoundName:
    try:
        return BoundName(name)
    except ValueError:
        raise KeyError(f"Unknown bound {name!r}; expected one of {[b.value for b in BoundName]}") from None


def required_params(name: BoundName | str) -> FrozenSet[str]:
    return _CATALOG[_lookup(name)][0]


def closed_form_bound(name: BoundName | str, params: Params) -> Fraction:
    """Evaluate the named bound; ``params`` must hold exactly the integers it needs."""

    bound = _lookup(name)
    required, fn = _CATALOG[bound]
    given = set(params)
    missing, extra = required - given, given - required
    if missing or extra:
        raise ValueError(
            f"{bound.value} takes parameters {sorted(required)}; "
            f"missing {sorted(missing)}, unexpected {sorted(extra)}"
        )
    return Fraction(fn({key: int(value) for key, value in params.items()}))


def thm01_attained_by(M: int, k: int) -> BoundName:
    """Which of thm02 and thm04 realises thm01 (thm04 on ties)."""

    return BoundName.THM02 if _thm02({"M": M, "k": k}) < _thm04({"M": M, "k": k}) else BoundName.THM04


def min_prop22(M: int, k: int) -> Tuple[int, Fraction]:
    """Minimum of prop22 over l = 1..k and the smallest l attaining it."""

    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    values = [(closed_form_bound(BoundName.PROP22, {"M": M, "k": k, "l": l}), l) for l in range(1, k + 1)]
    value, l = min(values)
    return l, value
