"""Codimension estimates gamma(e, d, l) of the projection method and their minima."""

from __future__ import annotations

from typing import List, Tuple

from ..exact.degrees import DegreeTuple, SingularityLevel, check_level
from ..exact.slopes import binomial, cutoff, floor_two_log
from .profile import reduce_tuple, restricted_degrees

GammaPair = Tuple[Tuple[int, int], Tuple[int, int]]


def gamma_e(d: DegreeTuple, l: SingularityLevel, e: int, strict: bool = True) -> int:
    """C(M + l - e + m_e, M + l - e).

    ``strict`` restricts e to 1..N_l; the relaxed form accepts any 1 <= e <= M.
    """

    check_level(d, l)
    upper = cutoff(d, l) if strict else d.M
    if not 1 <= e <= upper:
        bound = "N_l" if strict else "M"
        raise ValueError(f"e={e} outside 1..{bound}={upper} for d=({d.label()}), l={l}")
    m_e = restricted_degrees(d)[e]
    shift = d.M + l - e
    return binomial(shift + m_e, shift)


def gamma_profile(d: DegreeTuple, l: SingularityLevel) -> List[Tuple[int, int]]:
    return [(e, gamma_e(d, l, e)) for e in range(1, cutoff(d, l) + 1)]


def gamma_min(d: DegreeTuple, l: SingularityLevel) -> Tuple[int, int]:
    """Exhaustive minimum over e = 1..N_l; ties go to the smallest e."""

    n_l = cutoff(d, l)
    if n_l < 1:
        raise ValueError(f"N_l={n_l} < 1 for d=({d.label()}), l={l}; nothing to minimise")
    best_e, best = 1, gamma_e(d, l, 1)
    for e in range(2, n_l + 1):
        value = gamma_e(d, l, e)
        if value < best:
            best_e, best = e, value
    return best_e, best


def beta_fn(k: int, a: int, t: int) -> int:
    """beta(t) = C(k b(t) + t, t) with b(t) = a - t + 1."""

    if not 2 <= t <= a:
        raise ValueError(f"t={t} outside 2..a={a}")
    return binomial(k * (a - t + 1) + t, t)


def alpha_fn(M: int, k: int) -> int:
    """alpha(M, k) = C(a + 1 + [2 log k], a + 1) with a = M / k."""

    if k < 1 or M % k:
        raise ValueError(f"alpha needs k | M, got M={M}, k={k}")
    a = M // k
    return binomial(a + 1 + floor_two_log(k), a + 1)


def plus_tail_pairs(d: DegreeTuple, l: SingularityLevel) -> List[GammaPair]:
    """Pairs ((e, gamma(e, d*, l)), (e+, gamma(e+, d+, l))) bridging d* to d+.

    Indices e <= N_l^+ pair with themselves; the remaining N_l - N_l^+ indices
    are matched from the other end, N_l - i with N_l^+ - i.
    """

    star = reduce_tuple(d, "star")
    plus = reduce_tuple(d, "plus")
    check_level(plus, l)
    n_star, n_plus = cutoff(star, l), cutoff(plus, l)
    pairs: List[GammaPair] = []
    for e in range(1, min(n_star, n_plus) + 1):
        pairs.append(((e, gamma_e(star, l, e)), (e, gamma_e(plus, l, e))))
    for i in range(max(n_star - n_plus, 0)):
        e, e_plus = n_star - i, n_plus - i
        if e_plus < 1:
            break
        pairs.append(((e, gamma_e(star, l, e)), (e_plus, gamma_e(plus, l, e_plus))))
    return pairs
