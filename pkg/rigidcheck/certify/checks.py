"""Per-instance certification: the full exact inequality chain for one degree tuple."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import floor
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..analytic.intervals import Interval, interval_to_strings, log
from ..bounds.catalog import BoundName, closed_form_bound, min_prop22, thm01_attained_by
from ..bounds.codim import alpha_fn, beta_fn, gamma_e, gamma_min, plus_tail_pairs
from ..bounds.profile import reduce_tuple, restricted_degrees, star_tuple
from ..exact.degrees import DegreeTuple, parse_degrees, total_degree
from ..exact.slopes import (
    FOUR_THIRDS,
    cutoff,
    gamma_threshold,
    lemma13_slope_bound,
    printed_count_discrepancy,
    slope_product,
    tail_product,
)
from .config import VerifyConfig
from .results import CheckResult, combine_status, exact_check, exact_str

logger = logging.getLogger(__name__)

MIN_K = 20
OVERALL_STATUSES = ("pass", "fail", "inconclusive", "out_of_hypotheses")

_START_PRECISION = 64
_MAX_PRECISION = 1 << 14


def hypothesis_margin(k: int, M: int) -> Interval:
    """Enclosure of M - 8 k log k that excludes zero (k = 1 gives M itself)."""

    if k < 1 or M < 1:
        raise ValueError(f"Need k >= 1 and M >= 1, got k={k}, M={M}")
    precision = _START_PRECISION
    while True:
        margin = M - log(Interval.point(k, precision)) * (8 * k)
        if not margin.contains(0) or precision >= _MAX_PRECISION:
            return margin
        precision *= 2


def hypothesis_check(k: int, M: int) -> Tuple[bool, Interval]:
    """k >= 20 and M >= 8 k log k, the latter decided on a certified margin."""

    margin = hypothesis_margin(k, M)
    return k >= MIN_K and margin.lo > 0, margin


def min_hypothesis_M(k: int) -> int:
    """Smallest integer M with M >= 8 k log k."""

    if k == 1:
        return 1
    precision = _START_PRECISION
    while True:
        value = log(Interval.point(k, precision)) * (8 * k)
        if floor(value.lo) == floor(value.hi):
            return floor(value.lo) + 1
        precision *= 2


@dataclass(slots=True)
class Certificate:
    degrees: DegreeTuple
    levels: Tuple[int, ...]
    hypothesis_ok: bool
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.degrees.k

    @property
    def M(self) -> int:
        return self.degrees.M

    @property
    def overall(self) -> str:
        if not self.hypothesis_ok:
            return "out_of_hypotheses"
        return combine_status(self.checks)

    def check(self, name: str, level: Optional[int] = None) -> CheckResult:
        for result in self.checks:
            if result.name == name and result.level == level:
                return result
        raise KeyError(f"No check {name!r} at level {level}")

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return self.k, self.M, self.degrees.degrees

    def to_dict(self) -> Dict[str, Any]:
        overall = self.overall
        # Stored status must agree with the checks it summarises.
        assert overall == _derive_overall(self.hypothesis_ok, self.checks)
        return {
            "params": {"k": self.k, "M": self.M, "degrees": self.degrees.label()},
            "levels": list(self.levels),
            "hypothesis_ok": self.hypothesis_ok,
            "checks": [check.to_dict() for check in self.checks],
            "overall": overall,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Certificate":
        certificate = cls(
            degrees=parse_degrees(data["params"]["degrees"]),
            levels=tuple(data["levels"]),
            hypothesis_ok=bool(data["hypothesis_ok"]),
            checks=[CheckResult.from_dict(item) for item in data["checks"]],
        )
        if certificate.overall != data["overall"]:
            raise ValueError(
                f"Overall status {data['overall']!r} does not match its checks ({certificate.overall!r})"
            )
        return certificate


def _derive_overall(hypothesis_ok: bool, checks: List[CheckResult]) -> str:
    return combine_status(checks) if hypothesis_ok else "out_of_hypotheses"


def _target_tuple(d: DegreeTuple) -> DegreeTuple:
    """The equal-degree tuple Props 3.4-3.6 are checked on: d itself, or d+."""

    return d if d.is_equal_degree else reduce_tuple(d, "plus")


def certify_tuple(d: DegreeTuple, config: VerifyConfig | None = None) -> Certificate:
    """Run every exact check for ``d``, in a fixed order.

    Checks that only hold under k >= 20 and M >= 8 k log k are downgraded to
    informational when the instance is out of hypotheses.
    """

    config = config or VerifyConfig()
    k, M = d.k, d.M
    levels = config.levels_for(k)
    hypothesis_ok, margin = hypothesis_check(k, M)
    conditional = "error" if hypothesis_ok else "info"
    checks: List[CheckResult] = []

    def add(result: CheckResult, conditional_check: bool = False) -> None:
        checks.append(result.as_info() if conditional_check and not hypothesis_ok else result)

    # -- hypotheses -------------------------------------------------------------
    add(exact_check("hypothesis_k", k, ">=", MIN_K, "Theorem 3.1: k ⩾ 20", severity="info"))
    lo, hi = interval_to_strings(margin)
    add(
        CheckResult(
            "hypothesis_M",
            "pass" if margin.lo > 0 else "fail",
            f"[{lo[:24]}, {hi[:24]}]",
            "0",
            "Theorem 0.1: M ⩾ 8k log k (margin M − 8k log k)",
            ">=",
            None,
            "info",
        )
    )

    # -- slopes -----------------------------------------------------------------
    add(
        exact_check(
            "slope_identity",
            slope_product(d, 0, 1, M),
            "==",
            total_degree(d),
            "Prop 1.3: ∏ β_{0,i} = d₁⋯d_k",
        )
    )
    add(
        exact_check(
            "printed_count_offset",
            printed_count_discrepancy(d, 0),
            "==",
            k,
            "§1.2: counting from α = 1 adds k to the length M − l",
            severity="info",
        )
    )
    largest, ceiling = lemma13_slope_bound(d)
    add(exact_check("lemma13_slope_bound", largest, "<=", ceiling, "Lemma 1.3: tail slopes ⩽ 1 + 1/[M/k]"), True)

    # -- per singularity level --------------------------------------------------
    star = reduce_tuple(d, "star")
    beta0 = tail_product(d, 0)
    gamma0 = gamma_min(d, 0)[1] if cutoff(d, 0) >= 1 else None
    for l in levels:
        beta_l = tail_product(d, l)
        add(exact_check("tail_product", beta_l, "<", FOUR_THIRDS, "Lemma 1.3: β(l) < 4/3", l), True)
        add(exact_check("gamma_threshold", gamma_threshold(d, l), ">", 1, "Prop 1.3: γ_l = (4/3)β(l)⁻¹ > 1", l), True)
        target = closed_form_bound(BoundName.THM31_TARGET, {"M": M, "k": k})
        if cutoff(d, l) >= 1:
            _, value = gamma_min(d, l)
            add(exact_check("gamma_min", value, ">=", target, "Theorem 3.1: min_e γ(e,d,l) ⩾ (M−5k)(M−6k)/2+M+k", l), True)
            add(exact_check("prop33", value, ">=", gamma0, "Prop 3.3: γ(d,l) ⩾ γ(d,0)", l))
        else:
            add(CheckResult("gamma_min", "pass", "no e", str(target), "Theorem 3.1: N_l = 0", ">=", l, conditional))
            add(CheckResult("prop33", "pass", "no e", "-", "Prop 3.3: N_l = 0", ">=", l))
        add(exact_check("beta_l_le_beta", beta_l, "<=", beta0, "§1.4: β(l) ⩽ β", l))

    # -- reduction chain --------------------------------------------------------
    profile, star_profile = restricted_degrees(d), restricted_degrees(star)
    profile_violations = sum(1 for m, m_star in zip(profile.m, star_profile.m) if m < m_star)
    add(exact_check("star_profile", profile_violations, "==", 0, "Prop 3.1: m_e ⩾ m_e*"))

    gamma_violations = 0
    pointwise_violations = 0
    chain_violations = 0
    bridge_violations = 0
    for l in levels:
        for e in range(1, cutoff(d, l) + 1):
            value = gamma_e(d, l, e)
            if value < gamma_e(star, l, e):
                gamma_violations += 1
            if value < gamma_e(d, 0, e):
                pointwise_violations += 1
        if cutoff(d, l) >= 1 and gamma_min(d, l)[1] < gamma_min(star, l)[1]:
            chain_violations += 1
        for (_, star_value), (_, plus_value) in plus_tail_pairs(d, l):
            if star_value < plus_value:
                bridge_violations += 1
    add(exact_check("star_gamma", gamma_violations, "==", 0, "Prop 3.1: γ(e,d,l) ⩾ γ(e,d*,l)"))
    add(exact_check("star_chain_min", chain_violations, "==", 0, "Prop 3.1: γ(d,l) ⩾ γ(d*,l)"))
    add(exact_check("plus_bridge", bridge_violations, "==", 0, "Theorem 3.1: γ(e,d*,l) ⩾ γ(e⁺,d⁺,l)"))
    add(exact_check("prop33_pointwise", pointwise_violations, "==", 0, "Prop 3.3: γ(e,d,l) ⩾ γ(e,d,0)"))

    # d+ against A(M+, k), then A(M+, k) against the Theorem 3.1 target through M+ >= M - k
    plus = reduce_tuple(d, "plus")
    plus_area = closed_form_bound(BoundName.A, {"M": plus.M, "k": k})
    plus_minima = [gamma_min(plus, l)[1] for l in levels if cutoff(plus, l) >= 1]
    prop32_anchor = "Prop 3.2: γ(e,d⁺,l) ⩾ (M⁺−4k)(M⁺−5k)/2 + M⁺ + 2k"
    if plus_minima:
        add(exact_check("prop32", min(plus_minima), ">=", plus_area, f"{prop32_anchor} for ({plus.label()})"), True)
    else:
        add(CheckResult("prop32", "pass", "no e", exact_str(plus_area), f"{prop32_anchor}: N_l⁺ = 0", ">=", None, conditional))
    add(
        exact_check(
            "prop32_bridge",
            plus_area,
            ">=",
            closed_form_bound(BoundName.THM31_TARGET, {"M": M, "k": k}),
            f"Theorem 3.1: A(M⁺,k) ⩾ (M−5k)(M−6k)/2 + M + k with M⁺ = {plus.M} ⩾ M − k",
        ),
        True,
    )

    # -- equal-degree propositions ----------------------------------------------
    equal = _target_tuple(d)
    a = equal.M // equal.k
    betas = [(beta_fn(k, a, t), t) for t in range(2, a + 1)]
    alpha = alpha_fn(equal.M, k)
    if cutoff(equal, 0) >= 1:
        _, equal_min = gamma_min(equal, 0)
        closed = min([alpha] + [value for value, _ in betas])
        add(exact_check("prop34", equal_min, "==", closed, f"Prop 3.4: γ(d,0) = min(min_t β(t), α) for ({equal.label()})"))
    if betas:
        _, argmin = min(betas)
        add(exact_check("prop35", argmin, "==", 2, f"Prop 3.5: argmin β(t) is t=2 for a={a}"), True)
    area = closed_form_bound(BoundName.A, {"M": equal.M, "k": k})
    add(exact_check("prop36", alpha, ">=", area, f"Prop 3.6: α(M,k) ⩾ A(M,k) at M={equal.M}"), True)

    # -- closed-form bounds -----------------------------------------------------
    thm04 = closed_form_bound(BoundName.THM04, {"M": M, "k": k})
    thm02 = closed_form_bound(BoundName.THM02, {"M": M, "k": k})
    thm01 = closed_form_bound(BoundName.THM01, {"M": M, "k": k})
    add(exact_check("thm04", thm04, "==", thm04, "Theorem 0.4: (M−5k)(M−6k)/2", severity="info"))
    add(exact_check("thm02", thm02, "==", thm02, "Theorem 0.2: (M−4k+1)(M−4k+2)/2 − (k−1)", severity="info"))
    add(
        exact_check(
            "thm01",
            thm01,
            "==",
            closed_form_bound(thm01_attained_by(M, k), {"M": M, "k": k}),
            f"Theorem 0.1: min(thm02, thm04), attained by {thm01_attained_by(M, k).value}",
            severity="info",
        )
    )
    l_min, prop22_min = min_prop22(M, k)
    add(exact_check("prop22_min_value", prop22_min, "==", thm02, "§2.3: min_l prop22 = thm02"), True)
    add(exact_check("prop22_argmin", l_min, "==", k, "§2.3: the minimum occurs for l = k"), True)
    add(exact_check("thm02_ge_thm04", thm02, ">=", thm04, "Theorem 0.1: thm02 ⩾ thm04"), True)

    certificate = Certificate(d, levels, hypothesis_ok, checks)
    logger.debug("certified (%s): %s with %d checks", d.label(), certificate.overall, len(checks))
    return certificate


def certify_params(k: int, M: int, config: VerifyConfig | None = None) -> Certificate:
    """Certificate for the star-shaped tuple with the given k and M."""

    return certify_tuple(star_tuple(k, M), config)
