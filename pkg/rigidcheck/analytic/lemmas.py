"""Suites that verify the Stirling-based estimates of Lemmas 1.3 and 3.1-3.6.

Every claim over an unbounded range is checked only on the finite boxes or
sample points given here, and labelled "verified on [box]".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..bounds.profile import star_tuple
from ..certify.config import VerifyConfig
from ..certify.results import CheckResult, Status, combine_status, exact_check, exact_str
from ..exact.slopes import floor_two_log, tail_product
from .certificate import SignCertificate, certify_sign
from .expressions import ExprId, g1_exact, iv_eval
from .intervals import Interval, dyadic_to_decimal, exp, interval_to_strings, log, pi_interval

logger = logging.getLogger(__name__)

SANDWICH_LOWER = Fraction("1.126")
SANDWICH_UPPER = Fraction("1.132")
LEMMA32_FACTOR = Fraction("1.14")
DERIVATIVE_STEP = Fraction(1, 10**6)
DERIVATIVE_PRECISION = 256
DERIVATIVE_TOLERANCE = Fraction(1, 10**4)


@dataclass(slots=True)
class LemmaResult:
    name: str
    params: Dict[str, Any]
    checks: List[CheckResult] = field(default_factory=list)
    certificates: List[SignCertificate] = field(default_factory=list)

    @property
    def status(self) -> Status:
        return combine_status(self.checks)

    def to_entry(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "detail": {
                "params": {key: str(value) for key, value in self.params.items()},
                "checks": [check.to_dict() for check in self.checks],
                "certificates": [certificate.to_dict() for certificate in self.certificates],
            },
        }


# -- helpers -------------------------------------------------------------------


def _sign_check(name: str, certificate: SignCertificate, anchor: str, severity: str = "error") -> CheckResult:
    if certificate.certified:
        status: Status = "pass"
    elif certificate.counterexample is not None:
        status = "fail"
    else:
        status = "inconclusive"
    relation = "> 0" if certificate.claimed_sign == "+" else "< 0"
    value = f"{certificate.status} ({certificate.leaf_count} leaves, depth {certificate.tree.depth})"
    return CheckResult(
        name=name,
        status=status,
        value=value,
        bound=f"{certificate.expr.value} {relation} verified on [{certificate.box_label()}]",
        paper_anchor=anchor,
        relation=relation,
        severity=severity,  # type: ignore[arg-type]
    )


def _certify(
    expr: ExprId,
    box: Dict[str, Interval],
    params: Dict[str, int],
    sign: str,
    config: VerifyConfig,
) -> SignCertificate:
    return certify_sign(
        expr,
        box,
        params,
        sign,  # type: ignore[arg-type]
        precision=config.precision,
        max_depth=config.max_depth,
        max_precision=config.max_precision,
        max_leaves=config.max_leaves,
    )


def _interval_check(
    name: str,
    enclosure: Interval,
    relation: str,
    bound: Fraction,
    anchor: str,
    severity: str = "error",
) -> CheckResult:
    """Decide ``enclosure <relation> bound`` from the interval endpoints."""

    if relation in ("<", "<="):
        holds = enclosure.hi < bound if relation == "<" else enclosure.hi <= bound
        refuted = enclosure.lo >= bound if relation == "<" else enclosure.lo > bound
    else:
        holds = enclosure.lo > bound if relation == ">" else enclosure.lo >= bound
        refuted = enclosure.hi <= bound if relation == ">" else enclosure.hi < bound
    status: Status = "pass" if holds else ("fail" if refuted else "inconclusive")
    lo, hi = interval_to_strings(enclosure)
    return CheckResult(name, status, f"[{lo}, {hi}]", exact_str(bound), anchor, relation, None, severity)  # type: ignore[arg-type]


def _refine(expr: ExprId, point: Dict[str, Interval], params: Dict[str, int], config: VerifyConfig) -> Interval:
    precision = config.precision
    enclosure = iv_eval(expr, point, params, precision)
    while enclosure.lo <= 0 <= enclosure.hi and precision < config.max_precision:
        precision = min(precision * 2, config.max_precision)
        enclosure = iv_eval(expr, point, params, precision)
    return enclosure


def _s_threshold(t: int, precision: int) -> Interval:
    """8 t log t - t as an enclosure."""

    return log(Interval.point(t, precision)) * (8 * t) - t


def _check_real_a(k: int, M: int, minimum_a: int) -> Fraction:
    """a = M/k as an exact rational; the Stirling estimates do not need k | M."""

    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    a = Fraction(M, k)
    if a < minimum_a:
        raise ValueError(f"a = M/k = {a} is below {minimum_a}")
    return a


# -- Stirling ------------------------------------------------------------------


def stirling_log_factorial(n: int, precision: int = 128) -> Interval:
    """Enclosure of log n! from n! = sqrt(2 pi n) (n/e)^n exp(theta/(12n)), 0 < theta < 1."""

    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    two_pi_n = pi_interval(precision) * (2 * n)
    base = log(two_pi_n) * Fraction(1, 2) + log(Interval.point(n, precision)) * n - n
    return Interval.enclosing(base.lo, base.hi + Fraction(1, 12 * n), precision)


# -- Lemma 1.3 -----------------------------------------------------------------


def lemma13_check(k: int, M: int, config: VerifyConfig | None = None) -> LemmaResult:
    """beta < (1 + 1/a)^{[2 log k]} <= (1 + 1/a)^{a/4} < e^{1/4} < 4/3 for the star tuple."""

    config = config or VerifyConfig()
    d = star_tuple(k, M)
    a = M // k
    r = floor_two_log(k)
    result = LemmaResult("lemma1.3", {"k": k, "M": M, "a": a, "r": r})
    result.checks.append(
        exact_check("lemma13_beta", tail_product(d, 0), "<", Fraction(4, 3), "Lemma 1.3: The inequality β<4/3 holds")
    )
    result.checks.append(exact_check("lemma13_exponent", 4 * r, "<=", a, "Lemma 1.3: [2 log k] ≤ a/4"))
    one_over_a = Interval.point(Fraction(1, a), config.precision)
    result.checks.append(
        _interval_check(
            "lemma13_a_log",
            log(one_over_a + 1) * a,
            "<",
            Fraction(1),
            "Lemma 1.3: (1+1/a)^{a/4} < e^{1/4}",
        )
    )
    result.checks.append(
        _interval_check(
            "lemma13_e_quarter",
            exp(Interval.point(Fraction(1, 4), config.precision)),
            "<",
            Fraction(4, 3),
            "Lemma 1.3: e^{1/4} < 4/3",
        )
    )
    return result


# -- Lemma 3.1 -----------------------------------------------------------------


def lemma31_regions(k: int, M: int) -> Tuple[Tuple[Fraction, Fraction], ...]:
    """[2, (M+k)/2k], [(M+1)/(k+1), M/k] and the middle interval between them."""

    middle = Fraction(M + k, 2 * k)
    right = Fraction(M + 1, k + 1)
    return (Fraction(2), middle), (right, Fraction(M, k)), (middle, right)


def lemma31_suite(k: int, M: int, config: VerifyConfig | None = None) -> LemmaResult:
    """log epsilon increases, then is concave, then decreases on [2, M/k]."""

    config = config or VerifyConfig()
    if k < 2 or Fraction(M + k, 2 * k) <= 2:
        raise ValueError(f"Lemma 3.1 regions are empty for k={k}, M={M}")
    params = {"k": k, "M": M}
    region1, region2, region3 = lemma31_regions(k, M)
    result = LemmaResult("lemma3.1", dict(params))
    plan = (
        ("lemma31_region1", ExprId.DLOG_EPSILON, region1, "+", "Lemma 3.1: log ε strictly increasing"),
        ("lemma31_region2", ExprId.DLOG_EPSILON, region2, "-", "Lemma 3.1: log ε strictly decreasing"),
        ("lemma31_region3", ExprId.D2LOG_EPSILON, region3, "-", "Lemma 3.1: second derivative strictly negative"),
    )
    for name, expr, (lo, hi), sign, anchor in plan:
        box = {"t": Interval.enclosing(lo, hi, config.precision)}
        certificate = _certify(expr, box, params, sign, config)
        result.certificates.append(certificate)
        result.checks.append(_sign_check(name, certificate, anchor))
    return result


def ine1_audit(k: int, M: int, config: VerifyConfig | None = None) -> LemmaResult:
    """|q(t)| against 1/(2 min(t, b)) on [2, M/k], and against the printed 1/(2b)."""

    config = config or VerifyConfig()
    params = {"k": k, "M": M}
    box = {"t": Interval.enclosing(2, Fraction(M, k), config.precision)}
    result = LemmaResult("ine1", dict(params))
    symmetric = _certify(ExprId.INE1_MARGIN_SYM, box, params, "+", config)
    printed = _certify(ExprId.INE1_MARGIN, box, params, "+", config)
    result.certificates.extend([symmetric, printed])
    result.checks.append(_sign_check("ine1_symmetric", symmetric, "Lemma 3.1: |q| ≤ 1/(2 min(t, b))"))
    result.checks.append(_sign_check("ine1_printed", printed, "Lemma 3.1: ine:1 as printed, |q| ≤ 1/(2b)", "info"))
    if printed.counterexample is not None:
        logger.warning(
            "ine:1 as printed fails for k=%d, M=%d near %s", k, M, printed.counterexample.to_dict()["box"]
        )
    return result


def derivative_audit(
    k: int,
    M: int,
    config: VerifyConfig | None = None,
    rng: np.random.Generator | None = None,
) -> LemmaResult:
    """Central differences of log epsilon against the first and second derivative formulas.

    The error is measured relative to max(|derivative|, 1).
    """

    config = config or VerifyConfig()
    rng = np.random.default_rng(config.seed) if rng is None else rng
    params = {"k": k, "M": M}
    h = DERIVATIVE_STEP
    a = Fraction(M, k)
    points = sorted(Fraction(float(x)) for x in rng.uniform(2.001, float(a) - 0.001, config.derivative_points))

    def mid(expr: ExprId, t: Fraction) -> Fraction:
        return iv_eval(expr, {"t": Interval.point(t, DERIVATIVE_PRECISION)}, params, DERIVATIVE_PRECISION).midpoint

    worst1, worst2 = Fraction(0), Fraction(0)
    for t in points:
        f_minus, f_zero, f_plus = (mid(ExprId.LOG_EPSILON, t + shift) for shift in (-h, 0, h))
        first = (f_plus - f_minus) / (2 * h)
        second = (f_plus - 2 * f_zero + f_minus) / (h * h)
        d1, d2 = mid(ExprId.DLOG_EPSILON, t), mid(ExprId.D2LOG_EPSILON, t)
        worst1 = max(worst1, abs(first - d1) / max(abs(d1), Fraction(1)))
        worst2 = max(worst2, abs(second - d2) / max(abs(d2), Fraction(1)))

    result = LemmaResult("derivatives", {**params, "points": len(points)})
    for name, worst, anchor in (
        ("diff1_transcription", worst1, "Lemma 3.1: first derivative (diff:1)"),
        ("diff2_transcription", worst2, "Lemma 3.1: second derivative (diff:2)"),
    ):
        status: Status = "pass" if worst < DERIVATIVE_TOLERANCE else "fail"
        result.checks.append(
            CheckResult(name, status, f"{float(worst):.3e}", exact_str(DERIVATIVE_TOLERANCE), anchor, "<")
        )
    return result


# -- Lemma 3.2 -----------------------------------------------------------------


def lemma32_check(k: int, M: int, config: VerifyConfig | None = None) -> LemmaResult:
    """1.14 beta(2) < beta(3), the Stirling sandwich at t = 3, and beta(2) <= eps(3)."""

    config = config or VerifyConfig()
    a = _check_real_a(k, M, 3)
    # beta(t) = C(M - (t-1)k + t, t) is an integer for every M
    beta2, beta3 = factorial_ratio(M - k + 2, 2), factorial_ratio(M - 2 * k + 3, 3)
    eps3 = iv_eval(ExprId.EPSILON, {"t": Interval.point(3, config.precision)}, {"k": k, "M": M}, config.precision)
    result = LemmaResult("lemma3.2", {"k": k, "M": M, "a": a})
    result.checks.append(exact_check("lemma32_exact", LEMMA32_FACTOR * beta2, "<", beta3, "Lemma 3.2: 1.14·β(2) < β(3)"))
    result.checks.append(
        _interval_check(
            "lemma32_sandwich_lower", eps3 * SANDWICH_LOWER, "<=", Fraction(beta3), "Lemma 3.2: 1.126·ε(3) ⩽ β(3)"
        )
    )
    upper = _interval_check(
        "lemma32_sandwich_upper", eps3 * SANDWICH_UPPER, ">=", Fraction(beta3), "Lemma 3.2: β(3) ⩽ 1.132·ε(3)", "info"
    )
    result.checks.append(upper)
    ratio = Interval.point(beta3, config.precision) / eps3
    ratio_text = "[{}, {}]".format(*(dyadic_to_decimal(end)[:14] for end in (ratio.lo, ratio.hi)))
    result.params["beta3_over_eps3"] = ratio_text
    if upper.status == "fail":
        logger.warning("β(3) ⩽ 1.132·ε(3) fails for k=%d, M=%d: β(3)/ε(3) in %s", k, M, ratio_text)
    result.checks.append(
        _interval_check("lemma32_direct", eps3, ">=", Fraction(beta2), "Lemma 3.2: β(2) ⩽ ε(3)")
    )
    return result


def g1_audit(k: int, M: int) -> LemmaResult:
    """Printed cubic G1(M, k) against 6 (beta(3) - 1.14 beta(2)) with beta(t) = C(M - (t-1)k + t, t)."""

    beta2 = factorial_ratio(M - k + 2, 2)
    beta3 = factorial_ratio(M - 2 * k + 3, 3)
    defining = 6 * (beta3 - LEMMA32_FACTOR * beta2)
    printed = g1_exact(M, k)
    result = LemmaResult("G1", {"k": k, "M": M})
    check = exact_check("g1_identity", printed, "==", defining, "Lemma 3.2: G₁(M,k) = 6(β(3) − 1.14·β(2))")
    result.checks.append(check)
    if not check.passed:
        logger.warning("printed G1 differs from its defining identity at k=%d, M=%d", k, M)
    return result


def factorial_ratio(n: int, t: int) -> int:
    """C(n, t) for n >= 0, spelled out to stay independent of the binomial helper."""

    if n < t:
        return 0
    return factorial(n) // (factorial(t) * factorial(n - t))


# -- Lemmas 3.3-3.5 and Prop 3.6 ----------------------------------------------------


def lemma33_samples(ts: Sequence[int] = (20, 30, 50, 100, 200), config: VerifyConfig | None = None) -> LemmaResult:
    config = config or VerifyConfig()
    result = LemmaResult("lemma3.3", {"t": ",".join(str(t) for t in ts)})
    for t in ts:
        s = _s_threshold(t, config.precision)
        enclosure = _refine(ExprId.G2, {"s": s, "t": Interval.point(t, config.precision)}, {}, config)
        check = _interval_check(f"g2_at_{t}", enclosure, ">", Fraction(0), "Lemma 3.3: G₂(8t log t − t, t) > 0")
        result.checks.append(check)
    return result


def lemma34_suite(lo: int = 20, hi: int = 200, config: VerifyConfig | None = None) -> LemmaResult:
    config = config or VerifyConfig()
    if not 1 < lo < hi:
        raise ValueError(f"Need 1 < lo < hi, got [{lo}, {hi}]")
    box = {"t": Interval.enclosing(lo, hi, config.precision)}
    result = LemmaResult("lemma3.4", {"lo": lo, "hi": hi})
    for name, expr, anchor in (
        ("g3_positive", ExprId.G3, "Lemma 3.4: G₃(t) > 0 for t ⩾ 20"),
        ("h1_nonnegative", ExprId.H1, "Lemma 3.4: H₁(t) ⩾ 0"),
        ("h2_margin", ExprId.H2_MARGIN, "Lemma 3.4: H₂(t) ⩾ −4/t"),
    ):
        certificate = _certify(expr, box, {}, "+", config)
        result.certificates.append(certificate)
        result.checks.append(_sign_check(name, certificate, anchor))
    return result


def lemma35_boxes(t_lo: int, t_hi: int, chunk: int, precision: int) -> List[Tuple[str, Dict[str, Interval]]]:
    """Sub-boxes of {s in [8t log t - t, t^2]} and {s in [t^2, 4t^2]} over t-chunks."""

    boxes = []
    for t0 in range(t_lo, t_hi, chunk):
        t1 = min(t0 + chunk, t_hi)
        t_box = Interval.enclosing(t0, t1, precision)
        s_low = _s_threshold(t0, precision).lo
        boxes.append((f"g4_lower_{t0}_{t1}", {"s": Interval.enclosing(s_low, t1 * t1, precision), "t": t_box}))
        boxes.append((f"g4_upper_{t0}_{t1}", {"s": Interval.enclosing(t0 * t0, 4 * t1 * t1, precision), "t": t_box}))
    return boxes


def lemma35_suite(
    t_lo: int = 20,
    t_hi: int = 60,
    chunk: int = 10,
    config: VerifyConfig | None = None,
) -> LemmaResult:
    config = config or VerifyConfig()
    if not 1 < t_lo < t_hi or chunk < 1:
        raise ValueError(f"Need 1 < t_lo < t_hi and chunk >= 1, got [{t_lo}, {t_hi}], chunk={chunk}")
    result = LemmaResult("lemma3.5", {"t_lo": t_lo, "t_hi": t_hi, "chunk": chunk})
    for name, box in lemma35_boxes(t_lo, t_hi, chunk, config.precision):
        certificate = _certify(ExprId.G4, box, {}, "+", config)
        result.certificates.append(certificate)
        result.checks.append(_sign_check(name, certificate, "Lemma 3.5: G₄(s,t) > 0 for t ⩾ 20"))
    return result


def prop36_samples(ts: Sequence[int] = (20, 30, 50), config: VerifyConfig | None = None) -> LemmaResult:
    """G6 at the left end s = 8t log t - t, and G7 > 0 on s in [8t log t - t, 4t^2]."""

    config = config or VerifyConfig()
    result = LemmaResult("prop3.6", {"t": ",".join(str(t) for t in ts)})
    for t in ts:
        t_point = Interval.point(t, config.precision)
        s = _s_threshold(t, config.precision)
        g6 = _refine(ExprId.G6, {"s": s, "t": t_point}, {}, config)
        result.checks.append(_interval_check(f"g6_at_{t}", g6, ">=", Fraction(0), "Prop 3.6: G₆(8t log t − t, t) ⩾ 0"))
        box = {"s": Interval.enclosing(s.lo, 4 * t * t, config.precision), "t": t_point}
        certificate = _certify(ExprId.G7, box, {}, "+", config)
        result.certificates.append(certificate)
        result.checks.append(_sign_check(f"g7_positive_{t}", certificate, "Prop 3.6: ∂G₆/∂s = G₇ ⩾ 0"))
    return result


def check_lemma_inputs(name: str, k: Optional[int], M: Optional[int]) -> None:
    """Raise before any work when ``name`` is unknown or (k, M) misses its preconditions."""

    if name not in LEMMA_NAMES:
        raise KeyError(f"Unknown lemma {name!r}; expected one of {list(LEMMA_NAMES)}")
    if name not in _NEEDS_KM:
        return
    if k is None or M is None:
        raise ValueError(f"--lemma {name} needs --k and --M")
    if name == "1.3" and not 1 <= k <= M:
        raise ValueError(f"Lemma 1.3 needs 1 <= k <= M, got k={k}, M={M}")
    if name == "3.1" and (k < 2 or M <= 3 * k):
        raise ValueError(f"Lemma 3.1 regions are empty for k={k}, M={M}")
    if name == "3.2":
        _check_real_a(k, M, 3)


def run_lemma(name: str, k: Optional[int], M: Optional[int], config: VerifyConfig) -> List[LemmaResult]:
    """Dispatch used by the command line; ``name`` is one of LEMMA_NAMES."""

    check_lemma_inputs(name, k, M)
    if name == "1.3":
        return [lemma13_check(k, M, config)]
    if name == "3.1":
        return [lemma31_suite(k, M, config), ine1_audit(k, M, config), derivative_audit(k, M, config)]
    if name == "3.2":
        return [lemma32_check(k, M, config), g1_audit(k, M)]
    if name == "3.3-sample":
        return [lemma33_samples(config=config)]
    if name == "3.4":
        return [lemma34_suite(config=config)]
    if name == "3.5":
        return [lemma35_suite(config=config)]
    return [prop36_samples(config=config)]


LEMMA_NAMES = ("1.3", "3.1", "3.2", "3.3-sample", "3.4", "3.5", "3.6-sample")
_NEEDS_KM = frozenset({"1.3", "3.1", "3.2"})
