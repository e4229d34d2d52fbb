"""Catalogue of the real expressions used by the Stirling-based estimates.

Each entry is a function of named real variables (passed as intervals) and
integer parameters. Decimal constants are read as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple

from .intervals import DEFAULT_PRECISION, Interval, exp, log, minimum, pi_interval

HALF = Fraction(1, 2)


class ExprId(str, Enum):
    EPSILON = "epsilon"
    LOG_EPSILON = "log_epsilon"
    DLOG_EPSILON = "dlog_epsilon"
    D2LOG_EPSILON = "d2log_epsilon"
    INE1_LHS = "ine1_lhs"
    INE1_MARGIN = "ine1_margin"
    INE1_MARGIN_SYM = "ine1_margin_sym"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    G6 = "G6"
    G7 = "G7"
    H1 = "H1"
    H2 = "H2"
    H2_MARGIN = "H2_margin"
    A_REAL = "A_real"


Variables = Mapping[str, Interval]
Params = Mapping[str, int]


@dataclass(slots=True, frozen=True)
class ExprSpec:
    expr: ExprId
    variables: Tuple[str, ...]
    params: Tuple[str, ...]
    fn: Callable[[Variables, Params, int], Interval]
    anchor: str


def _log_sqrt2pi_over_e2(precision: int) -> Interval:
    # log(sqrt(2 pi) / e^2) = (log 2 + log pi) / 2 - 2
    two_pi = pi_interval(precision) * 2
    return log(two_pi) * HALF - 2


def _b(t: Interval, params: Params) -> Interval:
    a = Fraction(params["M"], params["k"])
    return (1 + a) - t


# -- epsilon(t) and its derivatives --------------------------------------------


def _log_epsilon(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    k = p["k"]
    kb = _b(t, p) * k
    top = kb + t
    return (
        _log_sqrt2pi_over_e2(precision)
        + (top + HALF) * log(top)
        - (kb + HALF) * log(kb)
        - (t + HALF) * log(t)
    )


def _epsilon(v: Variables, p: Params, precision: int) -> Interval:
    return exp(_log_epsilon(v, p, precision))


def _q(t: Interval, b: Interval, k: int) -> Interval:
    kb = b * k
    return (t * t - kb * b) / (b * t * (kb + t) * 2)


def _dlog_epsilon(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    k = p["k"]
    b = _b(t, p)
    kb = b * k
    return _q(t, b, k) - log(1 + t / kb) * k + log(1 + kb / t)


def _d2log_epsilon(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    k = p["k"]
    b = _b(t, p)
    kb = b * k
    top = kb + t
    num = t * t - kb * b
    return (
        1 / (b * t)
        + num * num / (b * b * t * t * top * top * 2)
        + num * (k - 1) / (b * t * top * top)
        - (t + b) * (t + b) * k / (t * b * top)
    )


def _ine1_lhs(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    return abs(_q(t, _b(t, p), p["k"]))


def _ine1_margin(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    b = _b(t, p)
    return 1 / (b * 2) - abs(_q(t, b, p["k"]))


def _ine1_margin_sym(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    b = _b(t, p)
    return 1 / (minimum(t, b) * 2) - abs(_q(t, b, p["k"]))


# -- G-functions ---------------------------------------------------------------

G1_COEFFICIENTS = {
    # (power of M, power of k): printed decimal coefficient
    (3, 0): "1",
    (2, 0): "2.58",
    (2, 1): "-6",
    (1, 2): "12",
    (1, 1): "-17.16",
    (1, 0): "0.74",
    (0, 3): "-8",
    (0, 2): "20.58",
    (0, 1): "-11.74",
    (0, 0): "-0.84",
}


def g1_exact(M: int, k: int) -> Fraction:
    """The printed cubic G1(M, k), evaluated exactly with decimal coefficients."""

    return sum(
        (Fraction(c) * Fraction(M) ** i * Fraction(k) ** j for (i, j), c in G1_COEFFICIENTS.items()),
        Fraction(0),
    )


def _g1(v: Variables, p: Params, precision: int) -> Interval:
    return Interval.point(g1_exact(p["M"], p["k"]), precision)


def _g2(v: Variables, p: Params, precision: int) -> Interval:
    s, t = v["s"], v["t"]
    a = s / t
    log_eps_a = (
        _log_sqrt2pi_over_e2(precision)
        + (t + a + HALF) * log(t + a)
        - (t + HALF) * log(t)
        - (a + HALF) * log(a)
    )
    beta2 = (s - t + 2) * (s - t + 1) * HALF
    return log_eps_a - log(beta2)


def _eight_log(t: Interval) -> Interval:
    return log(t) * 8


def _h1(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    L8 = _eight_log(t)
    return (
        (8 / t + 1) * (L8 + t - HALF) / (L8 + t - 1)
        - (8 / t) * (L8 - HALF) / (L8 - 1)
        - 1
    )


def _h2(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    L8 = _eight_log(t)
    base = t * L8 - t * 2
    return -(L8 + 6) * (1 / (base + 2) + 1 / (base + 1))


def _h2_margin(v: Variables, p: Params, precision: int) -> Interval:
    return _h2(v, p, precision) + 4 / v["t"]


def _g3(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    L = _eight_log(t) - 1
    return (
        log(1 + L / t)
        + (8 / t) * log(1 + t / L)
        - 1 / (t * 2)
        + _h1(v, p, precision)
        + _h2(v, p, precision)
    )


def _g4(v: Variables, p: Params, precision: int) -> Interval:
    s, t = v["s"], v["t"]
    t2 = t * t
    return (
        log(1 + t2 / s) / t
        - t2 / (s * (t2 + s) * 2)
        - (s * 2 + 3 - t * 2) / (s * s + (3 - t * 2) * s + t2 - t * 3 + 2)
    )


def _a_real(v: Variables, p: Params, precision: int) -> Interval:
    s, t = v["s"], v["t"]
    return (s - t * 4) * (s - t * 5) * HALF + s + t * 2


def _g5_at(s: Interval, t: Interval, r: Interval, precision: int) -> Interval:
    u = s / t
    A = _a_real({"s": s, "t": t}, {}, precision)
    return (
        (u + r + Fraction(3, 2)) * log(u + r + 1)
        - (r + HALF) * log(r)
        - (u + Fraction(3, 2)) * log(u + 1)
        + _log_sqrt2pi_over_e2(precision)
        - log(A)
    )


def _g5(v: Variables, p: Params, precision: int) -> Interval:
    return _g5_at(v["s"], v["t"], v["r"], precision)


def _g6(v: Variables, p: Params, precision: int) -> Interval:
    t = v["t"]
    return _g5_at(v["s"], t, log(t) * 2 - 1, precision)


def _g7(v: Variables, p: Params, precision: int) -> Interval:
    s, t = v["s"], v["t"]
    r = log(t) * 2 - 1
    u1 = s / t + 1
    return (
        log(1 + r / u1) / t
        - r / (t * u1 * (s / t + log(t) * 2) * 2)
        - (s * 2 - t * 9 + 2) / (s * s - t * s * 9 + s * 2 + t * t * 20 + t * 4)
    )


CATALOG: Dict[ExprId, ExprSpec] = {
    spec.expr: spec
    for spec in (
        ExprSpec(ExprId.EPSILON, ("t",), ("k", "M"), _epsilon, "§3.3: Stirling lower bound ε(t) ≤ β(t)"),
        ExprSpec(ExprId.LOG_EPSILON, ("t",), ("k", "M"), _log_epsilon, "§3.3: log ε(t)"),
        ExprSpec(ExprId.DLOG_EPSILON, ("t",), ("k", "M"), _dlog_epsilon, "Lemma 3.1: first derivative (diff:1)"),
        ExprSpec(ExprId.D2LOG_EPSILON, ("t",), ("k", "M"), _d2log_epsilon, "Lemma 3.1: second derivative (diff:2)"),
        ExprSpec(ExprId.INE1_LHS, ("t",), ("k", "M"), _ine1_lhs, "Lemma 3.1: left side of ine:1"),
        ExprSpec(ExprId.INE1_MARGIN, ("t",), ("k", "M"), _ine1_margin, "Lemma 3.1: ine:1 as printed, 1/(2b) − |q|"),
        ExprSpec(ExprId.INE1_MARGIN_SYM, ("t",), ("k", "M"), _ine1_margin_sym, "Lemma 3.1: 1/(2 min(t,b)) − |q|"),
        ExprSpec(ExprId.G1, (), ("M", "k"), _g1, "Lemma 3.2: G1(M,k) = 6(β(3) − 1.14·β(2))"),
        ExprSpec(ExprId.G2, ("s", "t"), (), _g2, "Lemma 3.3: G2 = log ε(a) − log β(2)"),
        ExprSpec(ExprId.G3, ("t",), (), _g3, "Lemma 3.4: G3(t) > 0 for t ≥ 20"),
        ExprSpec(ExprId.G4, ("s", "t"), (), _g4, "Lemma 3.5: G4(s,t) > 0"),
        ExprSpec(ExprId.G5, ("s", "t", "r"), (), _g5, "Prop 3.6: G5(s,t,r)"),
        ExprSpec(ExprId.G6, ("s", "t"), (), _g6, "Prop 3.6: G6(s,t) = G5(s,t,2 log t − 1)"),
        ExprSpec(ExprId.G7, ("s", "t"), (), _g7, "Prop 3.6: G7 = ∂G6/∂s"),
        ExprSpec(ExprId.H1, ("t",), (), _h1, "Lemma 3.4: H1(t) ≥ 0"),
        ExprSpec(ExprId.H2, ("t",), (), _h2, "Lemma 3.4: H2(t)"),
        ExprSpec(ExprId.H2_MARGIN, ("t",), (), _h2_margin, "Lemma 3.4: H2(t) + 4/t ≥ 0"),
        ExprSpec(ExprId.A_REAL, ("s", "t"), (), _a_real, "Prop 3.6: A(s,t) = (s−4t)(s−5t)/2 + s + 2t"),
    )
}


def iv_eval(
    expr: ExprId | str,
    point: Variables,
    params: Params | None = None,
    precision: int = DEFAULT_PRECISION,
) -> Interval:
    """Enclose the catalogued expression over the box ``point``."""

    spec = CATALOG[ExprId(expr)]
    params = dict(params or {})
    missing_vars = [name for name in spec.variables if name not in point]
    if missing_vars:
        raise ValueError(f"{spec.expr.value} needs variables {missing_vars}")
    missing_params = [name for name in spec.params if name not in params]
    if missing_params:
        raise ValueError(f"{spec.expr.value} needs integer parameters {missing_params}")
    box = {name: point[name].with_precision(precision) for name in spec.variables}
    return spec.fn(box, {name: int(params[name]) for name in spec.params}, precision)
