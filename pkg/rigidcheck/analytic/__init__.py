"""Interval arithmetic and certified sign checks for the Stirling-based estimates.

The lemma suites live in :mod:`rigidcheck.analytic.lemmas`, which also depends
on the exact and bounds packages and is therefore not imported here.
"""

from .certificate import (
    BisectionTree,
    BoxNode,
    SignAudit,
    SignCertificate,
    audit_certificate,
    certify_sign,
)
from .expressions import CATALOG, ExprId, ExprSpec, g1_exact, iv_eval
from .intervals import (
    DEFAULT_PRECISION,
    Interval,
    IntervalDomainError,
    dyadic_to_decimal,
    e_interval,
    exp,
    iv_transcendental,
    ln2_interval,
    log,
    pi_interval,
    power,
    sqrt,
)

__all__ = [
    "BisectionTree",
    "BoxNode",
    "CATALOG",
    "DEFAULT_PRECISION",
    "ExprId",
    "ExprSpec",
    "Interval",
    "IntervalDomainError",
    "SignAudit",
    "SignCertificate",
    "audit_certificate",
    "certify_sign",
    "dyadic_to_decimal",
    "e_interval",
    "exp",
    "g1_exact",
    "iv_eval",
    "iv_transcendental",
    "ln2_interval",
    "log",
    "pi_interval",
    "power",
    "sqrt",
]
