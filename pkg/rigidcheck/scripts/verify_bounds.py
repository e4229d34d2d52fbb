"""Command line for the exact and interval-certified bound checks.

Usage examples:
- python -m rigidcheck.scripts.verify_bounds certify --degrees 25^20 --all-l --format json
- python -m rigidcheck.scripts.verify_bounds slopes --degrees 2,3,3 --l 0
- python -m rigidcheck.scripts.verify_bounds sweep --k-range 20:25 --m-rule min_multiple --shape equal
- python -m rigidcheck.scripts.verify_bounds verify-analytic --lemma 3.1 --k 20 --M 480

Exit status: 0 when every requested check passes, 1 when one fails, 2 when
something is inconclusive or out of hypotheses, 64 on usage errors. Errors
raised by the computations themselves are not usage errors and propagate.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from rigidcheck import __version__
from rigidcheck.analytic.lemmas import LEMMA_NAMES, check_lemma_inputs, run_lemma
from rigidcheck.bounds import (
    BoundName,
    closed_form_bound,
    gamma_min,
    gamma_profile,
    min_prop22,
    star_tuple,
    thm01_attained_by,
)
from rigidcheck.certify import GridSpec, VerifyConfig, certify_tuple, combine_status, exact_check, sweep
from rigidcheck.certify.results import exact_str
from rigidcheck.certify.sweep import M_RULES, SHAPES
from rigidcheck.exact import (
    DegreeTuple,
    FOUR_THIRDS,
    cutoff,
    gamma_threshold,
    parse_degrees,
    slope_counts,
    tail_product,
)
from rigidcheck.report import EXIT_USAGE, ReportDocument

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Raised when the parsed arguments do not describe a runnable request."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _degrees(text: str) -> DegreeTuple:
    return parse_degrees(text)


_degrees.__name__ = "degree tuple"


def _k_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        return int(lo), int(lo)
    return int(lo), int(hi)


_k_range.__name__ = "k range"


def _int_list(text: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


_int_list.__name__ = "integer list"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=128, help="Working precision in bits (default 128).")
    common.add_argument("--max-depth", type=int, default=40, help="Bisection depth limit (default 40).")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text", help="Report format.")
    common.add_argument("--out", type=Path, default=None, help="Write the report here instead of stdout.")
    common.add_argument("--workers", type=int, default=1, help="Worker processes for sweeps.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Raise log verbosity (repeatable).")

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("--degrees", type=_degrees, help="Degree tuple: '2,3,3', '25^20' or '2^3,5'.")
    instance.add_argument("--k", type=int, help="Number of equations; with --M selects the star-shaped tuple.")
    instance.add_argument("--M", type=int, help="M = sum(d_i) - k.")

    levels = argparse.ArgumentParser(add_help=False)
    group = levels.add_mutually_exclusive_group()
    group.add_argument("--l", type=int, default=None, help="Singularity level.")
    group.add_argument("--all-l", action="store_true", help="Every level 0..k.")

    parser = _Parser(prog="verify_bounds", description="Recompute and certify codimension and slope bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("slopes", parents=[common, instance, levels], help="Slope sequences and tail products.")
    sub.add_parser("gamma", parents=[common, instance, levels], help="Codimension estimates gamma(e, d, l).")
    sub.add_parser("certify", parents=[common, instance, levels], help="Full exact inequality chain for one tuple.")

    sweep_parser = sub.add_parser("sweep", parents=[common, levels], help="Certify a grid of instances.")
    sweep_parser.add_argument("--k-range", type=_k_range, default=None, help="LO:HI, inclusive.")
    sweep_parser.add_argument("--m-rule", choices=M_RULES, default="min_multiple")
    sweep_parser.add_argument("--M-values", type=_int_list, default=(), help="Comma list for --m-rule range.")
    sweep_parser.add_argument("--shape", choices=SHAPES, default="equal")
    sweep_parser.add_argument(
        "--tuple", dest="tuples", type=_degrees, action="append", default=[], help="Explicit tuple (repeatable)."
    )

    analytic_parser = sub.add_parser("verify-analytic", parents=[common], help="Interval-certified lemma suites.")
    analytic_parser.add_argument("--lemma", choices=LEMMA_NAMES, required=True)
    analytic_parser.add_argument("--k", type=int)
    analytic_parser.add_argument("--M", type=int)

    bounds_parser = sub.add_parser("bounds", parents=[common], help="Closed-form codimension bounds.")
    bounds_parser.add_argument("--k", type=int, required=True)
    bounds_parser.add_argument("--M", type=int, required=True)
    bounds_parser.add_argument("--l", type=int, default=None, help="Also evaluate prop22 at this level.")
    return parser


# -- request helpers -----------------------------------------------------------


def _resolve_tuple(args: argparse.Namespace) -> DegreeTuple:
    if args.degrees is not None:
        if args.k is not None or args.M is not None:
            raise UsageError("--degrees cannot be combined with --k/--M")
        return args.degrees
    if args.k is None or args.M is None:
        raise UsageError("give --degrees, or both --k and --M")
    if args.k < 1 or args.M < args.k:
        raise UsageError(f"need 1 <= k <= M, got k={args.k}, M={args.M}")
    return star_tuple(args.k, args.M)


def _levels(args: argparse.Namespace, d: Optional[DegreeTuple] = None) -> Tuple[int, ...] | str:
    if getattr(args, "l", None) is None:
        return "all" if getattr(args, "all_l", False) or d is None else (0,)
    if d is not None and not 0 <= args.l <= d.k:
        raise UsageError(f"--l must lie in 0..{d.k}, got {args.l}")
    return (args.l,)


def _config(args: argparse.Namespace, levels: Tuple[int, ...] | str = "all") -> VerifyConfig:
    precision = args.precision
    try:
        return VerifyConfig(
            precision=precision,
            max_precision=max(4 * precision, 512),
            max_depth=args.max_depth,
            levels=levels,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _spec_echo(args: argparse.Namespace) -> Dict[str, Any]:
    """The request as JSON-native values; output and logging options are left out."""

    echo: Dict[str, Any] = {}
    for key, value in sorted(vars(args).items()):
        if key in ("out", "verbose", "workers", "format"):
            continue
        if isinstance(value, DegreeTuple):
            value = value.label()
        elif isinstance(value, (list, tuple)):
            value = [item.label() if isinstance(item, DegreeTuple) else item for item in value]
        echo[key] = value
    return echo


def _entry(name: str, params: Dict[str, Any], checks, values: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "name": name,
        "status": combine_status(checks),
        "detail": {
            "params": {key: str(value) for key, value in params.items()},
            "checks": [check.to_dict() for check in checks],
            "values": values,
        },
    }


# -- commands ------------------------------------------------------------------


def _run_slopes(args: argparse.Namespace) -> ReportDocument:
    d = _resolve_tuple(args)
    levels = _levels(args, d)
    entries = []
    for l in range(d.k + 1) if levels == "all" else levels:
        beta = tail_product(d, l)
        checks = [
            exact_check("tail_product", beta, "<", FOUR_THIRDS, "Lemma 1.3: β(l) < 4/3", l, "info"),
            exact_check("gamma_threshold", gamma_threshold(d, l), ">", 1, "Prop 1.3: γ_l > 1", l, "info"),
        ]
        values = {
            "cutoff": cutoff(d, l),
            "length": d.M - l,
            "slope_counts": [f"{exact_str(slope)} x {count}" for slope, count in slope_counts(d, l)],
        }
        entries.append(_entry("slopes", {"k": d.k, "M": d.M, "degrees": d.label(), "l": l}, checks, values))
    return ReportDocument(__version__, _spec_echo(args), quantities=entries)


def _run_gamma(args: argparse.Namespace) -> ReportDocument:
    d = _resolve_tuple(args)
    levels = _levels(args, d)
    target = closed_form_bound(BoundName.THM31_TARGET, {"M": d.M, "k": d.k})
    entries = []
    for l in range(d.k + 1) if levels == "all" else levels:
        params = {"k": d.k, "M": d.M, "degrees": d.label(), "l": l}
        if cutoff(d, l) < 1:
            entries.append(_entry("gamma", params, [], {"cutoff": cutoff(d, l), "profile": []}))
            continue
        e, value = gamma_min(d, l)
        checks = [exact_check("gamma_min", value, ">=", target, "Theorem 3.1: min_e γ(e,d,l) ⩾ target", l, "info")]
        values = {
            "cutoff": cutoff(d, l),
            "argmin_e": e,
            "profile": [str(gamma) for _, gamma in gamma_profile(d, l)],
        }
        entries.append(_entry("gamma", params, checks, values))
    return ReportDocument(__version__, _spec_echo(args), quantities=entries)


def _run_certify(args: argparse.Namespace) -> ReportDocument:
    d = _resolve_tuple(args)
    certificate = certify_tuple(d, _config(args, _levels(args, d) if args.l is not None else "all"))
    return ReportDocument(__version__, _spec_echo(args), certificates=[certificate])


def _run_sweep(args: argparse.Namespace) -> ReportDocument:
    if args.shape != "explicit" and args.k_range is None:
        raise UsageError("sweep needs --k-range unless --shape explicit")
    try:
        if args.shape == "explicit":
            spec = GridSpec(shape="explicit", tuples=tuple(args.tuples))
        else:
            spec = GridSpec.k_range(*args.k_range, m_rule=args.m_rule, m_values=args.M_values, shape=args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not spec.points():
        raise UsageError(f"the grid {spec.to_dict()} has no points")
    levels: Tuple[int, ...] | str = (args.l,) if args.l is not None else "all"
    certificates = sweep(spec, _config(args, levels))
    return ReportDocument(__version__, _spec_echo(args), certificates=certificates)


def _run_analytic(args: argparse.Namespace) -> ReportDocument:
    try:
        check_lemma_inputs(args.lemma, args.k, args.M)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = run_lemma(args.lemma, args.k, args.M, _config(args))
    return ReportDocument(__version__, _spec_echo(args), analytic=[result.to_entry() for result in results])


def _run_bounds(args: argparse.Namespace) -> ReportDocument:
    k, M = args.k, args.M
    if k < 1 or M < k:
        raise UsageError(f"need 1 <= k <= M, got k={k}, M={M}")
    params = {"M": M, "k": k}
    checks = []
    for name, anchor in (
        (BoundName.THM04, "Theorem 0.4: (M−5k)(M−6k)/2"),
        (BoundName.THM02, "Theorem 0.2: (M−4k+1)(M−4k+2)/2 − (k−1)"),
        (BoundName.THM31_TARGET, "Theorem 3.1: (M−5k)(M−6k)/2 + M + k"),
        (BoundName.A, "Prop 3.6: A(M,k)"),
    ):
        value = closed_form_bound(name, params)
        checks.append(exact_check(name.value, value, "==", value, anchor, severity="info"))
    thm01 = closed_form_bound(BoundName.THM01, params)
    attained = thm01_attained_by(M, k)
    checks.append(
        exact_check(
            "thm01",
            thm01,
            "==",
            closed_form_bound(attained, params),
            f"Theorem 0.1: attained by {attained.value}",
            severity="info",
        )
    )
    l_min, prop22_min = min_prop22(M, k)
    values: Dict[str, Any] = {"prop22_argmin": l_min, "prop22_min": exact_str(prop22_min)}
    if args.l is not None:
        if not 1 <= args.l <= k:
            raise UsageError(f"--l must lie in 1..{k} for prop22, got {args.l}")
        values["prop22_at_l"] = exact_str(closed_form_bound(BoundName.PROP22, {"M": M, "k": k, "l": args.l}))
    entry = _entry("bounds", {"k": k, "M": M}, checks, values)
    return ReportDocument(__version__, _spec_echo(args), quantities=[entry])


_DISPATCH = {
    "slopes": _run_slopes,
    "gamma": _run_gamma,
    "certify": _run_certify,
    "sweep": _run_sweep,
    "verify-analytic": _run_analytic,
    "bounds": _run_bounds,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        document = _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"verify_bounds {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = document.render(args.format)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
        logger.info("report written to %s", args.out)
    else:
        sys.stdout.write(text)
    return document.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
