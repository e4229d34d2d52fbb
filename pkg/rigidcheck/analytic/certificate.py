"""Certified sign verification by adaptive bisection of interval boxes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Literal, Mapping, Optional, Tuple

import numpy as np

from .expressions import CATALOG, ExprId, Params, iv_eval
from .intervals import DEFAULT_PRECISION, Interval, IntervalDomainError, interval_to_strings

try:  # pragma: no cover - networkx is only needed for tree export
    import networkx as nx
except ModuleNotFoundError:  # pragma: no cover
    nx = None  # type: ignore[assignment]

logger = logging.getLogger(__name__)

Sign = Literal["+", "-"]
Box = Tuple[Tuple[str, Interval], ...]
Outcome = Literal["certified", "refuted", "split", "open"]

DEFAULT_MAX_DEPTH = 40
DEFAULT_MAX_PRECISION = 512
DEFAULT_MAX_LEAVES = 200_000


def box_to_strings(box: Box) -> Dict[str, List[str]]:
    return {name: list(interval_to_strings(interval)) for name, interval in box}


@dataclass(slots=True)
class BoxNode:
    node_id: int
    depth: int
    box: Box
    precision: int
    enclosure: Optional[Interval]
    outcome: Outcome

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.node_id,
            "depth": self.depth,
            "box": box_to_strings(self.box),
            "precision": self.precision,
            "enclosure": None if self.enclosure is None else list(interval_to_strings(self.enclosure)),
            "outcome": self.outcome,
        }


@dataclass(slots=True)
class BisectionTree:
    """Sub-boxes explored by :func:`certify_sign`, rooted at node 0."""

    nodes: Dict[int, BoxNode] = field(default_factory=dict)
    child_to_parent: Dict[int, int] = field(default_factory=dict)
    parent_to_children: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    root: int = 0

    def add(self, node: BoxNode, parent: Optional[int]) -> None:
        self.nodes[node.node_id] = node
        self.parent_to_children.setdefault(node.node_id, ())
        if parent is not None:
            self.child_to_parent[node.node_id] = parent
            self.parent_to_children[parent] = self.parent_to_children.get(parent, ()) + (node.node_id,)

    def parent_of(self, node_id: int) -> int | None:
        return self.child_to_parent.get(node_id)

    def children_of(self, node_id: int) -> Tuple[int, ...]:
        return self.parent_to_children.get(node_id, ())

    def descendants(self) -> Iterator[BoxNode]:
        """Depth-first, low half first."""

        if not self.nodes:
            return
        stack = [self.root]
        while stack:
            node_id = stack.pop()
            yield self.nodes[node_id]
            stack.extend(reversed(self.children_of(node_id)))

    def leaves(self) -> List[BoxNode]:
        return [node for node in self.descendants() if not self.children_of(node.node_id)]

    @property
    def depth(self) -> int:
        return max((node.depth for node in self.nodes.values()), default=0)

    def to_networkx(self):
        """Convert the tree to a NetworkX `DiGraph`; nodes carry depth and outcome."""

        if nx is None:  # pragma: no cover - depends on optional extra
            raise RuntimeError("networkx is not available; install it to export bisection trees.")
        graph = nx.DiGraph()
        for node in self.nodes.values():
            graph.add_node(node.node_id, depth=node.depth, outcome=node.outcome, precision=node.precision)
        for child, parent in self.child_to_parent.items():
            graph.add_edge(parent, child)
        return graph


@dataclass(slots=True)
class SignCertificate:
    expr: ExprId
    box: Box
    params: Tuple[Tuple[str, int], ...]
    claimed_sign: Sign
    status: Literal["certified", "inconclusive"]
    tree: BisectionTree
    precision: int
    max_depth: int
    counterexample: Optional[BoxNode] = None

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def leaf_count(self) -> int:
        return len(self.tree.leaves())

    def box_label(self) -> str:
        parts = []
        for name, interval in self.box:
            lo, hi = interval_to_strings(interval)
            parts.append(f"{name} in [{lo}, {hi}]")
        return ", ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "expr": self.expr.value,
            "params": dict(self.params),
            "claimed_sign": self.claimed_sign,
            "status": self.status,
            "box": box_to_strings(self.box),
            "precision": self.precision,
            "max_depth": self.max_depth,
            "leaf_count": self.leaf_count,
            "tree_depth": self.tree.depth,
            "leaves": [leaf.to_dict() for leaf in self.tree.leaves()],
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
        }


def _relative_width(interval: Interval) -> Fraction:
    return interval.width / max(interval.magnitude, Fraction(1))


def _split_widest(box: Box) -> Tuple[Box, Box]:
    index = max(range(len(box)), key=lambda i: (_relative_width(box[i][1]), -i))
    name, interval = box[index]
    low, high = interval.split()
    return (
        box[:index] + ((name, low),) + box[index + 1 :],
        box[:index] + ((name, high),) + box[index + 1 :],
    )


def _decides(enclosure: Interval, sign: Sign) -> Optional[bool]:
    """True when the enclosure is strictly on the claimed side, False when strictly opposite."""

    if sign == "+":
        if enclosure.is_positive():
            return True
        if enclosure.hi < 0:
            return False
    else:
        if enclosure.is_negative():
            return True
        if enclosure.lo > 0:
            return False
    return None


def _is_narrow(box: Box, precision: int) -> bool:
    limit = Fraction(1, 1 << (precision // 4))
    return all(_relative_width(interval) <= limit for _, interval in box)


def _normalise_box(expr: ExprId, box: Mapping[str, Interval]) -> Box:
    variables = CATALOG[expr].variables
    missing = [name for name in variables if name not in box]
    if missing:
        raise ValueError(f"{expr.value} needs a box over {list(variables)}; missing {missing}")
    return tuple((name, box[name]) for name in variables)


def certify_sign(
    expr: ExprId | str,
    box: Mapping[str, Interval],
    params: Params | None = None,
    sign: Sign = "+",
    precision: int = DEFAULT_PRECISION,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_precision: int = DEFAULT_MAX_PRECISION,
    max_leaves: int = DEFAULT_MAX_LEAVES,
) -> SignCertificate:
    """Prove that ``expr`` has sign ``sign`` everywhere on ``box``.

    Boxes are explored depth first, low half first. An undecided box is
    bisected along its widest dimension in relative terms. Only once every
    side has relative width at most 2^-(p//4) at working precision p does
    it first retry at doubled precision (up to ``max_precision``); wider
    boxes stay at ``precision``. A box whose enclosure lies strictly on the
    wrong side of zero is recorded as the counterexample and ends the
    search. Running out of depth or leaves yields an inconclusive
    certificate, never an exception; a domain error that persists down to
    ``max_depth`` propagates.
    """

    expr = ExprId(expr)
    if sign not in ("+", "-"):
        raise ValueError(f"Claimed sign must be '+' or '-', got {sign!r}")
    if max_depth < 1:
        raise ValueError(f"max_depth must be at least 1, got {max_depth}")
    root_box = _normalise_box(expr, box)
    if all(interval.is_point() for _, interval in root_box):
        raise ValueError("Sign certification needs a non-degenerate box")
    param_items = tuple(sorted((params or {}).items()))

    tree = BisectionTree()
    counterexample: Optional[BoxNode] = None
    exhausted = False
    leaves = 0
    next_id = 0
    stack: List[Tuple[Box, int, Optional[int]]] = [(root_box, 0, None)]

    while stack:
        current, depth, parent = stack.pop()
        node_id, next_id = next_id, next_id + 1
        working = precision
        enclosure: Optional[Interval] = None
        verdict: Optional[bool] = None
        domain_error: Optional[IntervalDomainError] = None
        while True:
            try:
                enclosure = iv_eval(expr, dict(current), dict(param_items), working)
                domain_error = None
            except IntervalDomainError as exc:
                enclosure, domain_error = None, exc
            verdict = None if enclosure is None else _decides(enclosure, sign)
            if verdict is not None or working >= max_precision or not _is_narrow(current, working):
                break
            working = min(working * 2, max_precision)

        if verdict is True:
            tree.add(BoxNode(node_id, depth, current, working, enclosure, "certified"), parent)
            leaves += 1
        elif verdict is False:
            node = BoxNode(node_id, depth, current, working, enclosure, "refuted")
            tree.add(node, parent)
            counterexample = node
            leaves += 1
            break
        elif depth >= max_depth:
            if domain_error is not None:
                raise domain_error
            tree.add(BoxNode(node_id, depth, current, working, enclosure, "open"), parent)
            leaves += 1
            exhausted = True
        elif leaves + len(stack) + 2 > max_leaves:
            tree.add(BoxNode(node_id, depth, current, working, enclosure, "open"), parent)
            exhausted = True
            logger.warning("%s: leaf budget %d exhausted on %s", expr.value, max_leaves, box_to_strings(current))
            break
        else:
            tree.add(BoxNode(node_id, depth, current, working, enclosure, "split"), parent)
            low, high = _split_widest(current)
            stack.append((high, depth + 1, node_id))
            stack.append((low, depth + 1, node_id))

    certified = counterexample is None and not exhausted and not stack
    status: Literal["certified", "inconclusive"] = "certified" if certified else "inconclusive"
    certificate = SignCertificate(
        expr=expr,
        box=root_box,
        params=param_items,
        claimed_sign=sign,
        status=status,
        tree=tree,
        precision=precision,
        max_depth=max_depth,
        counterexample=counterexample,
    )
    logger.debug(
        "%s %s 0 on %s: %s (%d nodes, depth %d)",
        expr.value,
        ">" if sign == "+" else "<",
        certificate.box_label(),
        status,
        len(tree.nodes),
        tree.depth,
    )
    return certificate


@dataclass(slots=True, frozen=True)
class SignAudit:
    samples: int
    violations: Tuple[Dict[str, str], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def audit_certificate(
    certificate: SignCertificate,
    samples: int = 100,
    rng: np.random.Generator | None = None,
) -> SignAudit:
    """Evaluate the expression at random points of the box and look for the opposite sign."""

    rng = np.random.default_rng(0) if rng is None else rng
    names = [name for name, _ in certificate.box]
    lows = [interval.lo for _, interval in certificate.box]
    widths = [interval.width for _, interval in certificate.box]
    draws = rng.random((samples, len(names)))
    violations = []
    for row in draws:
        point = {
            name: Interval.point(lo + Fraction(float(u)) * width, certificate.precision)
            for name, lo, width, u in zip(names, lows, widths, row)
        }
        value = iv_eval(certificate.expr, point, dict(certificate.params), certificate.precision)
        if _decides(value, certificate.claimed_sign) is False:
            violations.append({name: str(interval.lo) for name, interval in point.items()})
    return SignAudit(samples=samples, violations=tuple(violations))
