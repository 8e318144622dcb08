"""Escalation: the tree of candidate sums and the proper universal sums in it.

Starting from the empty sum, every node whose truant is ``t`` gets one child
per coefficient ``c`` with ``max(sum) <= c <= t``.  Nodes that pass the
criterion set are leaves.  Chains such as ``1,1,6,9,9,9,...`` never certify,
so depth is capped at ``max_arity``; see :func:`escalate` for the extra
chain pruning used past the known layers.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from typing import Iterator

from triuniv import catalog
from triuniv.core import InconsistencyError, TargetParity, TriSum, TruantReport, as_trisum
from triuniv.representation import AchievabilityCache, AchievabilitySequence, default_cache, extend
from triuniv.truant import DEFAULT_BOUND, classify, first_missing


# chain pruning never removes nodes of arity <= 5
PRUNE_FROM_ARITY = 5


class NodeStatus(enum.Enum):
    CERTIFIED = "certified"
    FAILING = "failing"
    TRUNCATED = "truncated"


@dataclass
class EscalationNode:
    sum: TriSum
    truant: TruantReport
    status: NodeStatus
    proper: bool | None = None
    # chain pruning stopped expansion of this node
    pruned: bool = False
    children: list[EscalationNode] = field(default_factory=list)

    @property
    def arity(self) -> int:
        return self.sum.arity

    def walk(self) -> Iterator[EscalationNode]:
        yield self
        for child in self.children:
            yield from child.walk()

    def layer(self, arity: int) -> list[EscalationNode]:
        return [n for n in self.walk() if n.arity == arity]

    def to_dict(self) -> dict:
        return {
            "sum": str(self.sum),
            "even_truant" if self.truant.parity is TargetParity.EVEN else "truant": str(self.truant),
            "status": self.status.value,
            "proper": self.proper,
            **({"pruned": True} if self.pruned else {}),
            "children": [c.to_dict() for c in self.children],
        }


def child_sums(node: EscalationNode) -> list[TriSum]:
    """Candidates one coefficient longer: ``max(sum) <= c <= truant``."""
    if node.status is NodeStatus.CERTIFIED or not node.truant.found:
        return []
    low = max(node.sum.largest, 1)
    return [node.sum.extend(c) for c in range(low, node.truant.value + 1)]


def is_proper(s, bound: int = DEFAULT_BOUND, parity: TargetParity = TargetParity.EVEN,
              cache: AchievabilityCache | None = None) -> bool:
    """True iff every one-coefficient deletion misses some target up to ``bound``.

    Dropping more than one coefficient only shrinks the represented set, so
    the single deletions are enough.
    """
    s = as_trisum(s)
    if parity is TargetParity.EVEN and bound % 2:
        bound -= 1
    return all(first_missing(sub, parity, bound, cache).found for sub in s.deletions())


def _make_node(seq: AchievabilitySequence, parity: TargetParity, bound: int,
               cache: AchievabilityCache) -> EscalationNode:
    criterion = catalog.criterion_for(parity)
    report = TruantReport(parity, bound, seq.first_missing(parity))
    if seq.sum.arity == 0:
        return EscalationNode(seq.sum, report, NodeStatus.FAILING)
    status = classify(seq.sum, criterion, bound, cache)
    if status.universal:
        if report.found:
            raise InconsistencyError(f"{seq.sum!r} certified but misses {report.value}")
        return EscalationNode(seq.sum, report, NodeStatus.CERTIFIED,
                              proper=is_proper(seq.sum, bound, parity, cache))
    if not report.found:
        raise InconsistencyError(f"{seq.sum!r} fails {criterion.name} but has no truant up to {bound}")
    return EscalationNode(seq.sum, report, NodeStatus.FAILING)


def escalate(max_arity: int = 5, bound: int = DEFAULT_BOUND, *,
             parity: TargetParity = TargetParity.EVEN, prune_chains: bool = True,
             cache: AchievabilityCache | None = None) -> EscalationNode:
    """Build the candidate tree down to ``max_arity`` coefficients.

    Failing nodes at ``max_arity`` are marked truncated.  With
    ``prune_chains`` a node is not expanded when its last coefficient repeats
    the previous one and leaves the truant unchanged (``1,1,6,9,9`` after
    ``1,1,6,9``); this is a heuristic cut that mirrors the repeating-chain
    arguments and is flagged on the node.  It first bites at arity 5, so the
    tree up to arity 5 is complete.
    """
    if max_arity < 1:
        raise ValueError("max_arity must be at least 1")
    cache = cache or default_cache
    if parity is TargetParity.EVEN and bound % 2:
        bound -= 1
    root_seq = AchievabilitySequence(TriSum(), bound, 1)
    root = _make_node(root_seq, parity, bound, cache)

    def grow(node: EscalationNode, seq: AchievabilitySequence) -> None:
        if node.status is NodeStatus.CERTIFIED:
            return
        if node.arity >= max_arity:
            node.status = NodeStatus.TRUNCATED
            return
        for child_sum in child_sums(node):
            c = child_sum.largest
            child_seq = cache.lookup(child_sum, bound) or extend(seq, c)
            cache.store(child_seq)
            child = _make_node(child_seq, parity, bound, cache)
            node.children.append(child)
            if (prune_chains and child.arity >= PRUNE_FROM_ARITY and child.arity < max_arity
                    and child.status is NodeStatus.FAILING
                    and c == node.sum.largest and child.truant.value == node.truant.value):
                child.pruned = True
                continue
            grow(child, child_seq)

    grow(root, root_seq)
    return root


@dataclass
class Table1Result:
    found: dict[int, list[TriSum]]
    expected: dict[int, list[TriSum]]
    bound: int

    @property
    def missing(self) -> dict[int, list[TriSum]]:
        return {k: sorted(set(v) - set(self.found.get(k, []))) for k, v in self.expected.items()
                if set(v) - set(self.found.get(k, []))}

    @property
    def unexpected(self) -> dict[int, list[TriSum]]:
        return {k: sorted(set(v) - set(self.expected.get(k, []))) for k, v in self.found.items()
                if set(v) - set(self.expected.get(k, []))}

    @property
    def matches(self) -> bool:
        return not self.missing and not self.unexpected

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.found.items()}

    def rows(self) -> list[tuple[int, TriSum]]:
        return [(k, s) for k in sorted(self.found) for s in self.found[k]]

    def diff_report(self) -> str:
        if self.matches:
            return "table matches the catalog"
        lines = []
        for k, sums in self.missing.items():
            lines.append(f"arity {k} missing: " + " ".join(f"({s})" for s in sums))
        for k, sums in self.unexpected.items():
            lines.append(f"arity {k} unexpected: " + " ".join(f"({s})" for s in sums))
        return "\n".join(lines)


def proper_universal_sums(root: EscalationNode) -> dict[int, list[TriSum]]:
    grouped: dict[int, list[TriSum]] = {}
    for node in root.walk():
        if node.status is NodeStatus.CERTIFIED and node.proper:
            grouped.setdefault(node.arity, []).append(node.sum)
    return {k: sorted(v) for k, v in sorted(grouped.items())}


def table1(bound: int = DEFAULT_BOUND, cache: AchievabilityCache | None = None) -> Table1Result:
    """Proper even universal sums from the arity-5 tree, compared with the catalog."""
    root = escalate(5, bound, cache=cache)
    return Table1Result(proper_universal_sums(root), catalog.table1_expected(), bound)


def tree_json(root: EscalationNode, **dump_kwargs) -> str:
    return json.dumps(root.to_dict(), **dump_kwargs)


def table1_csv(result: Table1Result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["arity", "coefficients", "proper"])
    for arity, s in result.rows():
        writer.writerow([arity, str(s), "true"])
    return buf.getvalue()


def universal_ternaries(bound: int = DEFAULT_BOUND,
                        cache: AchievabilityCache | None = None) -> list[TriSum]:
    """Ternary sums certified universal by the all-integer escalation."""
    root = escalate(3, bound, parity=TargetParity.ALL, cache=cache)
    return sorted(n.sum for n in root.layer(3) if n.status is NodeStatus.CERTIFIED)
