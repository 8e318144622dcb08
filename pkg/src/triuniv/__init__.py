"""Representations of integers by weighted sums of triangular numbers.

Universality claims computed here are checked up to an explicit bound; only a
criterion set turns a finite check into a certified statement.
"""

from triuniv.core import (
    BudgetError,
    CriterionSet,
    InconsistencyError,
    TargetParity,
    TriSum,
    TriunivError,
    TruantReport,
    UniversalityStatus,
    canonicalize,
    parse_sum,
)
from triuniv.escalation import EscalationNode, NodeStatus, child_sums, escalate, is_proper, table1
from triuniv.reduction import (
    TailAssignment,
    TernarySectionForm,
    reduction_solver,
    shifted_target,
    substituted_solvable,
    tail_search,
)
from triuniv.representation import (
    AchievabilityCache,
    AchievabilitySequence,
    achievability,
    representation_count,
    represents,
    represents_even_via_odd_squares,
    triangular,
)
from triuniv.truant import classify, even_truant, truant, verify_bound

__version__ = "0.1.0"

__all__ = [
    "AchievabilityCache",
    "AchievabilitySequence",
    "BudgetError",
    "CriterionSet",
    "EscalationNode",
    "InconsistencyError",
    "NodeStatus",
    "TailAssignment",
    "TargetParity",
    "TernarySectionForm",
    "TriSum",
    "TriunivError",
    "TruantReport",
    "UniversalityStatus",
    "achievability",
    "canonicalize",
    "child_sums",
    "classify",
    "escalate",
    "even_truant",
    "is_proper",
    "parse_sum",
    "reduction_solver",
    "representation_count",
    "represents",
    "represents_even_via_odd_squares",
    "shifted_target",
    "substituted_solvable",
    "table1",
    "tail_search",
    "triangular",
    "truant",
    "verify_bound",
]
