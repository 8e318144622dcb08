"""Truants and criterion-based classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from triuniv.core import (
    CriterionSet,
    InconsistencyError,
    TargetParity,
    TriSum,
    TruantReport,
    UniversalityStatus,
    as_trisum,
)
from triuniv.representation import AchievabilityCache, achievability

DEFAULT_BOUND = 10**5
TABLE_BOUND = 10**4


def first_missing(s, parity: TargetParity, bound: int,
                  cache: AchievabilityCache | None = None) -> TruantReport:
    """Least target of ``parity`` in 0..bound that ``s`` misses."""
    seq = achievability(as_trisum(s), bound, cache)
    return TruantReport(parity, bound, seq.first_missing(parity))


def truant(s, bound: int = DEFAULT_BOUND, cache: AchievabilityCache | None = None) -> TruantReport:
    return first_missing(s, TargetParity.ALL, bound, cache)


def even_truant(s, bound: int = DEFAULT_BOUND, cache: AchievabilityCache | None = None) -> TruantReport:
    if bound < 2 or bound % 2:
        raise ValueError(f"even truant bound must be even and >= 2, got {bound}")
    return first_missing(s, TargetParity.EVEN, bound, cache)


def odd_truant(s, bound: int = DEFAULT_BOUND, cache: AchievabilityCache | None = None) -> TruantReport:
    return first_missing(s, TargetParity.ODD, bound, cache)


def verify_bound(s, parity: TargetParity, bound: int = DEFAULT_BOUND,
                 cache: AchievabilityCache | None = None) -> UniversalityStatus:
    """Check every target up to ``bound``; never claims more than that."""
    report = first_missing(s, parity, bound, cache)
    if report.found:
        return UniversalityStatus.fails_at(report.value, parity)
    return UniversalityStatus.bound_verified(bound, parity)


def classify(s, criterion: CriterionSet, bound: int = DEFAULT_BOUND,
             cache: AchievabilityCache | None = None) -> UniversalityStatus:
    """Test the criterion targets, then cross-check with the truant up to ``bound``.

    A sum passing the criterion must miss nothing of that parity up to the
    bound; a failing sum's truant must be the least criterion target it misses.
    Any disagreement raises :class:`InconsistencyError`.
    """
    s = as_trisum(s)
    bound = max(bound, criterion.largest)
    seq = achievability(s, bound, cache)
    missed = [t for t in criterion if not seq[t]]
    first = seq.first_missing(criterion.parity)
    if not missed:
        if first is not None:
            raise InconsistencyError(
                f"{s!r} represents every target of {criterion.name} but misses {first}")
        return UniversalityStatus.certified(criterion.name, criterion.parity)
    if first != missed[0]:
        raise InconsistencyError(
            f"{s!r} fails {criterion.name} at {missed[0]} but its truant is {first}")
    return UniversalityStatus.fails_at(missed[0], criterion.parity)


def random_sums(count: int, max_coefficient: int = 50, max_arity: int = 6,
                seed: int = 0) -> list[TriSum]:
    """Seeded sums with arity uniform in 1..max_arity and coefficients in 1..max_coefficient."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        k = int(rng.integers(1, max_arity + 1))
        out.append(TriSum(tuple(int(c) for c in rng.integers(1, max_coefficient + 1, size=k))))
    return out


@dataclass
class CriterionCheck:
    """Outcome of comparing a criterion with bounded verification over a population."""

    criterion: CriterionSet
    bound: int
    checked: int = 0
    passing: int = 0
    counterexamples: list[tuple[TriSum, bool, TruantReport]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_criterion(criterion: CriterionSet, population: Iterable, bound: int = DEFAULT_BOUND,
                    cache: AchievabilityCache | None = None) -> CriterionCheck:
    """For each sum: passes the criterion <=> misses nothing of its parity up to ``bound``."""
    bound = max(bound, criterion.largest)
    result = CriterionCheck(criterion, bound)
    for s in population:
        s = as_trisum(s)
        seq = achievability(s, bound, cache)
        passes = all(seq[t] for t in criterion)
        report = TruantReport(criterion.parity, bound, seq.first_missing(criterion.parity))
        result.checked += 1
        result.passing += passes
        if passes == report.found:
            result.counterexamples.append((s, passes, report))
    return result
