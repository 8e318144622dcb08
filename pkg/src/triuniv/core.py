"""Domain types shared across the package.

A sum of triangular numbers ``a1*T(x1) + ... + ak*T(xk)`` is identified by the
multiset of its coefficients, so :class:`TriSum` stores them sorted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

# keeps 16n + sum(coefficients) comfortably inside 64 bits at any supported bound
MAX_COEFFICIENT = 2**20


class TriunivError(Exception):
    """Base class for errors raised by this package."""


class BudgetError(TriunivError):
    """A computation would exceed its configured resource budget."""


class InconsistencyError(TriunivError):
    """Two independent computations disagree."""


class TargetParity(enum.Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"

    def admits(self, n: int) -> bool:
        if self is TargetParity.ALL:
            return True
        return n % 2 == (0 if self is TargetParity.EVEN else 1)


@dataclass(frozen=True, order=True)
class TriSum:
    """Canonical multiset of positive coefficients, stored nondecreasing.

    ``TriSum(())`` is the empty sum; it represents only 0 and is used as the
    root of the escalation tree.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(sorted(int(c) for c in self.coefficients))
        for c in coeffs:
            if c < 1:
                raise ValueError(f"coefficients must be positive, got {c}")
            if c > MAX_COEFFICIENT:
                raise ValueError(f"coefficient {c} exceeds the limit {MAX_COEFFICIENT}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def of(cls, *coefficients: int) -> TriSum:
        return cls(tuple(coefficients))

    @property
    def arity(self) -> int:
        return len(self.coefficients)

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    @property
    def largest(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.coefficients))

    def __repr__(self) -> str:
        return f"TriSum({str(self) or 'empty'})"

    def extend(self, *extra: int) -> TriSum:
        return TriSum(self.coefficients + tuple(extra))

    def scaled(self, factor: int) -> TriSum:
        return TriSum(tuple(factor * c for c in self.coefficients))

    def deletions(self) -> list[TriSum]:
        """Distinct sub-multisets obtained by dropping one coefficient."""
        seen = []
        for i in range(self.arity):
            sub = TriSum(self.coefficients[:i] + self.coefficients[i + 1:])
            if sub not in seen:
                seen.append(sub)
        return seen


def canonicalize(raw: Iterable[int]) -> TriSum:
    """Build a user-facing :class:`TriSum`; rejects the empty sum."""
    coeffs = tuple(raw)
    if not coeffs:
        raise ValueError("a sum needs at least one coefficient")
    return TriSum(coeffs)


def parse_sum(text: str) -> TriSum:
    """Parse the textual form ``"1,1,7,14"`` (any order, spaces allowed)."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed sum {text!r}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed sum {text!r}") from None
    return canonicalize(values)


@dataclass(frozen=True)
class TruantReport:
    """Least non-represented target of a given parity, searched up to ``bound``.

    ``value`` is None when every admissible target up to ``bound`` is
    represented (the infinite truant, as far as the bound can tell).
    """

    parity: TargetParity
    bound: int
    value: int | None = None

    @property
    def found(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        if self.value is None:
            return f"none up to {self.bound}"
        return str(self.value)


class StatusKind(enum.Enum):
    CERTIFIED = "criterion-certified"
    BOUND_VERIFIED = "bound-verified"
    FAILS = "fails-at"


@dataclass(frozen=True)
class UniversalityStatus:
    kind: StatusKind
    parity: TargetParity
    criterion: str | None = None
    bound: int | None = None
    target: int | None = None

    @classmethod
    def certified(cls, criterion: str, parity: TargetParity) -> UniversalityStatus:
        return cls(StatusKind.CERTIFIED, parity, criterion=criterion)

    @classmethod
    def bound_verified(cls, bound: int, parity: TargetParity) -> UniversalityStatus:
        return cls(StatusKind.BOUND_VERIFIED, parity, bound=bound)

    @classmethod
    def fails_at(cls, target: int, parity: TargetParity) -> UniversalityStatus:
        return cls(StatusKind.FAILS, parity, target=target)

    @property
    def universal(self) -> bool:
        return self.kind is not StatusKind.FAILS

    def __str__(self) -> str:
        if self.kind is StatusKind.CERTIFIED:
            return f"certified by {self.criterion}"
        if self.kind is StatusKind.BOUND_VERIFIED:
            return f"verified up to {self.bound}"
        return f"fails at {self.target}"


@dataclass(frozen=True)
class CriterionSet:
    name: str
    targets: tuple[int, ...]
    parity: TargetParity
    provenance: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        targets = tuple(sorted(set(self.targets)))
        if not targets:
            raise ValueError("criterion set must be nonempty")
        if targets[0] < 1:
            raise ValueError("criterion targets must be positive")
        if any(not self.parity.admits(t) for t in targets):
            raise ValueError(f"targets of {self.name} do not match parity {self.parity.value}")
        object.__setattr__(self, "targets", targets)

    def __contains__(self, n: int) -> bool:
        return n in self.targets

    def __iter__(self) -> Iterator[int]:
        return iter(self.targets)

    @property
    def largest(self) -> int:
        return self.targets[-1]


def as_trisum(value: TriSum | Sequence[int] | str) -> TriSum:
    """Accept a TriSum, a coefficient sequence or the textual form."""
    if isinstance(value, TriSum):
        return value
    if isinstance(value, str):
        return parse_sum(value)
    return canonicalize(value)
