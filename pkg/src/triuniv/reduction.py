"""Reducing an arity-k problem to a ternary one plus an odd tail.

An even target ``2n`` is represented by ``a_1 T(x_1) + ... + a_k T(x_k)``
iff ``sum(a_i y_i^2) = M = 16n + sum(a_i)`` has a solution with every ``y_i``
odd.  Fixing odd values for ``y_4..y_k`` leaves a ternary problem on the
first three coefficients (the ternary section).  When exactly one section
coefficient is odd, the oddness conditions can be traded for a substitution:
``a1 (x3 - 2 x1)^2 + a2 (x3 - 2 x2)^2 + a3 x3^2`` only takes values where all
three diagonal variables share a parity, and an odd total forces them odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Iterator, Sequence

from triuniv.core import TriSum, as_trisum
from triuniv.representation import (
    achievability,
    odd_square_solution,
    odd_square_target,
    represents_even_via_odd_squares,
)

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def shifted_target(s, n: int) -> int:
    """16n plus the sum of the coefficients."""
    return odd_square_target(s, n)


def _det(m: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _adjugate(m: Matrix) -> Matrix:
    (a, b, c), (d, e, f), (g, h, i) = m
    return ((e * i - f * h, c * h - b * i, b * f - c * e),
            (f * g - d * i, a * i - c * g, c * d - a * f),
            (d * h - e * g, b * g - a * h, a * e - b * d))


def _apply(m: Matrix, v: Sequence[int]) -> tuple[int, int, int]:
    return tuple(sum(r * x for r, x in zip(row, v)) for row in m)  # type: ignore[return-value]


def default_substitution(coefficients: Sequence[int]) -> Matrix | None:
    """``y_i = x_p - 2 x_i`` for the even coefficients, ``y_p = x_p`` for the odd one.

    Only defined when exactly one of the three coefficients is odd.
    """
    odd = [i for i, a in enumerate(coefficients) if a % 2]
    if len(coefficients) != 3 or len(odd) != 1:
        return None
    p = odd[0]
    rows = []
    for i in range(3):
        row = [0, 0, 0]
        row[p] = 1
        if i != p:
            row[i] = -2
        rows.append(tuple(row))
    return tuple(rows)  # type: ignore[return-value]


@dataclass(frozen=True)
class TernarySectionForm:
    """``f(x) = sum(a_i * (row_i . x)^2)`` for an integer substitution matrix.

    ``y = substitution @ x`` are the diagonal variables.  ``substitution`` is
    None when the parity pattern has no substitution; such sections are
    handled by the odd-square search instead.
    """

    coefficients: tuple[int, int, int]
    substitution: Matrix | None = None

    @classmethod
    def for_section(cls, s) -> TernarySectionForm:
        coeffs = tuple(as_trisum(s).coefficients[:3])
        if len(coeffs) != 3:
            raise ValueError("a ternary section needs at least three coefficients")
        return cls(coeffs, default_substitution(coeffs))  # type: ignore[arg-type]

    def __post_init__(self) -> None:
        if self.substitution is not None and _det(self.substitution) == 0:
            raise ValueError("substitution matrix must be nonsingular")

    @property
    def parity_pattern(self) -> tuple[int, int, int]:
        return tuple(a % 2 for a in self.coefficients)  # type: ignore[return-value]

    @property
    def supported(self) -> bool:
        return self.substitution is not None

    def diagonal(self, x: Sequence[int]) -> tuple[int, int, int]:
        if self.substitution is None:
            raise ValueError(f"no substitution for parity pattern {self.parity_pattern}")
        return _apply(self.substitution, x)

    def evaluate(self, x: Sequence[int]) -> int:
        return sum(a * y * y for a, y in zip(self.coefficients, self.diagonal(x)))

    def solve(self, m: int, bound: int | None = None) -> tuple[int, int, int] | None:
        """An integer x with f(x) == m, or None.

        Enumerates diagonal values y with ``|y_i| <= sqrt(m / a_i)`` (capped
        by ``bound``) and keeps those in the image of the substitution.
        """
        if self.substitution is None:
            raise ValueError(f"no substitution for parity pattern {self.parity_pattern}")
        if m < 0:
            return None
        a1, a2, a3 = self.coefficients
        det = _det(self.substitution)
        adj = _adjugate(self.substitution)
        r1, r2 = isqrt(m // a1), isqrt(m // a2)
        if bound is not None:
            r1, r2 = min(r1, bound), min(r2, bound)
        for y1 in range(-r1, r1 + 1):
            rest1 = m - a1 * y1 * y1
            for y2 in range(-r2, r2 + 1):
                rest = rest1 - a2 * y2 * y2
                if rest < 0:
                    continue
                if rest % a3:
                    continue
                q = rest // a3
                y3 = isqrt(q)
                if y3 * y3 != q or (bound is not None and y3 > bound):
                    continue
                for signed in ((y3, -y3) if y3 else (0,)):
                    num = _apply(adj, (y1, y2, signed))
                    if all(v % det == 0 for v in num):
                        x = tuple(v // det for v in num)
                        return x  # type: ignore[return-value]
        return None


def substituted_solvable(form: TernarySectionForm, m: int, bound: int | None = None) -> bool:
    return form.solve(m, bound) is not None


@dataclass(frozen=True)
class TailAssignment:
    values: tuple[int, ...]
    residual: int

    def __post_init__(self) -> None:
        if any(v % 2 == 0 for v in self.values):
            raise ValueError(f"tail values must be odd: {self.values}")
        if self.residual < 0:
            raise ValueError("residual must be nonnegative")


def _odd_tails(coeffs: Sequence[int], budget: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Odd positive tuples in lexicographic order with their weighted square sum <= budget."""
    if not coeffs:
        yield (), 0
        return
    head, rest = coeffs[0], coeffs[1:]
    floor_rest = sum(rest)
    v = 1
    while head * v * v + floor_rest <= budget:
        used = head * v * v
        for tail, weight in _odd_tails(rest, budget - used):
            yield (v,) + tail, used + weight
        v += 2


def section_oracle(s) -> Callable[[int], bool]:
    """Ternary check used by the reduction: substitution when available, else odd squares."""
    form = TernarySectionForm.for_section(s)
    if form.supported:
        return lambda m: form.solve(m) is not None
    section = form.coefficients
    return lambda m: odd_square_solution(section, m) is not None


def tail_search(s, n: int, ternary_oracle: Callable[[int], bool] | None = None,
                bound: int | None = None) -> TailAssignment | None:
    """First odd tail ``(a_4..a_k)`` whose residual the ternary section reaches.

    ``n`` is half the even target.  Tails are tried lexicographically by
    magnitude; ``bound`` optionally caps each magnitude.
    """
    s = as_trisum(s)
    if s.arity < 4:
        raise ValueError("tail search needs a sum with at least four coefficients")
    if ternary_oracle is None:
        section = s.coefficients[:3]
        ternary_oracle = lambda m: odd_square_solution(section, m) is not None  # noqa: E731
    m = shifted_target(s, n)
    section_floor = sum(s.coefficients[:3])
    for values, weight in _odd_tails(s.coefficients[3:], m - section_floor):
        if bound is not None and max(values) > bound:
            continue
        residual = m - weight
        if ternary_oracle(residual):
            return TailAssignment(values, residual)
    return None


def reduction_solver(s, target: int, bound: int | None = None) -> bool:
    """Decide an even target through the ternary reduction.

    A True answer always comes with an explicit odd solution, so it implies
    the target is represented.
    """
    s = as_trisum(s)
    if target < 0 or target % 2:
        raise ValueError(f"target must be a nonnegative even integer, got {target}")
    if s.arity < 3:
        raise ValueError("the reduction needs at least three coefficients")
    oracle = section_oracle(s)
    n = target // 2
    if s.arity == 3:
        return oracle(shifted_target(s, n))
    return tail_search(s, n, oracle, bound) is not None


@dataclass
class OracleReport:
    sums: int = 0
    targets: int = 0
    # (sum, target, sweep answer, odd-square answer)
    disagreements: list[tuple[TriSum, int, bool, bool]] = field(default_factory=list)
    # (sum, target) where the reduction claimed a target the sweep rejects
    unsound: list[tuple[TriSum, int]] = field(default_factory=list)
    reduction_hits: int = 0

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.unsound


def verify_oracles(sums, max_target: int = 2000, with_reduction: bool = True) -> OracleReport:
    """Compare the sweep, the odd-square search and the reduction on even targets."""
    report = OracleReport()
    for s in sums:
        s = as_trisum(s)
        seq = achievability(s, max(max_target, 1))
        report.sums += 1
        for target in range(0, max_target + 1, 2):
            report.targets += 1
            swept = seq[target]
            odd = represents_even_via_odd_squares(s, target)
            if swept != odd:
                report.disagreements.append((s, target, swept, odd))
            if with_reduction and s.arity >= 3:
                if reduction_solver(s, target):
                    report.reduction_hits += 1
                    if not swept:
                        report.unsound.append((s, target))
    return report
