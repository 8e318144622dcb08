"""Deciding which integers a weighted sum of triangular numbers represents.

The main path is a shift-union sweep over a bitset held in a Python ``int``
(bit ``n`` set iff ``n`` is represented).  Two independent checks sit beside
it: a search over odd squares of ``sum(a_i x_i^2) = 16n + sum(a_i)``, and a
brute-force count of triangular tuples.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from math import isqrt
from pathlib import Path
from typing import IO, Iterable, Iterator

import numpy as np

from triuniv.core import BudgetError, TargetParity, TriSum, as_trisum

# bits per sequence; 2**28 bits is 32 MiB per cached entry
MAX_BOUND = 2**28
# enumeration budget for representation_count
COUNT_BUDGET = 10**7

CACHE_MAGIC = "TRIUNIV1"
CACHE_ENV = "TRIUNIV_CACHE_DIR"


def triangular(x: int) -> int:
    return (x * x + x) // 2


def triangular_values(limit: int, step: int = 1) -> Iterator[int]:
    """Yield step*T(j) for j = 0, 1, 2, ... while the value is <= limit."""
    j = 0
    t = 0
    while t <= limit:
        yield t
        j += 1
        t = step * triangular(j)


def _low_mask(nbits: int) -> int:
    return (1 << nbits) - 1


def _parity_mask(nbits: int, parity: TargetParity) -> int:
    if parity is TargetParity.ALL:
        return _low_mask(nbits)
    nbytes = (nbits + 7) // 8
    pattern = b"\x55" if parity is TargetParity.EVEN else b"\xaa"
    return int.from_bytes(pattern * nbytes, "little") & _low_mask(nbits)


@dataclass(frozen=True)
class AchievabilitySequence:
    """Which of 0..bound the sum represents, packed into an int."""

    sum: TriSum
    bound: int
    bits: int

    def __getitem__(self, n: int) -> bool:
        if not 0 <= n <= self.bound:
            raise IndexError(f"{n} outside 0..{self.bound}")
        return bool((self.bits >> n) & 1)

    def __len__(self) -> int:
        return self.bound + 1

    def represented(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def missing(self, parity: TargetParity = TargetParity.ALL) -> Iterator[int]:
        """Non-represented targets of the given parity, ascending."""
        gaps = ~self.bits & _parity_mask(self.bound + 1, parity)
        while gaps:
            low = gaps & -gaps
            yield low.bit_length() - 1
            gaps ^= low

    def first_missing(self, parity: TargetParity = TargetParity.ALL) -> int | None:
        return next(self.missing(parity), None)

    def count(self) -> int:
        return bin(self.bits).count("1")

    def truncate(self, bound: int) -> AchievabilitySequence:
        if bound > self.bound:
            raise ValueError(f"cannot extend a sequence from {self.bound} to {bound}")
        return AchievabilitySequence(self.sum, bound, self.bits & _low_mask(bound + 1))

    def as_array(self) -> np.ndarray:
        """Boolean array of length bound+1."""
        nbytes = (self.bound + 1 + 7) // 8
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.bound + 1].astype(bool)

    def to_hex(self) -> str:
        nbytes = (self.bound + 1 + 7) // 8
        return self.bits.to_bytes(nbytes, "little").hex()


def _check_bound(bound: int) -> None:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if bound > MAX_BOUND:
        raise BudgetError(f"bound {bound} exceeds the memory budget of {MAX_BOUND} bits")


def _sweep(bits: int, coefficient: int, bound: int) -> int:
    acc = bits
    for shift in triangular_values(bound, coefficient):
        if shift:
            acc |= bits << shift
    return acc & _low_mask(bound + 1)


def extend(seq: AchievabilitySequence, *coefficients: int) -> AchievabilitySequence:
    """Sequence of ``seq.sum`` with extra coefficients appended."""
    bits = seq.bits
    for c in coefficients:
        bits = _sweep(bits, c, seq.bound)
    return AchievabilitySequence(seq.sum.extend(*coefficients), seq.bound, bits)


def compute_achievability(s: TriSum, bound: int) -> AchievabilitySequence:
    """Uncached sweep; starts from {0} and unions shifted copies per coefficient."""
    _check_bound(bound)
    return extend(AchievabilitySequence(TriSum(), bound, 1), *s.coefficients)


class AchievabilityCache:
    """Sequences keyed by sum; a larger bound answers any smaller request.

    Reads are lock-free dict lookups; inserts take a lock so that a wider
    entry is never replaced by a narrower one.  When ``directory`` is set the
    entries are also persisted there, one file per sum.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self._entries: dict[TriSum, AchievabilitySequence] = {}
        self._lock = threading.Lock()
        self.directory = Path(directory) if directory else None

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def lookup(self, s: TriSum, bound: int) -> AchievabilitySequence | None:
        seq = self._entries.get(s)
        if seq is None and self.directory is not None:
            seq = self._load(s)
        if seq is None or seq.bound < bound:
            return None
        return seq if seq.bound == bound else seq.truncate(bound)

    def store(self, seq: AchievabilitySequence) -> None:
        with self._lock:
            old = self._entries.get(seq.sum)
            if old is not None and old.bound >= seq.bound:
                return
            self._entries[seq.sum] = seq
        if self.directory is not None:
            self._save(seq)

    def get(self, s: TriSum, bound: int) -> AchievabilitySequence:
        seq = self.lookup(s, bound)
        if seq is None:
            seq = self._build(s, bound)
            self.store(seq)
        return seq

    def _build(self, s: TriSum, bound: int) -> AchievabilitySequence:
        # reuse the longest cached prefix of the coefficient list
        _check_bound(bound)
        for cut in range(s.arity - 1, 0, -1):
            prefix = self.lookup(TriSum(s.coefficients[:cut]), bound)
            if prefix is not None:
                return extend(prefix, *s.coefficients[cut:])
        return compute_achievability(s, bound)

    def _path(self, s: TriSum) -> Path:
        assert self.directory is not None
        name = "_".join(map(str, s.coefficients)) or "empty"
        return self.directory / f"{name}.triuniv"

    def _load(self, s: TriSum) -> AchievabilitySequence | None:
        path = self._path(s)
        if not path.exists():
            return None
        with open(path) as fp:
            for seq in read_records(fp):
                if seq.sum == s:
                    with self._lock:
                        self._entries[s] = seq
                    return seq
        return None

    def _save(self, seq: AchievabilitySequence) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(seq.sum)
        tmp = path.with_suffix(f".tmp{threading.get_ident()}")
        with open(tmp, "w") as fp:
            write_records(fp, [seq])
        os.replace(tmp, path)


def write_records(fp: IO[str], seqs: Iterable[AchievabilitySequence]) -> None:
    """Cache file format: magic line, then per sum a header line and a hex line."""
    fp.write(CACHE_MAGIC + "\n")
    for seq in seqs:
        fp.write(f"sum={seq.sum} N={seq.bound}\n")
        fp.write(seq.to_hex() + "\n")


def read_records(fp: IO[str]) -> Iterator[AchievabilitySequence]:
    magic = fp.readline().strip()
    if magic != CACHE_MAGIC:
        raise ValueError(f"not a cache file (magic {magic!r})")
    while True:
        header = fp.readline()
        if not header.strip():
            return
        fields = dict(item.split("=", 1) for item in header.split())
        coeffs = tuple(int(c) for c in fields["sum"].split(",") if c)
        bound = int(fields["N"])
        payload = bytes.fromhex(fp.readline().strip())
        if len(payload) != (bound + 1 + 7) // 8:
            raise ValueError(f"record for sum={fields['sum']} has the wrong length")
        bits = int.from_bytes(payload, "little") & _low_mask(bound + 1)
        yield AchievabilitySequence(TriSum(coeffs), bound, bits)


default_cache = AchievabilityCache(os.environ.get(CACHE_ENV) or None)


def achievability(s, bound: int, cache: AchievabilityCache | None = None) -> AchievabilitySequence:
    """Bitset of the integers in 0..bound represented by ``s``."""
    s = as_trisum(s)
    _check_bound(bound)
    return (cache or default_cache).get(s, bound)


def _rounded_bound(n: int) -> int:
    # round up so that nearby queries share one cache entry
    return max(1024, 1 << n.bit_length())


def represents(s, n: int, cache: AchievabilityCache | None = None) -> bool:
    if n < 0:
        return False
    s = as_trisum(s)
    seq = (cache or default_cache).lookup(s, n)
    if seq is None:
        bound = _rounded_bound(n)
        seq = achievability(s, bound if bound <= MAX_BOUND else max(n, 1), cache)
    return seq[n]


def odd_square_target(s, n: int) -> int:
    """16n + sum of coefficients."""
    return 16 * n + as_trisum(s).total


def odd_square_solution(coefficients: tuple[int, ...], target: int) -> tuple[int, ...] | None:
    """Positive odd (x_i) with sum(c_i x_i^2) == target, or None.

    Nested descent: the largest coefficients are fixed first, each remaining
    budget must still cover one odd square per coefficient left, and the last
    variable is solved with an integer square root.
    """
    if not coefficients:
        return () if target == 0 else None
    order = sorted(range(len(coefficients)), key=lambda i: -coefficients[i])
    coeffs = [coefficients[i] for i in order]
    # floor[i] = least value the variables i.. can take together (all x = 1)
    floor = [0] * (len(coeffs) + 1)
    for i in range(len(coeffs) - 1, -1, -1):
        floor[i] = floor[i + 1] + coeffs[i]
    values = [0] * len(coeffs)

    def descend(i: int, remaining: int) -> bool:
        c = coeffs[i]
        if i == len(coeffs) - 1:
            if remaining % c:
                return False
            q = remaining // c
            r = isqrt(q)
            if r * r == q and r % 2 == 1:
                values[i] = r
                return True
            return False
        x = 1
        while c * x * x + floor[i + 1] <= remaining:
            values[i] = x
            if descend(i + 1, remaining - c * x * x):
                return True
            x += 2
        return False

    if target < floor[0] or not descend(0, target):
        return None
    out = [0] * len(coeffs)
    for pos, i in enumerate(order):
        out[i] = values[pos]
    return tuple(out)


def represents_even_via_odd_squares(s, target: int) -> bool:
    """Decide an even target through the odd-square formulation.

    ``2n`` is represented iff ``sum(a_i x_i^2) = 16n + sum(a_i)`` has a
    solution in odd integers, because ``(2x+1)^2 = 8T(x) + 1``.
    """
    if target < 0 or target % 2:
        raise ValueError(f"target must be a nonnegative even integer, got {target}")
    s = as_trisum(s)
    return odd_square_solution(s.coefficients, odd_square_target(s, target // 2)) is not None


def representation_count(s, n: int, budget: int = COUNT_BUDGET) -> int:
    """Number of tuples (x_1..x_k), all x_i >= 0, with sum(a_i T(x_i)) == n.

    Plain enumeration, used as an oracle for the sweep.
    """
    s = as_trisum(s)
    if n < 0:
        return 0
    choices = [list(triangular_values(n, c)) for c in s.coefficients]
    size = 1
    for ch in choices:
        size *= len(ch)
    if size > budget:
        raise BudgetError(f"enumeration of {size} tuples exceeds the budget of {budget}")

    def count(i: int, remaining: int) -> int:
        if i == len(choices):
            return int(remaining == 0)
        total = 0
        for v in choices[i]:
            if v > remaining:
                break
            total += count(i + 1, remaining - v)
        return total

    return count(0, n)
