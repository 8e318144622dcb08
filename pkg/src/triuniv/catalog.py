"""Reference data embedded as a line-oriented text resource.

Records look like ``kind|payload``; see ``data/tables.txt``.  The file is
parsed once and kept read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from triuniv.core import CriterionSet, TargetParity, TriSum, parse_sum

RESOURCE = "tables.txt"


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(",") if v.strip())


@dataclass(frozen=True)
class Table1Row:
    prefix: TriSum
    low: int
    high: int
    excluded: tuple[int, ...]

    def expand(self) -> list[TriSum]:
        return [self.prefix.extend(c) for c in range(self.low, self.high + 1)
                if c not in self.excluded]


@dataclass
class ReferenceDataset:
    version: int = 0
    liouville_triples: list[TriSum] = field(default_factory=list)
    criteria: dict[str, CriterionSet] = field(default_factory=dict)
    even_truants: dict[TriSum, int] = field(default_factory=dict)
    truants: dict[TriSum, int] = field(default_factory=dict)
    exceptions: dict[tuple[TargetParity, TriSum], tuple[int, ...]] = field(default_factory=dict)
    table1_rows: list[Table1Row] = field(default_factory=list)


def parse_dataset(text: str) -> ReferenceDataset:
    data = ReferenceDataset()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, *fields = line.split("|")
        try:
            if kind == "version":
                data.version = int(fields[0])
            elif kind == "liouville":
                data.liouville_triples.append(parse_sum(fields[0]))
            elif kind == "criterion":
                name, parity, targets, provenance = fields
                data.criteria[name] = CriterionSet(name, _ints(targets), TargetParity(parity), provenance)
            elif kind == "even_truant":
                data.even_truants[parse_sum(fields[0])] = int(fields[1])
            elif kind == "truant":
                data.truants[parse_sum(fields[0])] = int(fields[1])
            elif kind == "exceptions":
                parity, s, values = fields
                data.exceptions[(TargetParity(parity), parse_sum(s))] = _ints(values)
            elif kind == "table1":
                prefix, span, excluded = fields
                low, high = (int(v) for v in span.split("-"))
                data.table1_rows.append(Table1Row(parse_sum(prefix), low, high, _ints(excluded)))
            else:
                raise ValueError(f"unknown record kind {kind!r}")
        except (ValueError, IndexError) as exc:
            raise ValueError(f"{RESOURCE}:{lineno}: {exc}") from exc
    return data


@lru_cache(maxsize=None)
def dataset() -> ReferenceDataset:
    text = resources.files("triuniv").joinpath("data").joinpath(RESOURCE).read_text()
    return parse_dataset(text)


def criterion(name: str) -> CriterionSet:
    """Look up a criterion set by name; ``E8`` and ``BK8`` short forms accepted."""
    aliases = {"E8": "E8-even", "e8": "E8-even", "bk8": "BK8", "kane": "kane-odd"}
    sets = dataset().criteria
    key = aliases.get(name, name)
    if key not in sets:
        raise KeyError(f"unknown criterion set {name!r}; choose from {sorted(sets)}")
    return sets[key]


def criterion_for(parity: TargetParity) -> CriterionSet:
    return {TargetParity.EVEN: criterion("E8-even"),
            TargetParity.ALL: criterion("BK8"),
            TargetParity.ODD: criterion("kane-odd")}[parity]


def liouville_triples() -> list[TriSum]:
    return list(dataset().liouville_triples)


def expected_even_truant(s: TriSum) -> int | None:
    return dataset().even_truants.get(s)


def expected_truant(s: TriSum) -> int | None:
    return dataset().truants.get(s)


def table1_expected() -> dict[int, list[TriSum]]:
    """Table of proper even universal sums, expanded and grouped by arity."""
    grouped: dict[int, list[TriSum]] = {}
    for row in dataset().table1_rows:
        for s in row.expand():
            grouped.setdefault(s.arity, []).append(s)
    return {k: sorted(v) for k, v in sorted(grouped.items())}
