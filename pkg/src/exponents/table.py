from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Tuple

from algebra import FreeComplex

Exponent = Tuple[int, ...]
Label = Hashable


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def shift_set(exponents: Iterable[Exponent], offset: Exponent) -> FrozenSet[Exponent]:
    return frozenset(add_exponents(m, offset) for m in exponents)


class ExponentTable:
    """
    The exponent sets E_ij of a complex.

    Only nonempty entries are stored; `get` returns the empty set otherwise. Entry (i, j) can
    only be nonempty when deg(i) > deg(j).

    Parameters:
    - n: number of variables.
    - labels: ordered index labels.
    - degrees: label -> degree.
    - entries: (i, j) -> set of exponent tuples.
    """

    def __init__(self, n: int, labels: Iterable[Label], degrees: Mapping[Label, int],
                 entries: Mapping[Tuple[Label, Label], Iterable[Exponent]]):
        self.n = n
        self.labels: Tuple[Label, ...] = tuple(labels)
        self.degrees: Dict[Label, int] = dict(degrees)
        self.entries: Dict[Tuple[Label, Label], FrozenSet[Exponent]] = {}
        for (i, j), exponents in entries.items():
            exponents = frozenset(tuple(int(x) for x in m) for m in exponents)
            if not exponents:
                continue
            if self.degrees[i] <= self.degrees[j]:
                raise ValueError(
                    f"ExponentTable: E_({i},{j}) must be empty since deg({i}) <= deg({j})")
            if any(len(m) != n for m in exponents):
                raise ValueError(f"ExponentTable: E_({i},{j}) has exponents of the wrong length")
            self.entries[(i, j)] = exponents

    def get(self, i: Label, j: Label) -> FrozenSet[Exponent]:
        return self.entries.get((i, j), frozenset())

    def gap(self, i: Label, j: Label) -> int:
        return self.degrees[i] - self.degrees[j]

    def gap_entries(self, g: int) -> Dict[Tuple[Label, Label], FrozenSet[Exponent]]:
        return {key: value for key, value in self.entries.items() if self.gap(*key) == g}

    def successors(self, j: Label) -> List[Label]:
        """Labels i with E_ij nonempty, in label order."""
        return [i for i in self.labels if (i, j) in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentTable):
            return NotImplemented
        return (self.n == other.n and self.degrees == other.degrees
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"ExponentTable(n={self.n}, labels={len(self.labels)}, nonempty={len(self.entries)})"


def close_under_chains(n: int, labels: Iterable[Label], degrees: Mapping[Label, int],
                       gap_one: Mapping[Tuple[Label, Label], Iterable[Exponent]]) -> ExponentTable:
    """
    Extend gap-1 exponent sets to all gaps: E_ij for a gap g > 1 is the set of sums
    m_1 + ... + m_g over chains whose degrees rise by exactly one at each step.
    """
    labels = tuple(labels)
    entries: Dict[Tuple[Label, Label], FrozenSet[Exponent]] = {
        key: frozenset(value) for key, value in gap_one.items() if value}
    by_degree: Dict[int, List[Label]] = {}
    for label in labels:
        by_degree.setdefault(degrees[label], []).append(label)
    if not by_degree:
        return ExponentTable(n, labels, degrees, entries)
    span = max(by_degree) - min(by_degree)
    for g in range(2, span + 1):
        for j in labels:
            for i in by_degree.get(degrees[j] + g, []):
                sums = set()
                for l in by_degree.get(degrees[i] - 1, []):
                    first = entries.get((l, j))
                    last = entries.get((i, l))
                    if first and last:
                        sums.update(add_exponents(a, b) for a in first for b in last)
                if sums:
                    entries[(i, j)] = frozenset(sums)
    return ExponentTable(n, labels, degrees, entries)


def exponent_table(F: FreeComplex) -> ExponentTable:
    """
    Exponent sets of F: gap-1 entries are the supports of the differential entries,
    higher gaps are the chain-sum closure.
    """
    gap_one = {key: poly.support() for key, poly in F.entries.items()}
    return close_under_chains(F.n, F.labels, F.degrees, gap_one)


@dataclass(frozen=True)
class DiscreteInfo:
    """
    The discrete information of a complex: index set, degrees and exponent sets.
    """
    labels: Tuple[Label, ...]
    degrees: Dict[Label, int] = field(hash=False)
    table: ExponentTable = field(hash=False)

    @property
    def n(self) -> int:
        return self.table.n

    @classmethod
    def from_table(cls, table: ExponentTable) -> "DiscreteInfo":
        return cls(table.labels, dict(table.degrees), table)


def info(F: FreeComplex) -> DiscreteInfo:
    """Discrete information of F."""
    return DiscreteInfo.from_table(exponent_table(F))
