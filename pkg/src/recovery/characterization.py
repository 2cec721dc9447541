from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Set, Tuple

from algebra import FreeComplex, LaurentPoly, is_cochain_complex
from exponents import add_exponents
from torus import Placement, TorusSimplex, build_X, translate

from .colored import ColoredComplex
from .recover import edge_records

Edge = Tuple[Hashable, Hashable, Tuple[int, ...]]


@dataclass
class CharacterizationResult:
    """
    Outcome of check_characterization.

    Parameters:
    - realizable: both conditions hold and the witness reproduces the input.
    - witness: unit-coefficient complex with the input as its simplicial set, when realizable.
    - violations: human-readable description of every failed condition.
    - witness_d2: whether the witness squares to zero; None without a witness.
    """
    realizable: bool
    witness: Optional[FreeComplex] = None
    violations: List[str] = field(default_factory=list)
    witness_d2: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.realizable


def path_closure(edges: Set[Edge], degrees: Dict[Hashable, int]) -> Set[Edge]:
    """
    Fixed point of composing degree-one edges: (j, l, m1) and (l, i, m2) give (j, i, m1 + m2).
    """
    steps = {e for e in edges if degrees[e[1]] - degrees[e[0]] == 1}
    by_start: Dict[Hashable, List[Edge]] = {}
    for e in steps:
        by_start.setdefault(e[0], []).append(e)
    closure = set(steps)
    frontier = set(steps)
    while frontier:
        grown = set()
        for j, l, m1 in frontier:
            for _, i, m2 in by_start.get(l, []):
                candidate = (j, i, add_exponents(m1, m2))
                if candidate not in closure:
                    grown.add(candidate)
        closure |= grown
        frontier = grown
    return closure


def _paths(edges: Set[Edge], length: int) -> List[Tuple[Hashable, ...]]:
    by_start: Dict[Hashable, List[Edge]] = {}
    for e in sorted(edges, key=repr):
        by_start.setdefault(e[0], []).append(e)
    paths = [((j,), ()) for j in sorted({e[0] for e in edges} | {e[1] for e in edges}, key=repr)]
    for _ in range(length):
        paths = [(indices + (i,), steps + (m,))
                 for indices, steps in paths
                 for _, i, m in by_start.get(indices[-1], [])]
    return paths


def _path_simplex(indices, steps, point_of, n) -> TorusSimplex:
    offset = (0,) * n
    vertices = [point_of[indices[0]]]
    for i, m in zip(indices[1:], steps):
        offset = add_exponents(offset, m)
        vertices.append(translate(point_of[i], offset))
    return TorusSimplex(vertices)


def unit_complex(n: int, degrees: Dict[Hashable, int], edges: Set[Edge]) -> FreeComplex:
    """Complex whose gap-one entries are sums of z^m with coefficient 1."""
    top = max(degrees.values())
    shifted = {label: d - top for label, d in degrees.items()}
    entries: Dict[Tuple[Hashable, Hashable], Dict] = {}
    for j, i, m in edges:
        if degrees[i] - degrees[j] == 1:
            entries.setdefault((i, j), {})[m] = 1
    return FreeComplex(n, shifted, {key: LaurentPoly(n, terms) for key, terms in entries.items()})


def check_characterization(C: ColoredComplex) -> CharacterizationResult:
    """
    Decide whether a colored simplicial set is X(F) for some complex F.

    Condition (1): an edge is present iff it is a composite of degree-one edges.
    Condition (2): a k-simplex (k > 1) is present iff it is spanned by a path of k edges.
    On success the unit-coefficient witness is built and its simplicial set compared
    with the input.

    Returns:
    - CharacterizationResult
    """
    n = C.X.n
    degrees = {C.name(p): C.degree(p) for p in C.points()}
    point_of = {C.name(p): p for p in C.points()}
    violations: List[str] = []
    if not degrees:
        return CharacterizationResult(False, None, ["the complex has no vertices"], None)

    edges = set(edge_records(C))
    for j, i, m in sorted(edges, key=repr):
        if degrees[i] <= degrees[j]:
            violations.append(f"condition (1): edge ({j} -> {i}, m={m}) does not increase the degree")

    closure = path_closure(edges, degrees)
    for j, i, m in sorted(closure - edges, key=repr):
        violations.append(f"condition (1): path {j} -> {i} with m={m} has no edge")
    for j, i, m in sorted(edges - closure, key=repr):
        if degrees[i] > degrees[j]:
            violations.append(f"condition (1): edge ({j} -> {i}, m={m}) is not a path of degree-one edges")

    if not violations:
        span = max(degrees.values()) - min(degrees.values())
        top = max(C.X.dimension, span)
        for k in range(2, top + 1):
            expected = {_path_simplex(indices, steps, point_of, n) for indices, steps in _paths(edges, k)}
            present = set(C.X.simplices_of(k))
            for s in sorted(expected - present):
                violations.append(f"condition (2): {k}-simplex {s} spanned by a path is missing")
            for s in sorted(present - expected):
                violations.append(f"condition (2): {k}-simplex {s} is not spanned by a path of edges")

    if violations:
        return CharacterizationResult(False, None, violations, None)

    witness = unit_complex(n, degrees, edges)
    placement = Placement(point_of, n=n)
    if build_X(witness, placement) != C.X:
        violations.append("witness: the simplicial set of the unit-coefficient complex differs from the input")
        return CharacterizationResult(False, witness, violations, is_cochain_complex(witness))
    return CharacterizationResult(True, witness, [], is_cochain_complex(witness))
