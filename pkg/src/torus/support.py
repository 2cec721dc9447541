from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from algebra import FreeComplex
from exponents import ExponentTable, chains_from, exponent_table, max_chain_length

from .placement import Placement
from .points import RationalPoint, bounding_box, lattice_range, reduce_point, translate, difference
from .simplex import TorusSimplex, point_in_hull, simplex_volume
from .simplicial_set import build_X

Lift = Tuple[RationalPoint, ...]


def normalize(simplices: Iterable[Lift]) -> FrozenSet[FrozenSet[RationalPoint]]:
    """Vertex sets of the simplices that are not contained in another one's vertex set."""
    sets = sorted({frozenset(s) for s in simplices}, key=len, reverse=True)
    kept: List[FrozenSet[RationalPoint]] = []
    for vertex_set in sets:
        if not any(vertex_set <= other for other in kept):
            kept.append(vertex_set)
    return frozenset(kept)


class SupportSet:
    """
    The set S_i as a finite union of simplices in R^n (not reduced mod Z^n).

    Parameters:
    - label: the index i.
    - apex: the point x_i.
    - simplices: ordered vertex tuples; the 0-simplex (x_i,) is always included.
    """

    def __init__(self, label: Hashable, apex: Sequence[Fraction], simplices: Iterable[Sequence]):
        self.label = label
        self.apex: RationalPoint = tuple(apex)
        members = {tuple(tuple(v) for v in s) for s in simplices}
        members.add((self.apex,))
        self.simplices: FrozenSet[Lift] = frozenset(members)
        self._maximal = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SupportSet):
            return NotImplemented
        return self.apex == other.apex and self.simplices == other.simplices

    def __repr__(self) -> str:
        return f"SupportSet({self.label!r}, simplices={len(self.simplices)}, dimension={self.dimension})"

    @property
    def dimension(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def of_dimension(self, k: int) -> List[Lift]:
        return sorted(s for s in self.simplices if len(s) == k + 1)

    def normalized(self) -> FrozenSet[FrozenSet[RationalPoint]]:
        return normalize(self.simplices)

    def maximal(self) -> List[Lift]:
        """Member simplices whose vertex sets are maximal; their union is S_i."""
        if self._maximal is None:
            normal = self.normalized()
            chosen = {}
            for s in sorted(self.simplices):
                key = frozenset(s)
                if key in normal and key not in chosen:
                    chosen[key] = s
            self._maximal = sorted(chosen.values())
        return self._maximal

    def box(self):
        return bounding_box([v for s in self.simplices for v in s])

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        return any(point_in_hull(tuple(point), s) for s in self.maximal())

    def covers(self, simplex: Sequence[RationalPoint]) -> bool:
        """Sufficient test for simplex within S_i: its vertex set lies in one member's."""
        wanted = frozenset(tuple(v) for v in simplex)
        return any(wanted <= frozenset(s) for s in self.maximal())

    def translated(self, offset: Sequence[int]) -> List[Lift]:
        return [tuple(translate(v, offset) for v in s) for s in self.simplices]

    def lifts(self, theta: Sequence[Fraction]) -> List[RationalPoint]:
        """
        Lattice lifts of theta lying in S_i, relative to the lift in [0, 1)^n,
        in lexicographic order.
        """
        base = reduce_point(theta)
        lower, upper = self.box()
        found = []
        for m in lattice_range(difference(lower, base), difference(upper, base)):
            candidate = translate(base, m)
            if self.contains_point(candidate):
                found.append(candidate)
        return sorted(found)

    def link(self) -> List[Lift]:
        """Simplices opposite the apex: the faces s[1:] of the members starting at x_i."""
        return sorted({s[1:] for s in self.simplices if len(s) > 1 and s[0] == self.apex})

    def top_volume(self) -> Fraction:
        """Total volume of the full-dimensional member simplices."""
        n = len(self.apex)
        return sum((simplex_volume(s) for s in self.simplices if len(s) == n + 1), Fraction(0))

    def images(self) -> FrozenSet[TorusSimplex]:
        return frozenset(TorusSimplex(s) for s in self.simplices)


def _direct(table: ExponentTable, P: Placement, label) -> SupportSet:
    simplices = []
    for k in range(max_chain_length(table) + 1):
        for chain in chains_from(table, label, k):
            simplices.append(tuple(translate(P[i], offset)
                                   for i, offset in zip(chain.indices, chain.offsets(table.n))))
    return SupportSet(label, P[label], simplices)


def recursive_supports(F: FreeComplex, P: Placement, restricted: bool = False) -> Dict[Hashable, SupportSet]:
    """
    S_i = {x_i} union the cones [x_i, S_j + m] over j and m in E_ji.

    Parameters:
    - restricted: only use j with deg(j) = deg(i) + 1.
    """
    table = exponent_table(F)
    P.check_covers(table.labels, table.n)
    result: Dict[Hashable, SupportSet] = {}
    for label in sorted(table.labels, key=lambda x: -table.degrees[x]):
        apex = P[label]
        simplices = [(apex,)]
        for j in table.successors(label):
            if restricted and table.gap(j, label) != 1:
                continue
            for m in sorted(table.get(j, label)):
                for s in result[j].simplices:
                    simplices.append((apex,) + tuple(translate(v, m) for v in s))
        result[label] = SupportSet(label, apex, simplices)
    return {label: result[label] for label in table.labels}


def build_S(F: FreeComplex, P: Placement, check: bool = True) -> Dict[Hashable, SupportSet]:
    """
    Support sets S_i by direct enumeration of the chains starting at i.

    Parameters:
    - check: also run the recursive and the restricted recursive build and raise
      RuntimeError if their normalized simplex sets differ from the direct one.

    Returns:
    - dict label -> SupportSet
    """
    table = exponent_table(F)
    P.check_covers(table.labels, table.n)
    direct = {label: _direct(table, P, label) for label in table.labels}
    if check:
        for restricted in (False, True):
            other = recursive_supports(F, P, restricted=restricted)
            for label in table.labels:
                if direct[label].normalized() != other[label].normalized():
                    mode = "restricted recursion" if restricted else "recursion"
                    raise RuntimeError(f"build_S: {mode} disagrees with enumeration for S_{label}")
    return direct


def images_of(supports: Dict[Hashable, SupportSet]) -> FrozenSet[TorusSimplex]:
    union = set()
    for S in supports.values():
        union |= S.images()
    return frozenset(union)


def support_equals_T(F: FreeComplex, P: Placement, supports: Optional[Dict[Hashable, SupportSet]] = None) -> bool:
    """
    Whether the union of the images of all S_i is exactly the simplex set of X(F).

    X(F) comes from chain enumeration; the S_i default to the recursive cone build,
    which never enumerates chains.
    """
    X = build_X(F, P)
    if supports is None:
        supports = recursive_supports(F, P)
    return images_of(supports) == frozenset(X.all_simplices())
