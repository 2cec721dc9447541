import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from utils.linalg import det, rank, solve

from .linprog import OPTIMAL, maximize
from .points import (RationalPoint, as_point, bounding_box, difference, floor_vector,
                     reduce_point, translate)


def affine_rank(vertices: Sequence[RationalPoint]) -> int:
    """Dimension of the affine hull of the vertices."""
    if len(vertices) <= 1:
        return 0
    base = vertices[0]
    return rank([difference(v, base) for v in vertices[1:]])


def simplex_volume(vertices: Sequence[RationalPoint]) -> Fraction:
    """|det(v_1 - v_0, ..., v_n - v_0)| / n! for n + 1 vertices in R^n."""
    n = len(vertices[0])
    if len(vertices) != n + 1:
        raise ValueError("simplex_volume: need n + 1 vertices in R^n")
    rows = [list(difference(v, vertices[0])) for v in vertices[1:]]
    return abs(det(rows)) / math.factorial(n)


def point_in_hull(point: RationalPoint, vertices: Sequence[RationalPoint]) -> bool:
    """Exact test of point in conv(vertices)."""
    lower, upper = bounding_box(vertices)
    if any(x < lo or x > hi for x, lo, hi in zip(point, lower, upper)):
        return False
    if len(vertices) == 1:
        return tuple(point) == tuple(vertices[0])
    # fast path: affinely independent vertices give unique barycentric coordinates
    k = len(vertices) - 1
    if affine_rank(vertices) == k:
        columns = [difference(v, vertices[0]) for v in vertices[1:]]
        weights = solve(columns, difference(point, vertices[0]))
        if weights is None:
            return False
        return all(w >= 0 for w in weights) and sum(weights) <= 1
    n = len(point)
    A = [[Fraction(1)] * len(vertices)]
    b = [Fraction(1)]
    for c in range(n):
        A.append([v[c] for v in vertices])
        b.append(point[c])
    result = maximize([0] * len(vertices), A, b, ["="] * len(A))
    return result.status == OPTIMAL


def relative_interiors_meet(first: Sequence[RationalPoint], second: Sequence[RationalPoint]) -> bool:
    """
    Whether relint conv(first) and relint conv(second) intersect.

    Maximizes t subject to sum(l) = sum(u) = 1, sum l_a v_a = sum u_b w_b and every weight >= t;
    the relative interiors meet iff the optimum is positive.
    """
    (lo_a, hi_a), (lo_b, hi_b) = bounding_box(first), bounding_box(second)
    if any(ha < lb or hb < la for la, ha, lb, hb in zip(lo_a, hi_a, lo_b, hi_b)):
        return False
    p, q = len(first), len(second)
    width = p + q + 1
    t = p + q
    A, b, rel = [], [], []
    A.append([Fraction(1)] * p + [Fraction(0)] * q + [Fraction(0)])
    b.append(Fraction(1))
    rel.append("=")
    A.append([Fraction(0)] * p + [Fraction(1)] * q + [Fraction(0)])
    b.append(Fraction(1))
    rel.append("=")
    for c in range(len(first[0])):
        A.append([v[c] for v in first] + [-w[c] for w in second] + [Fraction(0)])
        b.append(Fraction(0))
        rel.append("=")
    for a in range(p + q):
        row = [Fraction(0)] * width
        row[a] = Fraction(1)
        row[t] = Fraction(-1)
        A.append(row)
        b.append(Fraction(0))
        rel.append(">=")
    bound = [Fraction(0)] * width
    bound[t] = Fraction(1)
    A.append(bound)
    b.append(Fraction(1))
    rel.append("<=")
    objective = [Fraction(0)] * width
    objective[t] = Fraction(1)
    result = maximize(objective, A, b, rel)
    return result.status == OPTIMAL and result.value > 0


class TorusSimplex:
    """
    Ordered simplex [v_0, ..., v_k] in R^n considered modulo Z^n.

    The stored vertices are the canonical lift, the common integer translate with
    v_0 in [0, 1)^n; two simplices are equal iff their canonical lifts agree.

    Parameters:
    - vertices: any lift of the simplex.
    """

    __slots__ = ("vertices", "_hash")

    def __init__(self, vertices: Iterable[Sequence]):
        vertices = [as_point(v) for v in vertices]
        if not vertices:
            raise ValueError("TorusSimplex: need at least one vertex")
        n = len(vertices[0])
        if any(len(v) != n for v in vertices):
            raise ValueError("TorusSimplex: vertices have different dimensions")
        shift = tuple(-m for m in floor_vector(vertices[0]))
        self.vertices: Tuple[RationalPoint, ...] = tuple(translate(v, shift) for v in vertices)
        self._hash = hash(self.vertices)

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusSimplex):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "TorusSimplex") -> bool:
        return self.vertices < other.vertices

    def __repr__(self) -> str:
        text = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"[{text}] mod Z^{self.n}"

    def face(self, j: int) -> "TorusSimplex":
        """Delete vertex j; the result is re-canonicalized."""
        if self.dimension < 1:
            raise ValueError("TorusSimplex.face: a vertex has no faces")
        if not 0 <= j <= self.dimension:
            raise IndexError(f"TorusSimplex.face: index {j} out of range 0..{self.dimension}")
        return TorusSimplex(self.vertices[:j] + self.vertices[j + 1:])

    def has_repeated_vertices(self) -> bool:
        return len(set(self.vertices)) < len(self.vertices)

    def is_degenerate(self) -> bool:
        """Affinely dependent vertices (repeated vertices included)."""
        return affine_rank(self.vertices) < self.dimension

    def vertex_images(self) -> Tuple[RationalPoint, ...]:
        return tuple(reduce_point(v) for v in self.vertices)

    def unordered_key(self) -> Tuple[RationalPoint, ...]:
        """Order-forgetting canonical form: the smallest sorted lift anchored at any vertex."""
        best = None
        for anchor in self.vertices:
            shift = tuple(-m for m in floor_vector(anchor))
            candidate = tuple(sorted(translate(v, shift) for v in self.vertices))
            if best is None or candidate < best:
                best = candidate
        return best

    def box(self):
        return bounding_box(self.vertices)

    def volume(self) -> Fraction:
        return simplex_volume(self.vertices)


def face(s: TorusSimplex, j: int) -> TorusSimplex:
    return s.face(j)
