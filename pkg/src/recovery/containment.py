from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from torus import (RationalPoint, affine_rank, bounding_box, maximize, point_in_hull,
                   translate, translates_between)
from torus.linprog import OPTIMAL
from utils.linalg import solve

Halfspace = Tuple[List[Fraction], Fraction]   # g . y <= h
Lift = Tuple[RationalPoint, ...]


def _difference(a, b):
    return tuple(x - y for x, y in zip(a, b))


def independent_pieces(vertices: Sequence[RationalPoint]) -> List[Lift]:
    """
    Affinely independent vertex subsets whose hulls cover conv(vertices).
    """
    vertices = list(dict.fromkeys(tuple(v) for v in vertices))
    r = affine_rank(vertices)
    if r == len(vertices) - 1:
        return [tuple(vertices)]
    return [subset for subset in combinations(vertices, r + 1) if affine_rank(subset) == r]


def hull_constraints(sigma: Sequence[RationalPoint], tau: Sequence[RationalPoint]) -> Optional[List[Halfspace]]:
    """
    tau (affinely independent) intersected with aff(sigma), written in the coordinates
    y of p(y) = s_0 + sum_b y_b (s_b - s_0). Returns None unless tau contains a
    full-dimensional piece of aff(sigma).
    """
    s0 = sigma[0]
    directions = [_difference(s, s0) for s in sigma[1:]]
    w0 = tau[0]
    columns = [_difference(w, w0) for w in tau[1:]]
    base = solve(columns, _difference(s0, w0))
    if base is None:
        return None
    slopes = []
    for direction in directions:
        slope = solve(columns, direction)
        if slope is None:
            return None
        slopes.append(slope)
    k, d = len(directions), len(columns)
    rows: List[Halfspace] = [([-slopes[b][a] for b in range(k)], base[a]) for a in range(d)]
    rows.append(([sum(slopes[b]) for b in range(k)], Fraction(1) - sum(base)))
    constraints: List[Halfspace] = []
    for g, h in rows:
        # a facet of tau containing aff(sigma) gives a constant row
        if all(x == 0 for x in g):
            if h < 0:
                return None
            continue
        constraints.append((g, h))
    return constraints


def has_interior(region: Iterable[Halfspace], k: int) -> bool:
    """Whether {y >= 0 : g . y <= h} has nonempty interior in R^k."""
    rows = []
    for g, h in region:
        if all(x == 0 for x in g):
            if h < 0:
                return False
            continue
        rows.append((g, h))
    if k == 0:
        return True
    width = k + 1
    A, b, rel = [], [], []
    for g, h in rows:
        A.append(list(g) + [Fraction(1)])
        b.append(h)
        rel.append("<=")
    for index in range(k):
        row = [Fraction(0)] * width
        row[index] = Fraction(1)
        row[k] = Fraction(-1)
        A.append(row)
        b.append(Fraction(0))
        rel.append(">=")
    cap = [Fraction(0)] * k + [Fraction(1)]
    A.append(cap)
    b.append(Fraction(1))
    rel.append("<=")
    result = maximize([Fraction(0)] * k + [Fraction(1)], A, b, rel)
    return result.status == OPTIMAL and result.value > 0


def _covered(region: List[Halfspace], pieces: List[List[Halfspace]], index: int, k: int) -> bool:
    if not has_interior(region, k):
        return True
    while index < len(pieces) and not has_interior(region + pieces[index], k):
        index += 1
    if index == len(pieces):
        return False
    accepted: List[Halfspace] = []
    for g, h in pieces[index]:
        if all(x == 0 for x in g):
            continue
        outside = region + accepted + [([-x for x in g], -h)]
        if not _covered(outside, pieces, index + 1, k):
            return False
        accepted.append((g, h))
    return True


def point_in_union(point: RationalPoint, pieces: Iterable[Sequence[RationalPoint]]) -> bool:
    return any(point_in_hull(point, piece) for piece in pieces)


def simplex_in_union(sigma: Sequence[RationalPoint], pieces: Iterable[Sequence[RationalPoint]]) -> bool:
    """
    Exact test of conv(sigma) within the union of conv(piece) for the given pieces in R^n.

    The simplex is cut along the facets of each piece meeting it in full dimension;
    it is covered iff no cell with nonempty interior is left over.

    Parameters:
    - sigma: affinely independent vertices.
    - pieces: vertex tuples (any affine rank).
    """
    sigma = [tuple(v) for v in sigma]
    pieces = [tuple(tuple(v) for v in piece) for piece in pieces]
    k = len(sigma) - 1
    if affine_rank(sigma) != k:
        raise ValueError("simplex_in_union: sigma must be affinely independent")
    if k == 0:
        return point_in_union(sigma[0], pieces)
    constraints = []
    for piece in pieces:
        for part in independent_pieces(piece):
            halfspaces = hull_constraints(sigma, part)
            if halfspaces is not None:
                constraints.append(halfspaces)
    start = [([Fraction(1)] * k, Fraction(1))]
    return _covered(start, constraints, 0, k)


def nearby_translates(sigma: Sequence[RationalPoint], simplices: Iterable[Sequence[RationalPoint]]) -> List[Lift]:
    """All lattice translates of the given simplices whose boxes meet the box of sigma."""
    box = bounding_box(sigma)
    result = []
    for simplex in simplices:
        for m in translates_between(box, bounding_box(simplex)):
            result.append(tuple(translate(v, m) for v in simplex))
    return result
