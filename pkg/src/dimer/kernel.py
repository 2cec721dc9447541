from typing import Dict, Hashable

import sympy

from algebra import FreeComplex
from mirror import MirrorDifferential, build_mirror, stalk_map
from torus import Placement, RationalPoint, build_X, is_embedded, translate

from .graph import extract_graph
from .quiver_rep import QuiverRep
from .reflection import reflected_violations

'''
The kernel of the degree -1 map of the mirror complex, computed stalkwise: at every
vertex and at the midpoint of every edge, with generization maps found by following
each lift a quarter of the way along the edge and then to its midpoint.
'''


class NotEmbeddedError(ValueError):
    """T(F) is not an embedded graph."""


class SurjectivityError(ValueError):
    """The differential fails to be onto at a white vertex."""


class _LocalKernel:
    """Kernel of d^-1 on stalks at one point, as columns over the (label, lift) basis."""

    def __init__(self, D: MirrorDifferential, theta: RationalPoint):
        local = stalk_map(D, theta, -1)
        self.columns = local.columns
        self.index = {key: c for c, key in enumerate(local.columns)}
        self.rank = local.rank()
        self.target_dim = len(local.rows)
        width = len(local.columns)
        if not local.rows:
            self.basis = sympy.eye(width) if width else sympy.zeros(0, 0)
        else:
            vectors = local.matrix.nullspace()
            self.basis = sympy.Matrix.hstack(*vectors) if vectors else sympy.zeros(width, 0)

    @property
    def dimension(self) -> int:
        return self.basis.shape[1]


def _generization(source: _LocalKernel, target: _LocalKernel, D: MirrorDifferential,
                  delta: RationalPoint) -> sympy.Matrix:
    """
    Map of stalks from a point to the point 2 * delta further on: (j, p) goes to
    (j, p + 2 delta) when p + delta and p + 2 delta both lie in S_j, and to zero otherwise.
    """
    matrix = sympy.zeros(len(target.columns), len(source.columns))
    for c, (label, p) in enumerate(source.columns):
        quarter = translate(p, delta)
        half = translate(quarter, delta)
        support = D.supports[label]
        if (label, half) in target.index and support.contains_point(quarter):
            matrix[target.index[(label, half)], c] = 1
    return matrix


def _coordinates(image: sympy.Matrix, target: _LocalKernel) -> sympy.Matrix:
    """Express columns lying in the target kernel in its basis."""
    if image.shape[1] == 0 or target.dimension == 0:
        return sympy.zeros(target.dimension, image.shape[1])
    solution, free = target.basis.gauss_jordan_solve(image)
    if free.shape[0]:
        solution = solution.subs({symbol: 0 for symbol in free})
    return solution


def kernel_of_d(F: FreeComplex, P: Placement, verbose: bool = False) -> QuiverRep:
    """
    The kernel of d: C^-1 -> C^0 of the mirror complex of a two-term complex, as a
    representation of the half-edge quiver of T(F).

    Parameters:
    - F: two-term FreeComplex (degrees 0 and -1).
    - P: placement; T(F) must be an embedded graph without isolated vertices.
    - verbose: print the kernel dimension found at every vertex.

    Returns:
    - QuiverRep with one space per vertex and per edge.

    Raises:
        NotEmbeddedError: if T(F) is not embedded.
        SurjectivityError: if d is not onto at a white vertex.
        RuntimeError: if the result fails the reflected local system conditions.
    """
    G = extract_graph(F, P)
    check = is_embedded(build_X(F, P))
    if not check:
        raise NotEmbeddedError(f"kernel_of_d: T(F) is not embedded, {check.describe()}")
    isolated = G.isolated()
    if isolated:
        raise ValueError(f"kernel_of_d: isolated vertices {isolated}")

    D = build_mirror(F, P)
    at_vertex: Dict[Hashable, _LocalKernel] = {}
    for label in G.vertices:
        local = _LocalKernel(D, G.point(label))
        if label in G.white and local.rank != local.target_dim:
            raise SurjectivityError(
                f"kernel_of_d: d is not onto at white vertex {label!r} "
                f"(rank {local.rank}, target dimension {local.target_dim})")
        at_vertex[label] = local
        if verbose:
            print(f"kernel at {label}: dimension {local.dimension}")

    at_edge = {e: _LocalKernel(D, G.midpoint(e)) for e in range(len(G.edges))}
    maps = {}
    for e, edge in enumerate(G.edges):
        middle = G.midpoint(e)
        for label in (edge.black, edge.white):
            start = G.point(label) if label == edge.black else translate(G.point(label), edge.m)
            # quarter of the edge: start + 2 delta is the midpoint
            delta = tuple((b - a) / 2 for a, b in zip(start, middle))
            source = at_vertex[label]
            moved = _generization(source, at_edge[e], D, delta)
            if source.dimension:
                image = moved * source.basis
            else:
                image = sympy.zeros(len(at_edge[e].columns), 0)
            maps[(label, e)] = _coordinates(image, at_edge[e])
    R = QuiverRep({label: at_vertex[label].dimension for label in G.vertices},
                  {e: local.dimension for e, local in at_edge.items()}, maps)
    problems = reflected_violations(R, G)
    if problems:
        raise RuntimeError("kernel_of_d: result is not a reflected local system: " + "; ".join(problems))
    return R
