from fractions import Fraction
from typing import Dict, List, Mapping, Optional

import sympy

from utils.linalg import to_sympy

from .graph import BipartiteTorusGraph
from .quiver_rep import QuiverRep


class ZeroWeightError(ValueError):
    """An edge weight vanishes, so the rank-one local system degenerates."""


def _rank(matrix: sympy.Matrix) -> int:
    if 0 in matrix.shape:
        return 0
    return matrix.rank()


def _row(matrix: sympy.Matrix, r: int) -> sympy.Matrix:
    return sympy.Matrix(1, matrix.cols, [matrix[r, c] for c in range(matrix.cols)])


def _kernel_columns(row: sympy.Matrix) -> sympy.Matrix:
    """Basis of the kernel of a row vector, as the columns of a matrix."""
    k = row.shape[1]
    basis = row.nullspace()
    if not basis:
        return sympy.zeros(k, 0)
    return sympy.Matrix.hstack(*basis)


def reflect_local_system(G: BipartiteTorusGraph, weights: Optional[Mapping[int, Fraction]] = None) -> QuiverRep:
    """
    Apply the reflection functor at every white vertex to the rank-one local system.

    Black vertices and edges carry Q with identity maps. A white vertex with k edges gets
    the kernel of the weighted sum Q^k -> Q, and its map to edge r is the r-th coordinate.

    Parameters:
    - G: BipartiteTorusGraph.
    - weights: edge id -> weight; defaults to the edge coefficients.

    Raises:
        ZeroWeightError: if a weight is zero.
    """
    weights = {e: Fraction(edge.weight) for e, edge in enumerate(G.edges)} if weights is None \
        else {e: Fraction(w) for e, w in weights.items()}
    for e in range(len(G.edges)):
        if weights.get(e, Fraction(0)) == 0:
            raise ZeroWeightError(f"reflect_local_system: edge {e} has weight zero")
    vertex_dims: Dict = {}
    edge_dims = {e: 1 for e in range(len(G.edges))}
    maps = {}
    for label in G.black:
        vertex_dims[label] = 1
        for e in G.incident(label):
            maps[(label, e)] = sympy.eye(1)
    for label in G.white:
        incident = G.incident(label)
        row = to_sympy([[weights[e] for e in incident]], shape=(1, len(incident)))
        kernel = _kernel_columns(row) if incident else sympy.zeros(0, 0)
        vertex_dims[label] = kernel.shape[1]
        for r, e in enumerate(incident):
            maps[(label, e)] = _row(kernel, r)
    return QuiverRep(vertex_dims, edge_dims, maps)


def reflected_violations(R: QuiverRep, G: BipartiteTorusGraph) -> List[str]:
    """
    Failures of the two reflected local system conditions.

    (1) every black vertex map is invertible and all edge spaces have the common rank m;
    (2) at each white vertex the stacked map into the incident edge spaces is injective
        with image of codimension m meeting no single edge summand.
    """
    problems = []
    ranks = set(R.edge_dims.values())
    if len(ranks) > 1:
        problems.append(f"condition (1): edge spaces have different dimensions {sorted(ranks)}")
        return problems
    m = ranks.pop() if ranks else 0
    for label in G.black:
        for e in G.incident(label):
            A = R.map(label, e)
            if A.shape[0] != A.shape[1] or _rank(A) != A.shape[0]:
                problems.append(f"condition (1): map from black vertex {label!r} to edge {e} is not invertible")
    for label in G.white:
        incident = G.incident(label)
        dim = R.vertex_dims[label]
        if not incident:
            problems.append(f"condition (2): white vertex {label!r} is isolated")
            continue
        if dim != len(incident) * m - m:
            problems.append(f"condition (2): white vertex {label!r} has dimension {dim}, "
                            f"expected codimension {m} in {len(incident) * m}")
            continue
        total = sum(R.edge_dims[e] for e in incident)
        if dim == 0:
            stacked = sympy.zeros(total, 0)
        else:
            stacked = sympy.Matrix.vstack(*[R.map(label, e) for e in incident])
        if _rank(stacked) != dim:
            problems.append(f"condition (2): map at white vertex {label!r} is not injective")
            continue
        offset = 0
        for e in incident:
            width = R.edge_dims[e]
            summand = sympy.zeros(total, width)
            for a in range(width):
                summand[offset + a, a] = 1
            offset += width
            joined = sympy.Matrix.hstack(stacked, summand) if dim else summand
            if _rank(joined) != dim + width:
                problems.append(f"condition (2): white vertex {label!r} meets the summand of edge {e}")
    return problems


def verify_reflected(R: QuiverRep, G: BipartiteTorusGraph) -> bool:
    return not reflected_violations(R, G)
