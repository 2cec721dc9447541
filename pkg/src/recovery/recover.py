import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from exponents import DiscreteInfo, ExponentTable
from torus import (RationalPoint, SimplicialSet, TorusSimplex, affine_rank, as_point,
                   lattice_range, reduce_point, translate)
from torus.points import difference, integral_difference
from utils.config import get_thread_count

from .colored import ColoredComplex, VertexCollisionError
from .containment import nearby_translates, point_in_union, simplex_in_union

'''
The discrete information of a complex is read back from its simplicial set: an edge
[x_j, x_i + m] mod Z^n contributes m to E_ij. Without the simplicial structure, the
edges are found as the degree-increasing segments contained in T.
'''


class FullDimensionalError(ValueError):
    """T contains a simplex with nonempty interior in the torus."""


def _lift_table(C: ColoredComplex, lifts: Optional[Mapping[Hashable, Sequence]]) -> Dict[RationalPoint, RationalPoint]:
    """Vertex image -> chosen lift in R^n."""
    if lifts is None:
        return {p: p for p in C.points()}
    by_name = {C.name(p): p for p in C.points()}
    result = {}
    for name, lift in lifts.items():
        if name not in by_name:
            raise ValueError(f"recover_E: lift given for unknown vertex {name!r}")
        lift = as_point(lift)
        if reduce_point(lift) != by_name[name]:
            raise ValueError(f"recover_E: lift {lift} of {name!r} does not reduce to its vertex")
        result[by_name[name]] = lift
    missing = [C.name(p) for p in C.points() if p not in result]
    if missing:
        raise ValueError(f"recover_E: no lift for vertices {missing}")
    return result


def edge_records(C: ColoredComplex, lifts: Optional[Mapping[Hashable, Sequence]] = None) -> List[Tuple[Hashable, Hashable, Tuple[int, ...]]]:
    """
    Every edge of C.X as (j, i, m) with the edge equal to [x_j, x_i + m] mod Z^n.
    """
    lift_of = _lift_table(C, lifts)
    records = []
    for edge in C.X.simplices_of(1):
        a, b = edge.vertices
        j_point, i_point = reduce_point(a), reduce_point(b)
        if j_point not in C.degrees or i_point not in C.degrees:
            raise ValueError(f"recover_E: edge {edge} has an endpoint that is not a vertex")
        shift = integral_difference(lift_of[j_point], a)
        m = integral_difference(translate(b, shift), lift_of[i_point])
        records.append((C.name(j_point), C.name(i_point), m))
    return records


def recover_E(C: ColoredComplex, lifts: Optional[Mapping[Hashable, Sequence]] = None) -> DiscreteInfo:
    """
    Discrete information read off the edges of a colored simplicial set.

    Parameters:
    - C: ColoredComplex; its vertex names become the index labels.
    - lifts: optional name -> point of R^n lifting each vertex; defaults to the points
      in [0, 1)^n. Other choices give equivalent results.

    Returns:
    - DiscreteInfo with E_ij = {m : [x_j, x_i + m] mod Z^n in X_1}.
    """
    entries: Dict[Tuple[Hashable, Hashable], set] = {}
    degrees = {C.name(p): C.degree(p) for p in C.points()}
    for j, i, m in edge_records(C, lifts):
        if degrees[i] <= degrees[j]:
            raise ValueError(
                f"recover_E: edge from {j!r} to {i!r} does not increase the degree")
        entries.setdefault((i, j), set()).add(m)
    n = C.X.n
    table = ExponentTable(n, [C.name(p) for p in C.points()], degrees, entries)
    return DiscreteInfo.from_table(table)


def _maximal_pieces(T: Union[SimplicialSet, Iterable[TorusSimplex]]) -> List[TorusSimplex]:
    if isinstance(T, SimplicialSet):
        return T.maximal()
    return sorted(set(T))


def _extent(simplices: Sequence[TorusSimplex]) -> int:
    extent = 0
    for s in simplices:
        lower, upper = s.box()
        extent = max(extent, max((math.ceil(hi - lo) for lo, hi in zip(lower, upper)), default=0))
    return extent


def admitted_edges(T: Union[SimplicialSet, Iterable[TorusSimplex]], degrees: Mapping[RationalPoint, int],
                   threads: Optional[int] = None) -> List[TorusSimplex]:
    """
    Degree-increasing segments between the colored points whose image lies in T.

    Parameters:
    - T: the simplices of T (a SimplicialSet or an iterable of TorusSimplex).
    - degrees: reduced vertex point -> degree.
    - threads: worker count, defaults to COAMOEBA_THREADS.
    """
    pieces = _maximal_pieces(T)
    if not pieces:
        return []
    n = pieces[0].n
    for s in pieces:
        if affine_rank(s.vertices) >= n:
            raise FullDimensionalError(f"recover_from_T: simplex {s} has nonempty interior in T^{n}")
    reach = _extent(pieces)
    lifted = [s.vertices for s in pieces]
    candidates = []
    for a, deg_a in sorted(degrees.items()):
        for b, deg_b in sorted(degrees.items()):
            if deg_b <= deg_a:
                continue
            offset = difference(a, b)
            for m in lattice_range([x - reach for x in offset], [x + reach for x in offset]):
                candidates.append((a, translate(b, m)))

    def admit(candidate) -> bool:
        a, end = candidate
        local = nearby_translates([a, end], lifted)
        if not (point_in_union(a, local) and point_in_union(end, local)):
            return False
        return simplex_in_union([a, end], local)

    threads = threads or get_thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(admit, candidates))
    else:
        verdicts = [admit(c) for c in candidates]
    return [TorusSimplex(c) for c, ok in zip(candidates, verdicts) if ok]


def recover_from_T(T: Union[SimplicialSet, Iterable[TorusSimplex]], vertices: Iterable[Sequence],
                   degrees: Mapping, names: Optional[Mapping] = None,
                   threads: Optional[int] = None) -> DiscreteInfo:
    """
    Discrete information recovered from the point set T alone.

    Parameters:
    - T: simplices whose union is T; every one must have positive codimension.
    - vertices: the points x_i in the torus.
    - degrees: point -> degree (keys are reduced mod Z^n).
    - names: optional point -> label.

    Returns:
    - DiscreteInfo, up to equivalence the one of any complex with this T.
    """
    points = [reduce_point(as_point(v)) for v in vertices]
    if len(set(points)) != len(points):
        raise VertexCollisionError("recover_from_T: two vertices have the same image in the torus")
    colored = {reduce_point(as_point(p)): d for p, d in degrees.items()}
    if len(colored) != len(degrees):
        raise VertexCollisionError("recover_from_T: two colored points have the same image in the torus")
    if set(colored) != set(points):
        raise ValueError("recover_from_T: degrees must be given for exactly the vertices")
    if names is not None:
        names = {reduce_point(as_point(p)): name for p, name in names.items()}
    X = SimplicialSet(len(points[0]) if points else 0)
    for p in points:
        X.add(TorusSimplex([p]))
    for edge in admitted_edges(T, colored, threads):
        X.add(edge)
    return recover_E(ColoredComplex(X, colored, names))
