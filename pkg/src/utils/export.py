import json
from typing import Dict, Hashable, List, Mapping, Optional, Union

import numpy as np

from dimer import BipartiteTorusGraph, to_dot
from exponents import Chain
from torus import (RationalPoint, SimplicialSet, SupportSet, TorusSimplex, as_point,
                   point_strings, reduce_point, translates_between)
from torus.points import integral_difference

'''
Geometry export. JSON keeps every coordinate as an exact "p/q" string and is the only
format that can be read back; OBJ (floats, wrap-around copies) and DOT are for viewing.
'''

FORMATS = ("json", "obj", "dot")


class ExportDimensionError(ValueError):
    """The object has simplices of too high a dimension for the format."""


def _chain_to_json(chain: Chain) -> dict:
    return {"indices": [str(i) for i in chain.indices], "steps": [list(m) for m in chain.steps]}


def simplicial_set_to_json(X: SimplicialSet) -> dict:
    simplices = []
    for s in X.all_simplices():
        simplices.append({
            "dimension": s.dimension,
            "vertices": [point_strings(v) for v in s.vertices],
            "chains": [_chain_to_json(c) for c in X.provenance(s)],
        })
    return {"kind": "simplicial_set", "n": X.n, "simplices": simplices}


def simplicial_set_from_json(data: Mapping) -> SimplicialSet:
    if data.get("kind") != "simplicial_set":
        raise ValueError("simplicial_set_from_json: not a simplicial set export")
    X = SimplicialSet(int(data["n"]))
    for entry in data["simplices"]:
        simplex = TorusSimplex([as_point(v) for v in entry["vertices"]])
        X.add(simplex)
        for chain in entry.get("chains", []):
            X.add(simplex, Chain(tuple(chain["indices"]), tuple(tuple(m) for m in chain["steps"])))
    return X


def supports_to_json(supports: Mapping[Hashable, SupportSet]) -> dict:
    return {"kind": "support_sets", "supports": [
        {"label": str(label), "apex": point_strings(S.apex),
         "simplices": [[point_strings(v) for v in s] for s in sorted(S.simplices)]}
        for label, S in supports.items()]}


def supports_from_json(data: Mapping) -> Dict[str, SupportSet]:
    if data.get("kind") != "support_sets":
        raise ValueError("supports_from_json: not a support set export")
    return {entry["label"]: SupportSet(entry["label"], as_point(entry["apex"]),
                                       [[as_point(v) for v in s] for s in entry["simplices"]])
            for entry in data["supports"]}


def _unit_cube_translates(vertices: List[RationalPoint]):
    """Lattice translates of a lifted simplex whose bounding box meets [0, 1)^n with positive extent."""
    n = len(vertices[0])
    lower = tuple(min(v[c] for v in vertices) for c in range(n))
    upper = tuple(max(v[c] for v in vertices) for c in range(n))
    cube = ((0,) * n, (1,) * n)
    for m in translates_between(cube, (lower, upper)):
        keep = True
        for lo, hi, shift in zip(lower, upper, m):
            lo, hi = lo + shift, hi + shift
            if hi > lo:
                keep = keep and max(lo, 0) < min(hi, 1)
            else:
                keep = keep and 0 <= lo < 1
        if keep:
            yield tuple(tuple(x + y for x, y in zip(v, m)) for v in vertices)


def to_obj(pieces: List[List[RationalPoint]]) -> str:
    """
    Wavefront OBJ of the given lifted simplices (points, segments, triangles), copied into
    the unit cube. Coordinates are written as floats; n < 3 is padded with zeros.
    """
    vertex_index: Dict[RationalPoint, int] = {}
    faces = []
    for vertices in pieces:
        if len(vertices) > 3:
            raise ExportDimensionError("to_obj: only simplices of dimension <= 2 can be written")
        if len(vertices[0]) > 3:
            raise ExportDimensionError("to_obj: only tori of dimension <= 3 can be written")
        for copy in _unit_cube_translates(list(vertices)):
            ids = []
            for v in copy:
                if v not in vertex_index:
                    vertex_index[v] = len(vertex_index) + 1
                ids.append(vertex_index[v])
            faces.append(ids)
    points = list(vertex_index)
    coordinates = np.zeros((len(points), 3))
    if points:
        coordinates[:, :len(points[0])] = np.array([[float(x) for x in v] for v in points], dtype=float)
    lines = ["# view-only export: float coordinates, wrap-around faces duplicated"]
    lines += [f"v {x:.9g} {y:.9g} {z:.9g}" for x, y, z in coordinates]
    keyword = {1: "p", 2: "l", 3: "f"}
    lines += [f"{keyword[len(ids)]} " + " ".join(str(i) for i in ids) for ids in faces]
    return "\n".join(lines) + "\n"


def complex_to_dot(X: SimplicialSet, degrees: Optional[Mapping[RationalPoint, int]] = None,
                   names: Optional[Mapping[RationalPoint, Hashable]] = None) -> str:
    """
    Graphviz text of a complex of dimension <= 1. Degree -1 vertices are filled, degree 0
    vertices unfilled; edges carry their lattice class relative to the reduced endpoints.
    """
    if X.dimension > 1:
        raise ExportDimensionError("complex_to_dot: only complexes of dimension <= 1 can be written")
    degrees = {reduce_point(p): d for p, d in (degrees or {}).items()}
    names = {reduce_point(p): str(v) for p, v in (names or {}).items()}
    node = {}
    lines = ["graph X {"]
    for k, s in enumerate(X.vertices()):
        p = s.vertices[0]
        node[p] = names.get(p, f"v{k}")
        position = ",".join(point_strings(p))
        style = "filled, fillcolor=black, fontcolor=white" if degrees.get(p) == -1 else "solid, fillcolor=white"
        degree = f', degree="{degrees[p]}"' if p in degrees else ""
        lines.append(f'  "{node[p]}" [shape=circle, style={style}{degree}, position="{position}"];')
    for s in X.simplices_of(1):
        a, b = s.vertices
        target = reduce_point(b)
        lattice = ",".join(str(x) for x in integral_difference(b, target))
        lines.append(f'  "{node[a]}" -- "{node[target]}" [lattice="{lattice}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


Exportable = Union[SimplicialSet, Mapping, BipartiteTorusGraph]


def export_geometry(item: Exportable, fmt: str, degrees: Optional[Mapping] = None,
                    names: Optional[Mapping] = None) -> bytes:
    """
    Serialize a simplicial set, a dict of support sets or a bipartite graph.

    Parameters:
    - item: SimplicialSet, {label: SupportSet} or BipartiteTorusGraph.
    - fmt: "json", "obj" or "dot".
    - degrees / names: vertex colouring for the DOT export of a SimplicialSet.

    Returns:
    - UTF-8 encoded text.
    """
    if fmt not in FORMATS:
        raise ValueError(f"export_geometry: unknown format {fmt!r}, expected one of {FORMATS}")
    if isinstance(item, BipartiteTorusGraph):
        if fmt == "dot":
            return to_dot(item).encode("utf-8")
        raise ValueError(f"export_geometry: a bipartite graph can only be written as dot, not {fmt}")
    if fmt == "json":
        data = simplicial_set_to_json(item) if isinstance(item, SimplicialSet) else supports_to_json(item)
        return json.dumps(data, indent=4).encode("utf-8")
    if fmt == "obj":
        if isinstance(item, SimplicialSet):
            pieces = [list(s.vertices) for s in item.maximal()]
        else:
            pieces = [list(s) for S in item.values() for s in S.maximal()]
        return to_obj(pieces).encode("utf-8")
    if not isinstance(item, SimplicialSet):
        raise ValueError("export_geometry: dot export needs a simplicial set or a graph")
    return complex_to_dot(item, degrees, names).encode("utf-8")


def load_geometry(data: Union[bytes, str]) -> Union[SimplicialSet, Dict[str, SupportSet]]:
    """Read a JSON export back."""
    parsed = json.loads(data)
    if parsed.get("kind") == "support_sets":
        return supports_from_json(parsed)
    return simplicial_set_from_json(parsed)
