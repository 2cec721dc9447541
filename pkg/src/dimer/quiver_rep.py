from typing import Dict, Hashable, Iterable, Optional, Tuple

import sympy

MapKey = Tuple[Hashable, int]


class QuiverRep:
    """
    Representation of the half-edge quiver of a graph: a space at every vertex and every
    edge, and a map from a vertex space to the space of each incident edge.

    Parameters:
    - vertex_dims: vertex label -> dimension.
    - edge_dims: edge id -> dimension.
    - maps: (vertex, edge id) -> sympy Matrix of shape (edge dim, vertex dim).
    """

    def __init__(self, vertex_dims: Dict[Hashable, int], edge_dims: Dict[int, int],
                 maps: Dict[MapKey, sympy.Matrix]):
        self.vertex_dims = dict(vertex_dims)
        self.edge_dims = dict(edge_dims)
        self.maps = dict(maps)
        for (vertex, edge), matrix in self.maps.items():
            if vertex not in self.vertex_dims:
                raise ValueError(f"QuiverRep: map from unknown vertex {vertex!r}")
            if edge not in self.edge_dims:
                raise ValueError(f"QuiverRep: map to unknown edge {edge}")
            expected = (self.edge_dims[edge], self.vertex_dims[vertex])
            if matrix.shape != expected:
                raise ValueError(
                    f"QuiverRep: map ({vertex!r}, {edge}) has shape {matrix.shape}, expected {expected}")

    def map(self, vertex, edge: int) -> sympy.Matrix:
        try:
            return self.maps[(vertex, edge)]
        except KeyError:
            raise ValueError(f"QuiverRep: no map from {vertex!r} to edge {edge}")

    def with_map(self, vertex, edge: int, matrix: sympy.Matrix) -> "QuiverRep":
        maps = dict(self.maps)
        maps[(vertex, edge)] = matrix
        return QuiverRep(self.vertex_dims, self.edge_dims, maps)

    def with_vertex(self, vertex, dim: int, maps: Dict[int, sympy.Matrix]) -> "QuiverRep":
        """Replace the space at a vertex together with its outgoing maps."""
        dims = dict(self.vertex_dims)
        dims[vertex] = dim
        updated = {key: value for key, value in self.maps.items() if key[0] != vertex}
        updated.update({(vertex, edge): matrix for edge, matrix in maps.items()})
        return QuiverRep(dims, self.edge_dims, updated)

    def __repr__(self) -> str:
        return f"QuiverRep(vertices={self.vertex_dims}, edges={len(self.edge_dims)})"


def dimension_vector(R: QuiverRep, order: Optional[Iterable[Hashable]] = None) -> Tuple[int, ...]:
    """Vertex dimensions, in insertion order unless an order is given."""
    order = list(order) if order is not None else list(R.vertex_dims)
    return tuple(R.vertex_dims[v] for v in order)
