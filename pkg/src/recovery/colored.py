from typing import Dict, Hashable, List, Mapping, Optional

from algebra import FreeComplex
from torus import Placement, RationalPoint, SimplicialSet, TorusSimplex, build_X, reduce_point


class VertexCollisionError(ValueError):
    """Two basis points have the same image in the torus."""


class ColoredComplex:
    """
    A simplicial set over the torus together with a degree for every vertex.

    Vertices are identified with their images in [0, 1)^n.

    Parameters:
    - X: SimplicialSet.
    - degrees: vertex image -> degree, one entry per vertex of X.
    - names: optional vertex image -> label used for reporting and for recovered indices.
    """

    def __init__(self, X: SimplicialSet, degrees: Mapping[RationalPoint, int],
                 names: Optional[Mapping[RationalPoint, Hashable]] = None):
        self.X = X
        self.degrees: Dict[RationalPoint, int] = {reduce_point(p): int(d) for p, d in degrees.items()}
        if len(self.degrees) != len(degrees):
            raise VertexCollisionError("ColoredComplex: two vertices share an image in the torus")
        vertex_points = [s.vertices[0] for s in X.vertices()]
        missing = [p for p in vertex_points if p not in self.degrees]
        if missing:
            raise ValueError(f"ColoredComplex: no degree for vertices {missing}")
        extra = [p for p in self.degrees if TorusSimplex([p]) not in X]
        if extra:
            raise ValueError(f"ColoredComplex: colored points {extra} are not vertices of X")
        if names is None:
            names = {p: f"v{k}" for k, p in enumerate(sorted(self.degrees))}
        self.names: Dict[RationalPoint, Hashable] = {reduce_point(p): name for p, name in names.items()}
        if set(self.names) != set(self.degrees):
            raise ValueError("ColoredComplex: names must cover exactly the colored vertices")
        if len(set(self.names.values())) != len(self.names):
            raise ValueError("ColoredComplex: vertex names must be distinct")

    @classmethod
    def from_complex(cls, F: FreeComplex, P: Placement) -> "ColoredComplex":
        """X(F) colored by the degrees of F."""
        P.check_covers(F.labels, F.n)
        images = {}
        for label in F.labels:
            image = reduce_point(P[label])
            if image in images:
                raise VertexCollisionError(
                    f"ColoredComplex: labels {images[image]!r} and {label!r} have the same image {image}")
            images[image] = label
        degrees = {image: F.degrees[label] for image, label in images.items()}
        return cls(build_X(F, P), degrees, images)

    def points(self) -> List[RationalPoint]:
        """Vertex images in the order of the names mapping."""
        return list(self.names)

    def name(self, point: RationalPoint) -> Hashable:
        return self.names[reduce_point(point)]

    def degree(self, point: RationalPoint) -> int:
        return self.degrees[reduce_point(point)]

    def __repr__(self) -> str:
        return f"ColoredComplex({self.X!r}, vertices={len(self.degrees)})"
