from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Tuple

from algebra import FreeComplex, LaurentPoly
from torus import Placement, RationalPoint, TorusSimplex, point_strings, reduce_point, translate


class WrongDegreeProfileError(ValueError):
    """The complex has terms outside degrees 0 and -1."""


@dataclass(frozen=True)
class DimerEdge:
    """
    The edge [x_black, x_white + m] of a two-term complex, carrying the coefficient of z^m.
    """
    black: Hashable
    white: Hashable
    m: Tuple[int, ...]
    weight: Fraction


class BipartiteTorusGraph:
    """
    Graph on the torus with black vertices in degree -1 and white vertices in degree 0.

    Parameters:
    - n: dimension of the torus.
    - black, white: label -> point of R^n (the placement, not reduced).
    - edges: list of DimerEdge; edge ids are positions in this list.
    """

    def __init__(self, n: int, black: Dict[Hashable, RationalPoint], white: Dict[Hashable, RationalPoint],
                 edges: List[DimerEdge]):
        self.n = n
        self.black = dict(black)
        self.white = dict(white)
        self.edges = list(edges)
        if set(self.black) & set(self.white):
            raise ValueError("BipartiteTorusGraph: a label is both black and white")
        for edge in self.edges:
            if edge.black not in self.black or edge.white not in self.white:
                raise ValueError(f"BipartiteTorusGraph: edge {edge} joins unknown vertices")

    @property
    def vertices(self) -> List[Hashable]:
        return list(self.black) + list(self.white)

    def point(self, label) -> RationalPoint:
        return self.black[label] if label in self.black else self.white[label]

    def incident(self, label) -> List[int]:
        """Ids of the edges at a vertex."""
        return [e for e, edge in enumerate(self.edges) if label in (edge.black, edge.white)]

    def valence(self, label) -> int:
        return len(self.incident(label))

    def isolated(self) -> List[Hashable]:
        return [label for label in self.vertices if self.valence(label) == 0]

    def segment(self, e: int) -> TorusSimplex:
        edge = self.edges[e]
        return TorusSimplex([self.black[edge.black], translate(self.white[edge.white], edge.m)])

    def midpoint(self, e: int) -> RationalPoint:
        edge = self.edges[e]
        end = translate(self.white[edge.white], edge.m)
        return tuple((a + b) / 2 for a, b in zip(self.black[edge.black], end))

    def __repr__(self) -> str:
        return f"BipartiteTorusGraph(black={len(self.black)}, white={len(self.white)}, edges={len(self.edges)})"


def extract_graph(F: FreeComplex, P: Placement) -> BipartiteTorusGraph:
    """
    The graph T(F) of a two-term complex: one edge per monomial c z^m of d^{-1}.

    Raises:
        WrongDegreeProfileError: if F has a term outside degrees 0 and -1.
    """
    if not set(F.degrees.values()) <= {0, -1}:
        raise WrongDegreeProfileError(
            f"extract_graph: degrees {F.present_degrees()} are not within (-1, 0)")
    P.check_covers(F.labels, F.n)
    black = {label: P[label] for label in F.basis(-1)}
    white = {label: P[label] for label in F.basis(0)}
    edges = []
    for j in black:
        for i in white:
            for m, c in F.entry(i, j).items():
                edges.append(DimerEdge(j, i, m, c))
    return BipartiteTorusGraph(F.n, black, white, edges)


def kasteleyn(G: BipartiteTorusGraph) -> List[List[LaurentPoly]]:
    """
    Weighted adjacency matrix, rows white and columns black: entry (i, j) is the sum of
    c z^m over the edges from j to i. No Kasteleyn signs are inserted, so the result is
    the degree -1 differential itself.
    """
    matrix = []
    for i in G.white:
        row = []
        for j in G.black:
            terms: Dict[Tuple[int, ...], Fraction] = {}
            for edge in G.edges:
                if edge.black == j and edge.white == i:
                    terms[edge.m] = terms.get(edge.m, Fraction(0)) + edge.weight
            row.append(LaurentPoly(G.n, terms))
        matrix.append(row)
    return matrix


def _quote(label) -> str:
    return '"' + str(label).replace('"', '\\"') + '"'


def to_dot(G: BipartiteTorusGraph, name: str = "T") -> str:
    """
    Graphviz text: black vertices filled, white vertices unfilled; edges carry the
    weight as coefficient="p/q" and the lattice class as lattice="a,b".
    """
    lines = [f"graph {name} {{"]
    for label in G.black:
        position = ",".join(point_strings(reduce_point(G.black[label])))
        lines.append(f'  {_quote(label)} [shape=circle, style=filled, fillcolor=black, fontcolor=white, degree="-1", position="{position}"];')
    for label in G.white:
        position = ",".join(point_strings(reduce_point(G.white[label])))
        lines.append(f'  {_quote(label)} [shape=circle, style=solid, fillcolor=white, degree="0", position="{position}"];')
    for edge in G.edges:
        weight = f"{edge.weight.numerator}/{edge.weight.denominator}"
        lattice = ",".join(str(x) for x in edge.m)
        lines.append(f'  {_quote(edge.black)} -- {_quote(edge.white)} [coefficient="{weight}", lattice="{lattice}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
