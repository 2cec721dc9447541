from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

import pandas as pd
import sympy

from torus import RationalPoint, as_point, point_strings, reduce_point
from torus.points import integral_difference
from utils.linalg import to_sympy

from .differential import MirrorDifferential

Basis = List[Tuple[Hashable, RationalPoint]]


@dataclass(frozen=True)
class Stalk:
    """
    Finite model of the stalk of the mirror complex term at a point of the torus.

    Parameters:
    - theta: base point, reduced into [0, 1)^n.
    - lifts: label -> lifts theta + m lying in S_i, lexicographically ordered.
    """
    theta: RationalPoint
    lifts: Dict[Hashable, Tuple[RationalPoint, ...]]

    def dimension(self, label) -> int:
        return len(self.lifts.get(label, ()))

    def lattice_labels(self, label) -> List[Tuple[int, ...]]:
        """The m with theta + m in S_i."""
        return [integral_difference(p, self.theta) for p in self.lifts.get(label, ())]

    def basis(self, labels: Iterable[Hashable]) -> Basis:
        return [(label, p) for label in labels for p in self.lifts.get(label, ())]


def stalk(D: MirrorDifferential, theta: Sequence) -> Stalk:
    base = reduce_point(as_point(theta))
    if len(base) != D.n:
        raise ValueError(f"stalk: point has {len(base)} coordinates, expected {D.n}")
    return Stalk(base, {label: tuple(D.supports[label].lifts(base)) for label in D.labels})


@dataclass
class StalkMap:
    """d^k on stalks at theta: rows and columns are (label, lift) pairs."""
    theta: RationalPoint
    rows: Basis
    columns: Basis
    matrix: sympy.Matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)

    def rank(self) -> int:
        if 0 in self.shape:
            return 0
        return self.matrix.rank()


def stalk_map(D: MirrorDifferential, theta: Sequence, k: int) -> StalkMap:
    """
    Exact matrix of d^k between stalks at theta.

    The entry in row (i, q) and column (j, p) is the sum of c_ijm over m with q + m = p.

    Parameters:
    - D: MirrorDifferential.
    - theta: rational point; any lift gives the same matrix.
    - k: degree of the source term.
    """
    local = stalk(D, theta)
    rows = local.basis(D.basis(k + 1))
    columns = local.basis(D.basis(k))
    values = [[0] * len(columns) for _ in rows]
    for r, (i, q) in enumerate(rows):
        for c, (j, p) in enumerate(columns):
            shift = integral_difference(p, q)
            terms = D.entries.get((i, j))
            if terms and shift in terms:
                values[r][c] = terms[shift]
    return StalkMap(local.theta, rows, columns, to_sympy(values, shape=(len(rows), len(columns))))


def stalk_table(D: MirrorDifferential, points: Iterable[Sequence]) -> pd.DataFrame:
    """
    Stalk dimensions: one row per label, one column per point (named by its "p/q" coordinates).
    """
    data = {}
    for theta in points:
        local = stalk(D, theta)
        data[",".join(point_strings(local.theta))] = [local.dimension(label) for label in D.labels]
    return pd.DataFrame(data, index=pd.Index(list(D.labels), name="label"))
