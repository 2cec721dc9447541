from fractions import Fraction
from typing import Dict, Hashable, Iterator, Mapping, Sequence

import numpy as np

from .points import RationalPoint, as_point, reduce_point, translate


class Placement:
    """
    A choice of point x_i in R^n for every basis label.

    Parameters:
    - points: mapping label -> coordinates (ints, Fractions or "p/q" strings).
    - n: expected dimension; inferred from the first point when omitted.
    """

    def __init__(self, points: Mapping[Hashable, Sequence], n: int = None):
        self.points: Dict[Hashable, RationalPoint] = {label: as_point(p) for label, p in points.items()}
        if n is None:
            if not self.points:
                raise ValueError("Placement: cannot infer the dimension of an empty placement")
            n = len(next(iter(self.points.values())))
        self.n = n
        for label, point in self.points.items():
            if len(point) != n:
                raise ValueError(f"Placement: point for {label} has dimension {len(point)}, expected {n}")

    def __getitem__(self, label) -> RationalPoint:
        try:
            return self.points[label]
        except KeyError:
            raise ValueError(f"Placement: no point for label {label!r}")

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Placement):
            return NotImplemented
        return self.n == other.n and self.points == other.points

    def __repr__(self) -> str:
        return f"Placement(n={self.n}, labels={list(self.points)})"

    def check_covers(self, labels, n: int):
        if n != self.n:
            raise ValueError(f"Placement: dimension {self.n} does not match the complex ({n})")
        missing = [label for label in labels if label not in self.points]
        if missing:
            raise ValueError(f"Placement: no point for labels {missing}")

    def distinct_mod_lattice(self) -> bool:
        images = [reduce_point(p) for p in self.points.values()]
        return len(set(images)) == len(images)


def half_cube_placement(labels: Sequence[str]) -> Placement:
    """
    Placement for coordinate-wise Koszul resolutions: x_i has 1/2 in every coordinate
    whose label bit is 1 and 0 elsewhere.
    """
    return Placement({label: [Fraction(1, 2) if bit == "1" else Fraction(0) for bit in label]
                      for label in labels})


def perturb_generic(P: Placement, denominator: int, seed: int, max_attempts: int = 100) -> Placement:
    """
    Add independent uniform rationals k/D (0 <= k < D) to every coordinate.

    Deterministic under `seed`; redraws until the points are distinct modulo Z^n.

    Parameters:
    - P: Placement to perturb.
    - denominator: D >= 2.
    - seed: seed for numpy's random generator.

    Returns:
    - Placement with the same labels.
    """
    if denominator < 2:
        raise ValueError("perturb_generic: denominator must be at least 2")
    rng = np.random.default_rng(seed)
    labels = list(P.points)
    for _ in range(max_attempts):
        draws = rng.integers(0, denominator, size=(len(labels), P.n))
        moved = {
            label: translate(P.points[label], [Fraction(int(k), denominator) for k in row])
            for label, row in zip(labels, draws)
        }
        candidate = Placement(moved, P.n)
        if candidate.distinct_mod_lattice():
            return candidate
    raise ValueError(f"perturb_generic: no collision-free draw after {max_attempts} attempts")
