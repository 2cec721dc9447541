import math
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple

RationalPoint = Tuple[Fraction, ...]
Exponent = Tuple[int, ...]


def as_point(coordinates: Iterable) -> RationalPoint:
    """Exact point from ints, Fractions or "p/q" strings."""
    point = []
    for x in coordinates:
        if isinstance(x, float):
            raise TypeError("as_point: floating point coordinates are not supported")
        point.append(Fraction(x))
    return tuple(point)


def parse_point(text: str) -> RationalPoint:
    """Parse "1/3,1/3" (commas or whitespace separated)."""
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise ValueError(f"parse_point: no coordinates in {text!r}")
    try:
        return as_point(parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"parse_point: cannot read {text!r} as rational coordinates")


def point_strings(point: Sequence[Fraction]) -> List[str]:
    """Serialize as exact "p/q" strings."""
    return [f"{x.numerator}/{x.denominator}" for x in point]


def translate(point: Sequence[Fraction], offset: Sequence) -> RationalPoint:
    return tuple(x + y for x, y in zip(point, offset))


def difference(a: Sequence[Fraction], b: Sequence[Fraction]) -> RationalPoint:
    return tuple(x - y for x, y in zip(a, b))


def floor_vector(point: Sequence[Fraction]) -> Exponent:
    return tuple(math.floor(x) for x in point)


def reduce_point(point: Sequence[Fraction]) -> RationalPoint:
    """Representative in [0, 1)^n of the image in the torus."""
    return tuple(x - math.floor(x) for x in point)


def integral_difference(a: Sequence[Fraction], b: Sequence[Fraction]):
    """a - b as an integer vector, or None when the points differ mod Z^n."""
    delta = difference(a, b)
    if all(x.denominator == 1 for x in delta):
        return tuple(int(x) for x in delta)
    return None


def bounding_box(points: Iterable[Sequence[Fraction]]) -> Tuple[RationalPoint, RationalPoint]:
    points = list(points)
    n = len(points[0])
    lower = tuple(min(p[c] for p in points) for c in range(n))
    upper = tuple(max(p[c] for p in points) for c in range(n))
    return lower, upper


def lattice_range(lower: Sequence[Fraction], upper: Sequence[Fraction]) -> Iterator[Exponent]:
    """All integer vectors m with lower <= m <= upper coordinatewise."""
    ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in zip(lower, upper)]
    return product(*ranges)


def translates_between(box_a, box_b) -> Iterator[Exponent]:
    """
    Candidate m for which A and B + m can meet: the integer box of bbox(A) - bbox(B).
    """
    (lo_a, hi_a), (lo_b, hi_b) = box_a, box_b
    return lattice_range(difference(lo_a, hi_b), difference(hi_a, lo_b))
