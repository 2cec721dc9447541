from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .complex import FreeComplex
from .laurent import DimensionMismatchError, LaurentPoly


def subset_label(subset: Sequence[int], r: int) -> str:
    """Indicator string of a subset of {1..r}, e.g. {1} in r=2 -> "10"."""
    return "".join("1" if s in subset else "0" for s in range(1, r + 1))


def koszul(polys: Sequence[LaurentPoly]) -> FreeComplex:
    """
    Koszul complex on f_1..f_r.

    The basis in degree -k is indexed by the k-subsets S of {1..r} in lexicographic order,
    labelled by their indicator strings. The entry from S to S minus {s} is
    (-1)^{#(elements of S less than s)} f_s. For r = 2 this gives d^{-2} = [-g; f] and
    d^{-1} = [f, g].

    Parameters:
    - polys: nonempty list of LaurentPoly sharing the number of variables.

    Returns:
    - FreeComplex with ranks binomial(r, k) in degree -k.
    """
    if not polys:
        raise ValueError("koszul: need at least one polynomial")
    n = polys[0].n
    if any(p.n != n for p in polys):
        raise DimensionMismatchError("koszul: polynomials live in different numbers of variables")
    r = len(polys)

    degrees: Dict[str, int] = {}
    # lowest degree first: for r = 2 the labels 11, 10, 01, 00 are x_1..x_4
    for k in range(r, -1, -1):
        for subset in combinations(range(1, r + 1), k):
            degrees[subset_label(subset, r)] = -k

    entries: Dict[Tuple[str, str], LaurentPoly] = {}
    for k in range(1, r + 1):
        for subset in combinations(range(1, r + 1), k):
            source = subset_label(subset, r)
            for s in subset:
                smaller = sum(1 for t in subset if t < s)
                target = subset_label([t for t in subset if t != s], r)
                poly = polys[s - 1]
                entries[(target, source)] = poly if smaller % 2 == 0 else -poly
    return FreeComplex(n, degrees, entries)


def hypersurface(f: LaurentPoly) -> FreeComplex:
    """The two-term complex R --f--> R, labels "1" (degree -1) and "2" (degree 0)."""
    return FreeComplex(f.n, {"1": -1, "2": 0}, {("2", "1"): f})


def point_koszul(point: Sequence) -> FreeComplex:
    """
    Coordinate-wise Koszul resolution of the point a in the torus: koszul(z_k - a_k).
    """
    n = len(point)
    if n == 0:
        raise ValueError("point_koszul: empty point")
    polys: List[LaurentPoly] = []
    for k, a in enumerate(point):
        a = Fraction(a)
        if a == 0:
            raise ValueError("point_koszul: coordinates must be nonzero")
        unit = [0] * n
        unit[k] = 1
        polys.append(LaurentPoly(n, {tuple(unit): 1, (0,) * n: -a}))
    return koszul(polys)
