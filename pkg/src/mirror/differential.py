from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Tuple

from algebra import FreeComplex, MissingDegreeError, compose_differentials
from exponents import add_exponents
from torus import Placement, SupportSet, build_S, translate

Exponent = Tuple[int, ...]
FormalSum = Dict[Exponent, Fraction]   # m -> coefficient of phi^m

'''
The mirror complex is modelled by its differential: entry (i, j) of d^k is the formal sum
of c_ijm phi^m_ij, one term for every monomial of the (i, j) entry of F. Composition uses
phi^m' phi^m = phi^(m + m').
'''


class ContainmentError(RuntimeError):
    """A map phi^m_ij was requested while S_i + m is not contained in S_j."""


class MirrorDifferential:
    """
    Formal differential of the mirror complex of F for a placement.

    Parameters:
    - F: FreeComplex.
    - supports: label -> SupportSet of the same placement.
    - entries: (i, j) -> FormalSum, nonempty sums only.
    """

    def __init__(self, F: FreeComplex, supports: Dict[Hashable, SupportSet],
                 entries: Dict[Tuple[Hashable, Hashable], FormalSum]):
        self.F = F
        self.n = F.n
        self.labels = F.labels
        self.degrees = F.degrees
        self.supports = supports
        self.entries = entries

    def basis(self, k: int) -> List[Hashable]:
        return self.F.basis(k)

    def entry(self, i, j) -> FormalSum:
        return dict(self.entries.get((i, j), {}))

    def matrix(self, k: int) -> List[List[FormalSum]]:
        """Formal d^k with rows I_{k+1} and columns I_k."""
        return [[self.entry(i, j) for j in self.basis(k)] for i in self.basis(k + 1)]

    def term_count(self, k: int) -> int:
        return sum(len(s) for row in self.matrix(k) for s in row)

    def __repr__(self) -> str:
        return f"MirrorDifferential(n={self.n}, entries={len(self.entries)})"


def certify_containment(supports: Dict[Hashable, SupportSet], i, j, m: Exponent):
    """Raise ContainmentError unless S_i + m lies in S_j."""
    target = supports[j]
    for simplex in supports[i].maximal():
        moved = tuple(translate(v, m) for v in simplex)
        if not target.covers(moved):
            raise ContainmentError(
                f"build_mirror: S_{i} + {m} is not contained in S_{j} (simplex {moved})")


def build_mirror(F: FreeComplex, P: Placement) -> MirrorDifferential:
    """
    Formal differential with entry (i, j) = sum of c_ijm phi^m_ij, after checking every
    containment S_i + m in S_j against the support sets.
    """
    supports = build_S(F, P, check=False)
    entries = {}
    for (i, j), poly in F.entries.items():
        terms = {}
        for m, c in poly.items():
            certify_containment(supports, i, j, m)
            terms[m] = c
        entries[(i, j)] = terms
    return MirrorDifferential(F, supports, entries)


def compose_mirror(D: MirrorDifferential, k: int) -> List[List[FormalSum]]:
    """
    Formal d^{k+1} d^k with rows I_{k+2} and columns I_k; zero coefficients are dropped.
    """
    for degree in (k, k + 1):
        if not D.F.has_differential(degree):
            raise MissingDegreeError(f"compose_mirror: d^{degree} is missing")
    middle = D.basis(k + 1)
    product = []
    for i in D.basis(k + 2):
        row = []
        for l in D.basis(k):
            total: FormalSum = {}
            for j in middle:
                outer, inner = D.entries.get((i, j)), D.entries.get((j, l))
                if not outer or not inner:
                    continue
                for m, c in inner.items():
                    for m2, c2 in outer.items():
                        key = add_exponents(m, m2)
                        total[key] = total.get(key, Fraction(0)) + c * c2
            row.append({m: c for m, c in total.items() if c != 0})
        product.append(row)
    return product


@dataclass
class D2Report:
    """
    Polynomial against formal composite per degree k.

    Parameters:
    - degrees: the k for which d^{k+1} d^k exists.
    - polynomial_zero / formal_zero: k -> whether the composite vanishes.
    - supports: k -> set of (i, l, m) with a nonzero coefficient, polynomial side.
    - coefficients_agree: whether every coefficient of z^m equals that of phi^m.
    """
    degrees: List[int] = field(default_factory=list)
    polynomial_zero: Dict[int, bool] = field(default_factory=dict)
    formal_zero: Dict[int, bool] = field(default_factory=dict)
    supports: Dict[int, set] = field(default_factory=dict)
    coefficients_agree: bool = True

    @property
    def both_vanish(self) -> bool:
        return all(self.polynomial_zero.values()) and all(self.formal_zero.values())

    @property
    def agree(self) -> bool:
        return self.polynomial_zero == self.formal_zero


def d2_report(F: FreeComplex, P: Placement) -> D2Report:
    D = build_mirror(F, P)
    report = D2Report()
    for k in F.present_degrees():
        if not (F.has_differential(k) and F.has_differential(k + 1)):
            continue
        report.degrees.append(k)
        polynomial = compose_differentials(F, k)
        formal = compose_mirror(D, k)
        support = set()
        for i, poly_row, formal_row in zip(F.basis(k + 2), polynomial, formal):
            for l, poly, terms in zip(F.basis(k), poly_row, formal_row):
                if dict(poly.items()) != terms:
                    report.coefficients_agree = False
                support.update((i, l, m) for m in poly.support())
        report.polynomial_zero[k] = not support
        report.formal_zero[k] = not any(terms for row in formal for terms in row)
        report.supports[k] = support
    return report


def d2_equivalence(F: FreeComplex, P: Placement) -> bool:
    """
    Whether d^2 = 0 holds for the polynomial differential exactly when it holds for the
    formal one, in every degree. Vacuously true for complexes with fewer than three terms.
    """
    report = d2_report(F, P)
    return report.agree and report.coefficients_agree
