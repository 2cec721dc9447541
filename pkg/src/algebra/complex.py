from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .laurent import DimensionMismatchError, LaurentPoly, multiply

Label = Hashable


class MissingDegreeError(ValueError):
    """Raised when a differential is requested in a degree where the complex has no term."""


class FreeComplex:
    """
    Bounded complex of based free modules over the Laurent ring in n variables.

    Basis elements are labels carrying an integer degree (all degrees <= 0, at least one
    equal to 0). The differential is stored sparsely: entry (i, j) with deg(i) = deg(j) + 1
    is the polynomial d^{deg j}_{ij} in row i and column j. The differential is not required
    to square to zero.

    Parameters:
    - n: number of variables.
    - degrees: ordered mapping label -> degree; the order fixes row/column order.
    - entries: mapping (row label, column label) -> LaurentPoly.
    """

    def __init__(self, n: int, degrees: Mapping[Label, int],
                 entries: Optional[Mapping[Tuple[Label, Label], LaurentPoly]] = None):
        self.n = n
        self.degrees: Dict[Label, int] = {label: int(d) for label, d in degrees.items()}
        if not self.degrees:
            raise ValueError("FreeComplex: index set is empty")
        if max(self.degrees.values()) != 0:
            raise ValueError("FreeComplex: the top degree must be 0 and all degrees <= 0")
        self.labels: Tuple[Label, ...] = tuple(self.degrees)

        self.entries: Dict[Tuple[Label, Label], LaurentPoly] = {}
        for (row, col), poly in (entries or {}).items():
            if row not in self.degrees or col not in self.degrees:
                raise ValueError(f"FreeComplex: entry ({row}, {col}) uses an unknown label")
            if self.degrees[row] != self.degrees[col] + 1:
                raise ValueError(
                    f"FreeComplex: entry ({row}, {col}) does not raise the degree by one")
            if poly.n != n:
                raise DimensionMismatchError(
                    f"FreeComplex: entry ({row}, {col}) has {poly.n} variables, expected {n}")
            if not poly.is_zero():
                self.entries[(row, col)] = poly

    @classmethod
    def from_matrices(cls, n: int, degrees: Mapping[Label, int],
                      matrices: Mapping[int, Sequence[Sequence[LaurentPoly]]]) -> "FreeComplex":
        """
        Build from dense matrices: matrices[k] has rows I_{k+1} and columns I_k in label order.
        """
        shell = cls(n, degrees)
        entries = {}
        for k, matrix in matrices.items():
            rows, cols = shell.basis(k + 1), shell.basis(k)
            if len(matrix) != len(rows) or any(len(r) != len(cols) for r in matrix):
                raise ValueError(
                    f"FreeComplex: d^{k} must be {len(rows)}x{len(cols)}")
            for i, row in zip(rows, matrix):
                for j, poly in zip(cols, row):
                    entries[(i, j)] = poly
        return cls(n, degrees, entries)

    def basis(self, k: int) -> List[Label]:
        """The labels I_k of degree k, in label order."""
        return [label for label in self.labels if self.degrees[label] == k]

    def present_degrees(self) -> List[int]:
        return sorted(set(self.degrees.values()))

    def has_differential(self, k: int) -> bool:
        return bool(self.basis(k)) and bool(self.basis(k + 1))

    def entry(self, row: Label, col: Label) -> LaurentPoly:
        return self.entries.get((row, col), LaurentPoly.zero(self.n))

    def matrix(self, k: int) -> List[List[LaurentPoly]]:
        """Dense d^k with rows I_{k+1} and columns I_k."""
        return [[self.entry(i, j) for j in self.basis(k)] for i in self.basis(k + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeComplex):
            return NotImplemented
        return (self.n == other.n and self.degrees == other.degrees
                and self.entries == other.entries)

    def __repr__(self) -> str:
        ranks = {k: len(self.basis(k)) for k in self.present_degrees()}
        return f"FreeComplex(n={self.n}, ranks={ranks})"


def compose_differentials(F: FreeComplex, k: int) -> List[List[LaurentPoly]]:
    """
    The product d^{k+1} d^k, rows I_{k+2} and columns I_k.

    Raises:
        MissingDegreeError: if d^k or d^{k+1} does not exist.
    """
    for degree in (k, k + 1):
        if not F.has_differential(degree):
            raise MissingDegreeError(
                f"compose_differentials: d^{degree} is missing (degrees present: {F.present_degrees()})")
    product = []
    middle = F.basis(k + 1)
    for i in F.basis(k + 2):
        row = []
        for l in F.basis(k):
            total = LaurentPoly.zero(F.n)
            for j in middle:
                if (i, j) in F.entries and (j, l) in F.entries:
                    total = total + multiply(F.entries[(i, j)], F.entries[(j, l)])
            row.append(total)
        product.append(row)
    return product


def is_cochain_complex(F: FreeComplex) -> bool:
    """True iff every composite d^{k+1} d^k vanishes (vacuous for short complexes)."""
    for k in F.present_degrees():
        if F.has_differential(k) and F.has_differential(k + 1):
            if any(not p.is_zero() for row in compose_differentials(F, k) for p in row):
                return False
    return True


def rescale_summand(F: FreeComplex, label: Label, exponent: Sequence[int]) -> FreeComplex:
    """
    Replace basis element `label` by z^exponent times itself.

    Entries in row `label` are multiplied by z^exponent and entries in column `label` by
    z^-exponent, so the discrete information changes by a per-index translation.
    """
    exponent = tuple(exponent)
    inverse = tuple(-e for e in exponent)
    entries = {}
    for (row, col), poly in F.entries.items():
        if row == label:
            poly = poly.shift(exponent)
        if col == label:
            poly = poly.shift(inverse)
        entries[(row, col)] = poly
    return FreeComplex(F.n, F.degrees, entries)
