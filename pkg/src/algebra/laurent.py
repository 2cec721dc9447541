from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Raised when two objects live over Laurent rings in different numbers of variables."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("LaurentPoly: floating point coefficients are not supported")
    return Fraction(value)


class LaurentPoly:
    """
    Sparse Laurent polynomial in n variables with exact rational coefficients.

    Terms are stored as a mapping exponent vector -> nonzero Fraction. Instances are
    immutable and hashable, so they can be shared freely between complexes.

    Parameters:
    - n: number of variables.
    - terms: mapping from exponent tuples of length n to coefficients.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Dict[Exponent, object]] = None):
        if n < 0:
            raise ValueError("LaurentPoly: number of variables must be non-negative")
        self._n = n
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != n:
                raise DimensionMismatchError(
                    f"LaurentPoly: exponent {exponent} does not have length {n}")
            coefficient = _as_fraction(coefficient)
            if coefficient != 0:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + coefficient
                if cleaned[exponent] == 0:
                    del cleaned[exponent]
        self._terms = cleaned
        self._hash = None

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient=1) -> "LaurentPoly":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coefficient})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Exponent, Fraction]]:
        """Terms in lexicographic exponent order."""
        return sorted(self._terms.items())

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "LaurentPoly"):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"LaurentPoly: cannot combine with {type(other).__name__}")
        if other.n != self.n:
            raise DimensionMismatchError(
                f"LaurentPoly: dimension mismatch ({self.n} vs {other.n})")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coefficient
        return LaurentPoly(self.n, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return multiply(self, other)
        return self.scale(other)

    def scale(self, factor) -> "LaurentPoly":
        factor = _as_fraction(factor)
        return LaurentPoly(self.n, {e: c * factor for e, c in self._terms.items()})

    def __rmul__(self, factor) -> "LaurentPoly":
        return self.scale(factor)

    def shift(self, exponent: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial z^exponent."""
        exponent = tuple(exponent)
        if len(exponent) != self.n:
            raise DimensionMismatchError("LaurentPoly: shift exponent has wrong length")
        return LaurentPoly(self.n, {
            tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, variables: Optional[Sequence[str]] = None) -> str:
        """
        Print in the grammar accepted by parse_laurent.

        Parameters:
        - variables: variable names, defaults to z1..zn.

        Returns:
        - str, "0" for the zero polynomial.
        """
        if variables is None:
            variables = [f"z{k + 1}" for k in range(self.n)]
        if len(variables) != self.n:
            raise DimensionMismatchError("LaurentPoly: wrong number of variable names")
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coefficient in self.items():
            factors = []
            for name, power in zip(variables, exponent):
                if power == 1:
                    factors.append(name)
                elif power != 0:
                    factors.append(f"{name}^{power}")
            mono = "*".join(factors)
            magnitude = abs(coefficient)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f"{sign}{body}"
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {self.to_string()})"


def multiply(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """
    Exponentwise convolution of two Laurent polynomials; cancelled terms are dropped.
    """
    if not isinstance(p, LaurentPoly) or not isinstance(q, LaurentPoly):
        raise TypeError("multiply: both arguments must be LaurentPoly")
    if p.n != q.n:
        raise DimensionMismatchError(f"multiply: dimension mismatch ({p.n} vs {q.n})")
    terms: Dict[Exponent, Fraction] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            exponent = tuple(a + b for a, b in zip(e1, e2))
            terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
    return LaurentPoly(p.n, terms)
