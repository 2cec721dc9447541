from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy


def to_rational(x) -> sympy.Rational:
    if isinstance(x, float):
        raise TypeError("to_rational: floats are not accepted, use Fraction or int")
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Rational(x)


def to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def to_sympy(rows: Sequence[Sequence], shape: Optional[Tuple[int, int]] = None) -> sympy.Matrix:
    """Exact sympy Matrix from rows of Fractions; `shape` is needed for empty matrices."""
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return sympy.zeros(*shape)
    return sympy.Matrix([[to_rational(x) for x in row] for row in rows])


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return to_sympy(rows).rank()


def det(rows: Sequence[Sequence]) -> Fraction:
    return to_fraction(to_sympy(rows).det())


def solve(columns: Sequence[Sequence], target: Sequence) -> Optional[List[Fraction]]:
    """
    Solve sum_a x_a * columns[a] = target; returns one solution or None if inconsistent.
    Free variables are set to zero.
    """
    if not columns:
        return [] if all(x == 0 for x in target) else None
    A = to_sympy(columns).T
    b = to_sympy([[x] for x in target])
    try:
        solution, free = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if free.shape[0]:
        solution = solution.subs({symbol: 0 for symbol in free})
    return [to_fraction(x) for x in solution]
