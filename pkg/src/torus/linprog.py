from collections import namedtuple
from typing import Sequence

from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog

from utils.linalg import to_fraction, to_rational

LPResult = namedtuple("LPResult", ["status", "value", "x"])

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class ExactLinearProgram:
    """
    Linear program over Q handed to sympy's exact simplex solver.

    All variables are non-negative. Constraint i reads A[i] . x  rel[i]  b[i] with
    rel[i] in {'<=', '>=', '='}.

    Parameters:
    - c: objective coefficients.
    - A: constraint rows.
    - b: right-hand sides.
    - rel: relation per row.
    - sense: 'max' or 'min'.
    """

    def __init__(self, c: Sequence, A: Sequence[Sequence], b: Sequence, rel: Sequence[str], sense: str = "max"):
        if sense not in ("max", "min"):
            raise ValueError("ExactLinearProgram: sense must be 'max' or 'min'")
        if not (len(A) == len(b) == len(rel)):
            raise ValueError("ExactLinearProgram: A, b and rel must have the same length")
        self.num_vars = len(c)
        self.c = [to_rational(x) for x in c]
        self.A = [[to_rational(x) for x in row] for row in A]
        self.b = [to_rational(x) for x in b]
        self.rel = list(rel)
        self.sense = sense
        for row, r in zip(self.A, self.rel):
            if len(row) != self.num_vars:
                raise ValueError("ExactLinearProgram: constraint row has the wrong width")
            if r not in ("<=", ">=", "="):
                raise ValueError(f"ExactLinearProgram: unknown relation {r!r}")

    def _split(self):
        upper, upper_rhs, equal, equal_rhs = [], [], [], []
        for row, value, r in zip(self.A, self.b, self.rel):
            if r == "=":
                equal.append(row)
                equal_rhs.append(value)
            elif r == "<=":
                upper.append(row)
                upper_rhs.append(value)
            else:
                upper.append([-x for x in row])
                upper_rhs.append(-value)
        if not upper:
            # sympy's linprog needs at least one inequality row
            upper.append([0] * self.num_vars)
            upper_rhs.append(0)
        return upper, upper_rhs, equal, equal_rhs

    def solve(self) -> LPResult:
        upper, upper_rhs, equal, equal_rhs = self._split()
        sign = -1 if self.sense == "max" else 1
        objective = [sign * x for x in self.c]
        try:
            if equal:
                optimum, x = linprog(objective, upper, upper_rhs, equal, equal_rhs)
            else:
                optimum, x = linprog(objective, upper, upper_rhs)
        except InfeasibleLPError:
            return LPResult(INFEASIBLE, None, None)
        except UnboundedLPError:
            return LPResult(UNBOUNDED, None, None)
        return LPResult(OPTIMAL, to_fraction(sign * optimum), [to_fraction(v) for v in x])


def maximize(c, A, b, rel) -> LPResult:
    return ExactLinearProgram(c, A, b, rel, sense="max").solve()
