import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .laurent import LaurentPoly, multiply

"""
Recursive-descent reader for Laurent expressions.

    expr   := ['-'] term { ('+'|'-') term }
    term   := coef | coef '*' mono | mono
    coef   := int [ '/' posint ]
    mono   := factor { '*' factor }
    factor := var [ '^' int ] | '(' expr ')'

Exponents may be negative ("y^-1"); whitespace is ignored.
"""


class LaurentSyntaxError(ValueError):
    """Malformed Laurent expression. `position` is the 0-based offset into the text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(LaurentSyntaxError):
    pass


class ZeroDenominatorError(LaurentSyntaxError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            # only trailing whitespace left
            break
        number, name, symbol = match.groups()
        start = match.start(match.lastindex)
        if number is not None:
            tokens.append(("NUM", number, start))
        elif name is not None:
            tokens.append(("VAR", name, start))
        else:
            if symbol not in "+-*/^()":
                raise LaurentSyntaxError(f"unexpected character {symbol!r}", start)
            tokens.append((symbol, symbol, start))
        pos = match.end()
    tokens.append(("END", "", len(text)))
    return tokens


class LaurentParser:
    """
    Parser bound to an ordered list of variable names.

    Parameters:
    - variables: variable names; their order fixes the exponent coordinates.
    """

    def __init__(self, variables: Sequence[str]):
        self.variables = list(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("LaurentParser: duplicate variable names")
        self._index = {name: k for k, name in enumerate(self.variables)}
        self.n = len(self.variables)
        self._tokens: List[Tuple[str, str, int]] = []
        self._pos = 0

    def parse(self, text: str) -> LaurentPoly:
        self._tokens = _tokenize(text)
        self._pos = 0
        if self._peek()[0] == "END":
            raise LaurentSyntaxError("empty expression", 0)
        result = self._expr()
        kind, value, position = self._peek()
        if kind != "END":
            raise LaurentSyntaxError(f"unexpected token {value!r}", position)
        return result

    def _peek(self):
        return self._tokens[self._pos]

    def _take(self, kind: str):
        token = self._tokens[self._pos]
        if token[0] != kind:
            expected = "number" if kind == "NUM" else kind
            found = token[1] or "end of input"
            raise LaurentSyntaxError(f"expected {expected}, found {found!r}", token[2])
        self._pos += 1
        return token

    def _expr(self) -> LaurentPoly:
        negate = False
        if self._peek()[0] == "-":
            self._take("-")
            negate = True
        result = self._term()
        if negate:
            result = -result
        while self._peek()[0] in ("+", "-"):
            op = self._take(self._peek()[0])[0]
            term = self._term()
            result = result + term if op == "+" else result - term
        return result

    def _term(self) -> LaurentPoly:
        if self._peek()[0] == "NUM":
            coefficient = self._coef()
            if self._peek()[0] == "*":
                self._take("*")
                return self._mono().scale(coefficient)
            return LaurentPoly.one(self.n).scale(coefficient)
        return self._mono()

    def _coef(self) -> Fraction:
        numerator = int(self._take("NUM")[1])
        if self._peek()[0] == "/":
            self._take("/")
            _, digits, position = self._take("NUM")
            denominator = int(digits)
            if denominator == 0:
                raise ZeroDenominatorError("zero denominator in coefficient", position)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _mono(self) -> LaurentPoly:
        result = self._factor()
        while self._peek()[0] == "*":
            self._take("*")
            result = multiply(result, self._factor())
        return result

    def _factor(self) -> LaurentPoly:
        kind, value, position = self._peek()
        if kind == "(":
            self._take("(")
            inner = self._expr()
            self._take(")")
            return inner
        if kind != "VAR":
            raise LaurentSyntaxError(f"expected variable or '(', found {value or 'end of input'!r}", position)
        self._take("VAR")
        if value not in self._index:
            raise UnknownVariableError(f"unknown variable {value!r}", position)
        power = 1
        if self._peek()[0] == "^":
            self._take("^")
            sign = 1
            if self._peek()[0] == "-":
                self._take("-")
                sign = -1
            power = sign * int(self._take("NUM")[1])
        exponent = [0] * self.n
        exponent[self._index[value]] = power
        return LaurentPoly.monomial(exponent)


def parse_laurent(text: str, variables: Sequence[str]) -> LaurentPoly:
    """
    Parse a Laurent expression over the given ordered variables.

    Parameters:
    - text: expression such as "1+x+y" or "-(1+z+x*y)".
    - variables: ordered variable names.

    Returns:
    - LaurentPoly in sparse normal form.
    """
    return LaurentParser(variables).parse(text)
