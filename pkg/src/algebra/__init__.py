from .laurent import LaurentPoly, multiply, DimensionMismatchError
from .parser import parse_laurent, LaurentParser, LaurentSyntaxError, UnknownVariableError, ZeroDenominatorError
from .complex import FreeComplex, compose_differentials, is_cochain_complex, rescale_summand, MissingDegreeError
from .resolutions import koszul, hypersurface, point_koszul, subset_label

__all__ = [LaurentPoly, multiply, DimensionMismatchError, parse_laurent, LaurentParser, LaurentSyntaxError, UnknownVariableError, ZeroDenominatorError, FreeComplex, compose_differentials, is_cochain_complex, rescale_summand, MissingDegreeError, koszul, hypersurface, point_koszul, subset_label]
