from .table import ExponentTable, DiscreteInfo, exponent_table, close_under_chains, info, add_exponents, shift_set
from .chains import Chain, chains, chains_from, max_chain_length
from .equivalence import discrete_equivalent

__all__ = [ExponentTable, DiscreteInfo, exponent_table, close_under_chains, info, add_exponents, shift_set, Chain, chains, chains_from, max_chain_length, discrete_equivalent]
