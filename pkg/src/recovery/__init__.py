from .colored import ColoredComplex, VertexCollisionError
from .containment import simplex_in_union, point_in_union, independent_pieces, nearby_translates
from .recover import recover_E, recover_from_T, admitted_edges, edge_records, FullDimensionalError
from .characterization import check_characterization, CharacterizationResult, path_closure, unit_complex

__all__ = [ColoredComplex, VertexCollisionError, simplex_in_union, point_in_union, independent_pieces, nearby_translates, recover_E, recover_from_T, admitted_edges, edge_records, FullDimensionalError, check_characterization, CharacterizationResult, path_closure, unit_complex]
