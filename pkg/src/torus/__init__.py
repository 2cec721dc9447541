from .points import RationalPoint, as_point, parse_point, point_strings, reduce_point, translate, bounding_box, lattice_range, translates_between
from .linprog import ExactLinearProgram, LPResult, maximize
from .simplex import TorusSimplex, face, affine_rank, simplex_volume, point_in_hull, relative_interiors_meet
from .placement import Placement, perturb_generic, half_cube_placement
from .simplicial_set import SimplicialSet, build_X, build_from_table, chain_simplex, simplices_from
from .support import SupportSet, build_S, images_of, recursive_supports, support_equals_T, normalize
from .predicates import GeometryCheck, is_immersed, is_embedded, self_overlap, pair_overlap

__all__ = [RationalPoint, as_point, parse_point, point_strings, reduce_point, translate, bounding_box, lattice_range, translates_between, ExactLinearProgram, LPResult, maximize, TorusSimplex, face, affine_rank, simplex_volume, point_in_hull, relative_interiors_meet, Placement, perturb_generic, half_cube_placement, SimplicialSet, build_X, build_from_table, chain_simplex, simplices_from, SupportSet, build_S, images_of, recursive_supports, support_equals_T, normalize, GeometryCheck, is_immersed, is_embedded, self_overlap, pair_overlap]
