from .graph import BipartiteTorusGraph, DimerEdge, WrongDegreeProfileError, extract_graph, kasteleyn, to_dot
from .quiver_rep import QuiverRep, dimension_vector
from .reflection import ZeroWeightError, reflect_local_system, reflected_violations, verify_reflected
from .kernel import NotEmbeddedError, SurjectivityError, kernel_of_d

__all__ = [BipartiteTorusGraph, DimerEdge, WrongDegreeProfileError, extract_graph, kasteleyn, to_dot, QuiverRep, dimension_vector, ZeroWeightError, reflect_local_system, reflected_violations, verify_reflected, NotEmbeddedError, SurjectivityError, kernel_of_d]
