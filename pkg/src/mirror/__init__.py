from .differential import MirrorDifferential, ContainmentError, D2Report, build_mirror, certify_containment, compose_mirror, d2_report, d2_equivalence
from .stalks import Stalk, StalkMap, stalk, stalk_map, stalk_table

__all__ = [MirrorDifferential, ContainmentError, D2Report, build_mirror, certify_containment, compose_mirror, d2_report, d2_equivalence, Stalk, StalkMap, stalk, stalk_map, stalk_table]
