"""Discreteness of two-generator Kleinian groups with real trace parameters."""

from .discreteness import (DISCRETE, NOT_CLASS_D, NOT_DISCRETE, UNRESOLVED,
                           ClassificationResult, ConditionViolated, FamilyInstance,
                           SearchBounds, classify, enumerate_instances, generate_family,
                           theorem2_conditions, two_elliptic_discrete)
from .orbifolds import (ambient_space, classify_cusp_edge, classify_fat_vertex,
                        finite_volume_census, gram_det, is_hyperbolic)
from .presentations import GroupSpec, Presentation, Word, build, to_abstract
from .realization import (Mat2C, MatrixPair, commutator_half_root, realize,
                          verify_relators)
from .trace_core import (BARINF, INF, ExtExp, Parameters, UPoint, class_d_gate,
                         classify_element, reduce_to_primitive)

__all__ = [
    "BARINF", "DISCRETE", "INF", "NOT_CLASS_D", "NOT_DISCRETE", "UNRESOLVED",
    "ClassificationResult", "ConditionViolated", "ExtExp", "FamilyInstance", "GroupSpec",
    "Mat2C", "MatrixPair", "Parameters", "Presentation", "SearchBounds", "UPoint", "Word",
    "ambient_space", "build", "class_d_gate", "classify", "classify_cusp_edge",
    "classify_element", "classify_fat_vertex", "commutator_half_root",
    "enumerate_instances", "finite_volume_census", "generate_family", "gram_det",
    "is_hyperbolic", "realize", "reduce_to_primitive", "theorem2_conditions",
    "to_abstract", "two_elliptic_discrete", "verify_relators",
]
