"""Fat points on configurations of six points in the plane.

Hilbert functions of uniform fat-point ideals through negative curves on the
blow-up, the generic initial ideals they determine, and the limiting shape
of the associated Newton polygons.
"""

from .cohomology import HilbertTable, hilbert_function, hilbert_value, reduce, riemann_roch_nef
from .configuration import (ConfigurationType, DefiningCurve, NegativeCurves, by_alias, by_slug,
                            catalog, enumerate_all_types, enumerate_NEG, validate)
from .errors import FatGinError, InconsistencyError, ValidationError
from .oracle import PointSet, oracle_hilbert, realize, verify_realization
from .picard import DivisorClass, canonical_class, fat_point_class, intersect
from .polytope import LimitReport, RationalPolygon, limiting_shape, newton_polytope
from .staircase import Staircase, staircase_from_hilbert

__all__ = [
    "ConfigurationType", "DefiningCurve", "DivisorClass", "FatGinError", "HilbertTable",
    "InconsistencyError", "LimitReport", "NegativeCurves", "PointSet", "RationalPolygon",
    "Staircase", "ValidationError", "by_alias", "by_slug", "canonical_class", "catalog",
    "enumerate_NEG", "enumerate_all_types", "fat_point_class", "hilbert_function",
    "hilbert_value", "intersect", "limiting_shape", "newton_polytope", "oracle_hilbert",
    "realize", "reduce", "riemann_roch_nef", "staircase_from_hilbert", "validate",
    "verify_realization",
]
