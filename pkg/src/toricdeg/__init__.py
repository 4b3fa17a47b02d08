"""Newton-Okounkov polygons, normal toric degenerations and global bodies on
(weak) del Pezzo surfaces, in exact rational arithmetic."""

from .errors import DimensionMismatchError, DomainError
from .lattice import SurfaceModel, intersect, make_surface
from .zariski import ZariskiDecomposition, zariski_decompose
from .okounkov import FlagSpec, OkounkovPolygon, okounkov_polygon
from .ehrhart import Poly2, ehrhart_polynomial, hilbert_polynomial, normal_defect_report, normalized_surface_area
from .optimizer import OptimizationResult, optimize
from .cones import RationalCone, dual_and_minimize, hilbert_basis_check, nef_extremal_rays
from .global_body import GlobalBody, global_body

__all__ = [
    "DimensionMismatchError",
    "DomainError",
    "SurfaceModel",
    "intersect",
    "make_surface",
    "ZariskiDecomposition",
    "zariski_decompose",
    "FlagSpec",
    "OkounkovPolygon",
    "okounkov_polygon",
    "Poly2",
    "ehrhart_polynomial",
    "hilbert_polynomial",
    "normal_defect_report",
    "normalized_surface_area",
    "OptimizationResult",
    "optimize",
    "RationalCone",
    "dual_and_minimize",
    "hilbert_basis_check",
    "nef_extremal_rays",
    "GlobalBody",
    "global_body",
]
