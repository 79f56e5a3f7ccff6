"""Exact convexity verification for piecewise-linear closed surfaces in R^n.

The verifier decides whether a PL-realized closed connected
(n-1)-manifold bounds a convex polyhedron by checking local convexity
only at the stars of its (n-3)-faces, with exact rational arithmetic
throughout.  A brute-force supporting-hyperplane oracle, instance
generators and file formats round out the package.
"""

from .exactgeom import (
    DegenerateFaceError,
    Projection3,
    complementary_projection,
    orient2d,
    orient3d,
    project,
    rank,
)
from .fan import (
    ConvexityCheck,
    Fan3,
    FanEntry,
    OppositeDirectionsError,
    ZeroDirectionError,
    build_fan,
    fan_is_convex,
    polygon_is_convex,
    reference_direction,
    rotation_index,
)
from .formats import NonManifoldError, ParseError, SemanticError, emit_pls, parse_off, parse_pls
from .instances import (
    GenSpec,
    build_instance,
    dent,
    gen_cross_polytope,
    gen_dented_cube,
    gen_hypercube,
    gen_prism,
    gen_schonhardt,
    gen_simplex,
    relabel,
    rigid_motion,
    scale,
    split_facet_cube,
    surface_from_polygons,
)
from .oracle import FlatSurfaceError, OracleVerdict, hull_facets_3d, oracle_verdict
from .poset import (
    Face,
    FacePoset,
    LinkCycle,
    LinkCycleError,
    ValidationReport,
    Violation,
    check_closed,
    check_connected,
    link_cycle,
    validate_poset,
)
from .surface import (
    FacetEquation,
    PLSurface,
    as_equations,
    check_realization,
    direction_space,
    facet_equation,
    interior_point,
)
from .verifier import CONVEX, INVALID, NOT_CONVEX, Verdict, preflight, verify, verify_face

__all__ = [
    "CONVEX",
    "ConvexityCheck",
    "DegenerateFaceError",
    "Face",
    "FacePoset",
    "FacetEquation",
    "Fan3",
    "FanEntry",
    "FlatSurfaceError",
    "GenSpec",
    "INVALID",
    "LinkCycle",
    "LinkCycleError",
    "NOT_CONVEX",
    "NonManifoldError",
    "OppositeDirectionsError",
    "OracleVerdict",
    "ParseError",
    "PLSurface",
    "Projection3",
    "SemanticError",
    "ValidationReport",
    "Verdict",
    "Violation",
    "ZeroDirectionError",
    "as_equations",
    "build_fan",
    "build_instance",
    "facet_equation",
    "check_closed",
    "check_connected",
    "check_realization",
    "complementary_projection",
    "dent",
    "direction_space",
    "emit_pls",
    "fan_is_convex",
    "gen_cross_polytope",
    "gen_dented_cube",
    "gen_hypercube",
    "gen_prism",
    "gen_schonhardt",
    "gen_simplex",
    "hull_facets_3d",
    "interior_point",
    "link_cycle",
    "oracle_verdict",
    "orient2d",
    "orient3d",
    "parse_off",
    "parse_pls",
    "polygon_is_convex",
    "preflight",
    "project",
    "rank",
    "reference_direction",
    "relabel",
    "rigid_motion",
    "rotation_index",
    "scale",
    "split_facet_cube",
    "surface_from_polygons",
    "validate_poset",
    "verify",
    "verify_face",
]
