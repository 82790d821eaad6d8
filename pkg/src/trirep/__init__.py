"""Straight-line triangle representations of plane graphs.

Decides whether a plane graph admits a straight-line drawing in which every
face (including the outer one) bounds a non-degenerate triangle, constructs
such drawings through discrete harmonic systems, stretches contact systems of
pseudosegments, and builds primal-dual triangle contact representations via
Schnyder woods.
"""

from .planar import (
    PlaneGraph,
    SuspendedGraph,
    MedialGraph,
    build_plane_graph,
    check_internally_3connected,
    reduce_degree_two,
    medial_graph,
    check_almost_4_regular,
    invert_medial,
)
from .faa import (
    FlatAngleAssignment,
    FaceCornerSpec,
    PseudosegmentFamily,
    OutlineCycle,
    check_assignment_conditions,
    enumerate_faas,
    pseudosegments_of,
    family_from_paths,
    outline_of,
    convex_corners,
    check_outline_convexity,
    free_points,
    extremal_points,
    check_point_condition,
)
from .harmonic import (
    HarmonicWeights,
    HarmonicSystem,
    Drawing,
    VerificationReport,
    assemble,
    check_solvability,
    solve,
    verify_drawing,
    is_gfaa,
    evaluate_assignment,
    default_weights,
    random_weights,
)
from .schnyder import (
    SchnyderWood,
    OrthogonalSurface,
    Dissection,
    compute_schnyder_wood,
    enumerate_schnyder_woods,
    verify_schnyder,
    surface_coordinates,
    check_rigidity,
    medial_faa,
    primal_dual_representation,
)
from .stretching import (
    PseudosegmentArrangement,
    AugmentedArrangement,
    StretchResult,
    arrangement_from_paths,
    check_stretchable,
    augment,
    strip,
    stretch,
)
from .svg import RenderSpec, render_svg

__all__ = [
    "PlaneGraph",
    "SuspendedGraph",
    "MedialGraph",
    "build_plane_graph",
    "check_internally_3connected",
    "reduce_degree_two",
    "medial_graph",
    "check_almost_4_regular",
    "invert_medial",
    "FlatAngleAssignment",
    "FaceCornerSpec",
    "PseudosegmentFamily",
    "OutlineCycle",
    "check_assignment_conditions",
    "enumerate_faas",
    "pseudosegments_of",
    "family_from_paths",
    "outline_of",
    "convex_corners",
    "check_outline_convexity",
    "free_points",
    "extremal_points",
    "check_point_condition",
    "HarmonicWeights",
    "HarmonicSystem",
    "Drawing",
    "VerificationReport",
    "assemble",
    "check_solvability",
    "solve",
    "verify_drawing",
    "is_gfaa",
    "evaluate_assignment",
    "default_weights",
    "random_weights",
    "SchnyderWood",
    "OrthogonalSurface",
    "Dissection",
    "compute_schnyder_wood",
    "enumerate_schnyder_woods",
    "verify_schnyder",
    "surface_coordinates",
    "check_rigidity",
    "medial_faa",
    "primal_dual_representation",
    "PseudosegmentArrangement",
    "AugmentedArrangement",
    "StretchResult",
    "arrangement_from_paths",
    "check_stretchable",
    "augment",
    "strip",
    "stretch",
    "RenderSpec",
    "render_svg",
]

__version__ = "0.1.0"
