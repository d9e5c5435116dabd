"""Ceva triangles: the parametric cevian operator and the groups behind it."""

__version__ = "0.1.0"

from .errors import (
    BrocardMismatch,
    CevaError,
    DegenerateTriangle,
    EquilateralInput,
    GammaOutOfRange,
    InvalidTriangle,
    IsotropicVector,
    NonPositiveSide,
    NoSolution,
    ParamOutsideInterval,
    ParamOutsideIntervalWarning,
    VerificationError,
)
from .extgroup import INF, box, box_inv, box_sqrt, coset, in_coset, norm, phi, phi_inv
from .unitgroup import diamond, diamond_inv, project
from .triangle import (
    ShapeDescriptor,
    Triangle,
    TriangleClass,
    brocard_angle,
    classify,
    cone_angle,
    fundamental_interval,
    kappa,
    mu_nu,
    shape_descriptor,
)
from .matrices import ceva_matrix, compose, solve_reflection
from .ceva import (
    ReconstructionPlan,
    Similarity,
    SimilarityRelation,
    apply,
    apply_hajja,
    execute_plan,
    iota,
    isosceles_params,
    iterate,
    matching_param,
    param_similarity,
    reconstruct,
    right_ceva_param,
    self_similar_params,
    similarity,
    triangle_from_shape,
    z_map,
)
from .geom_oracle import PlanarTriangle, bases_perpendicular, cevian_lengths, embed
