"""Cyclic elliptic and symplectic spreads over characteristic-2 field towers."""

from .analysis import (ClassificationResult, EquivalenceResult,
                       VerificationReport, aut_order, classify_tower,
                       galois_image_spread, params_equivalent, theorem_bound,
                       verify_spread, verify_transitive)
from .errors import (ConstructionError, DomainError, ParameterError,
                     ResourceError)
from .fields import (DEFAULT_MAX_DEGREE, FieldCtx, TowerSpec, make_context,
                     smallest_primitive_modulus, zeta_element)
from .forms import (FormCtx, bilinear_form, census_report,
                    elliptic_singular_count, form_context,
                    hyperbolic_singular_count, is_totally_isotropic,
                    is_totally_singular, quad_form, singular_census,
                    singular_vectors, variant_form)
from .linalg import (CoordFrame, Subspace, apply_galois, coord_frame,
                     intersect, member, scale_subspace, span, subspace_sum,
                     zero_subspace)
from .spreads import (Spread, SpreadParams, base_subspace, default_chain,
                      desarguesian_spread, gammas, kernel_space, orbit_spread,
                      restrict_singular, restrict_spread)

__version__ = "0.1.0"

__all__ = [
    "ClassificationResult", "ConstructionError", "CoordFrame", "DomainError",
    "EquivalenceResult", "FieldCtx", "FormCtx", "ParameterError",
    "ResourceError", "Spread", "SpreadParams", "Subspace", "TowerSpec",
    "VerificationReport", "apply_galois", "aut_order", "base_subspace",
    "bilinear_form", "census_report", "classify_tower", "coord_frame",
    "default_chain", "desarguesian_spread", "elliptic_singular_count",
    "form_context", "galois_image_spread", "gammas",
    "hyperbolic_singular_count", "intersect", "is_totally_isotropic",
    "is_totally_singular", "kernel_space", "make_context", "member",
    "orbit_spread", "params_equivalent", "quad_form", "restrict_singular",
    "restrict_spread", "scale_subspace", "singular_census",
    "singular_vectors", "smallest_primitive_modulus", "span", "subspace_sum",
    "theorem_bound", "variant_form", "verify_spread", "verify_transitive",
    "zero_subspace", "zeta_element", "DEFAULT_MAX_DEGREE",
]
