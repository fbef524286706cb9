"""
Services built on the exact core: the q-difference operator, the polynomial
solver, torus quadrature, reflection-equation checks and the Grassmannian bridge.
"""

from src.services.grassmann_service import (
    GrassmannService,
    casimir_eigenvalue,
    param_map,
    radial_consistency,
    spherical_embed,
    spherical_restriction,
)
from src.services.koornwinder_service import (
    check_separation,
    koornwinder,
    verify_eigen,
)
from src.services.one_variable import one_var_oracle
from src.services.orthogonality_service import OrthogonalityService, gram, torus_inner
from src.services.qdifference_service import (
    QDifferenceOperator,
    apply_D,
    eigenvalue_c,
    operator_matrix,
)
from src.services.reflection_service import (
    ReflectionService,
    build_J,
    build_R,
    build_variants,
    hecke_residual,
    reflection_residual,
    yang_baxter_residual,
)

__all__ = [
    "GrassmannService",
    "OrthogonalityService",
    "QDifferenceOperator",
    "ReflectionService",
    "apply_D",
    "build_J",
    "build_R",
    "build_variants",
    "casimir_eigenvalue",
    "check_separation",
    "eigenvalue_c",
    "gram",
    "hecke_residual",
    "koornwinder",
    "one_var_oracle",
    "operator_matrix",
    "param_map",
    "radial_consistency",
    "reflection_residual",
    "spherical_embed",
    "spherical_restriction",
    "torus_inner",
    "verify_eigen",
    "yang_baxter_residual",
]
