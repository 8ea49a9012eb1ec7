"""Exact computer algebra for a two-parameter quantum affine algebra of
rank one: root vectors, a bilinear pairing of the two Borel halves, a
family of 2N-dimensional representations, and the resulting spectral
R-matrices with Yang-Baxter verification.
"""

from .cyclotomic import Cyclotomic
from .scalars import Scalar, ScalarContext, default_context
from .matrices import SparseMat, kron, embed
from .freealg import FreeAlgebra, default_algebra, qbracket, verify_relation
from .ualg import (
    UAlgebra,
    default_ualgebra,
    coproduct,
    antipode,
    counit,
    lusztig,
    PBWMonomial,
    pbw_pairing_value,
    pbw_monomials_of_weight,
    verify_pbw_pairing,
    coproduct_structure_check,
    mixed_commutator_check,
    normalized_tilde_commutator_check,
)
from .rep import RepConfig, rho, rho_eval, root_image, closed_form_image, verify_rep
from .rmatrix import (
    ASeries,
    a_series,
    a_series_functional_check,
    assemble_R,
    six_vertex_R,
    r2_display,
    check_ybe_exact,
    ybe_n1_exact,
    ybe_n2_exact,
    numeric_R,
    numeric_ybe_residual,
    random_spectral_points,
    cartan_universal_check,
)

__all__ = [
    "Cyclotomic",
    "Scalar",
    "ScalarContext",
    "default_context",
    "SparseMat",
    "kron",
    "embed",
    "FreeAlgebra",
    "default_algebra",
    "qbracket",
    "verify_relation",
    "UAlgebra",
    "default_ualgebra",
    "coproduct",
    "antipode",
    "counit",
    "lusztig",
    "PBWMonomial",
    "pbw_pairing_value",
    "pbw_monomials_of_weight",
    "verify_pbw_pairing",
    "coproduct_structure_check",
    "mixed_commutator_check",
    "normalized_tilde_commutator_check",
    "RepConfig",
    "rho",
    "rho_eval",
    "root_image",
    "closed_form_image",
    "verify_rep",
    "ASeries",
    "a_series",
    "a_series_functional_check",
    "assemble_R",
    "six_vertex_R",
    "r2_display",
    "check_ybe_exact",
    "ybe_n1_exact",
    "ybe_n2_exact",
    "numeric_R",
    "numeric_ybe_residual",
    "random_spectral_points",
    "cartan_universal_check",
]

__version__ = "0.1.0"
