"""Exact computations on Frobenius Lie algebras and their left-symmetric structures."""

from .catalog import (
    GkXiSpec,
    aff,
    csp_check,
    diagonal_instance,
    example_preset,
    g_k_xi,
    gl_semidirect,
    golden_instance,
    pi_power_instance,
)
from .checks import CheckResult
from .derivations import (
    DerivationSpace,
    PipelineReport,
    all_derivations_inner,
    derivation_basis,
    gkxi_outer_derivation,
    is_derivation,
    is_inner,
    principal_semisimplicity_pipeline,
)
from .errors import (
    ConvergenceError,
    CspViolation,
    DegenerateFormError,
    DimensionError,
    FieldMismatchError,
    InvalidAlgebraError,
    LieToolError,
    LsaAxiomError,
    ParseError,
    UnsupportedFieldError,
)
from .field_linalg import EXACT, Field, Matrix, Polynomial, approx, char_poly
from .frobenius import (
    FrobeniusStructure,
    coboundary_form,
    conformal_factor,
    find_frobenius_functional,
    frobenius_search,
    is_frobenius_functional,
    principal_element,
    r_tensor,
    right_nil_basis,
    right_unit_set,
    trace_identity_check,
)
from .lie_core import (
    LieAlgebra,
    abelian,
    center_basis,
    closed_one_forms_basis,
    derived_ideal_basis,
    direct_sum,
    is_unimodular,
    validate,
)
from .lsa import LsaProduct, is_right_nil, is_right_unit, left_mult, lsa_from_frobenius, right_mult
from .sl_embed import SlEmbedding, embed, verify_embedding
from .spectral import EigenReport, JordanPair, eigen_report, is_nilpotent, is_semisimple, jordan_chevalley

__version__ = "0.1.0"
