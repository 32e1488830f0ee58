"""Exact verification of anyonic quantum permutation group identities.

The package builds finite-dimensional graded representations of the anyonic
quantum permutation and free unitary families over the cyclotomic field
Q(w_N), and machine-checks their defining relations, comultiplications,
braided commutation laws, bosonizations and the action on the N-point space.
"""

from .cyclotomic import CycScalar, cyclotomic_polynomial, field_degree
from .linalg import (
    GradedOperator,
    GradedSpace,
    Matrix,
    braiding,
    clock_matrix,
    degree_of,
    embed_j1,
    embed_j2,
    exact_inverse,
    mat_is_unitary,
    omega_inverse,
    omega_matrix,
    shift_matrix,
    span_dimension,
)
from .presentations import (
    GeneratorSymbol,
    Presentation,
    Relation,
    RepAssignment,
    boso_sn_relations,
    boso_un_relations,
    check_presentation,
    evaluate_relation,
    rel_ord_relations,
    sn_plus_relations,
    un_plus_relations,
    xn_relations,
)
from .repbuild import (
    MagicUnitary,
    TwistedMatrix,
    build_boso_rep,
    build_sn_rep,
    build_un_rep_from_sn,
    build_xn_rep,
    fundamental_rep,
    fundamental_unitarity,
    identity_magic,
    magic_to_twisted,
    paper_magic_unitary,
    paper_seed,
    paper_twisted_closed_form,
    permutation_magic,
    random_block_magic,
    random_projection,
    twisted_to_magic,
    validate_magic,
)
from .report import VerificationReport
from .verifier import (
    InconsistentActionError,
    action_images,
    check_action,
    check_boso_comult,
    check_braided_commutation,
    check_coassociativity,
    check_commutativity,
    check_comult_welldefined,
    check_extraction_roundtrip,
    check_podles_span,
    comult_images,
    extract_coefficients,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
