"""Exact-arithmetic workbench for finite-dimensional Novikov-type structures.

Everything computes over the rationals with structure-constant tables;
identities are verified exhaustively on basis tuples (they are multilinear,
so that is complete) and all residuals are exact.
"""

from .linalg import (
    BilinearForm,
    LinMap,
    Scalar,
    Tensor2,
    Tensor3,
    dual_map,
    format_rational,
    parse_rational,
    perm_from_cycles,
    permute_tensor3,
    rank,
    sharp,
)
from .model import (
    ActionFamily,
    AlgebraSpec,
    BudgetError,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
    VerificationError,
    Witness,
    all_pass,
    dualize_coprod,
    dualize_mul,
)
from .catalog import (
    CATALOG,
    PROFILES,
    Context,
    check_identities,
    check_identity,
    check_profile,
)
from .constructions import (
    MatchedPairData,
    NNRepresentation,
    adjoint_nn,
    adjoint_wrt_form,
    bowtie_nn,
    coadjoint_nn,
    double_construction,
    dual_nn_representation,
    frobenius_rep_equivalence,
    manin_from_bialgebra,
    matched_pair_from_bialgebra,
    pairing_form,
    semidirect_assoc,
    semidirect_nn,
)
from .ybe import (
    OOperatorProblem,
    check_o_operator,
    eval_nybe,
    form_from_r,
    lift_o_operator,
    oelda_test,
    r_from_form,
    search_nybe,
    triangular_bialgebra,
)
from .derived import (
    PreNovikovSpec,
    associated_nn,
    derive_nn_bialgebra,
    gelfand_dual,
    gelfand_nn,
    manin_via_differential,
    pre_novikov_from_diff_dendriform,
    pre_novikov_from_o_operator,
    pre_novikov_from_quasi_frobenius,
    tautological_representation,
)
from .specfile import parse_spec, parse_tensor, write_reports, write_spec, write_tensor

__version__ = "0.1.0"
