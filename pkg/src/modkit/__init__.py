"""Finite-dimensional modular operator toolkit.

Numerical machinery for the standard form of the d x d matrix algebra:
the operator-vector (vec) correspondence, Schmidt decomposition, modular
and relative modular operators with their flow and cocycle, the Gibbs/KMS
worked example, the natural positive cone, and a verifier kernel for the
Powers-Stormer family of trace inequalities.
"""

from .cone import (
    ConeElement,
    cone_contains,
    cone_pairing,
    decompose_general,
    decompose_j_fixed,
    representative_of,
)
from .errors import (
    BadBeta,
    BadExponent,
    DimensionMismatch,
    DomainError,
    ModkitError,
    NotHermitian,
    NotJFixed,
    NotPSD,
    NotSquare,
    OrderViolation,
    OutsideStrip,
    ParseError,
    ShapeMismatch,
    SingularState,
    UnknownSuite,
    ZeroVector,
)
from .inequalities import (
    InequalityReport,
    MonotoneFunction,
    default_registry,
    hoa_generalized,
    monotone_function,
    norm_sandwich,
    ogata_modular,
    ozawa_s,
    phillips,
    power_monotone,
    powers_stormer,
)
from .kms import (
    GibbsSystem,
    centralizer_basis,
    gibbs_hamiltonian,
    heisenberg_evolve,
    kms_function,
    modular_hamiltonian,
)
from .linalg import (
    SpectralDecomposition,
    apply_spectral_function,
    check_psd,
    jordan_decompose,
    matrix_sqrt,
    psd_power,
    schatten_norm,
    spectral_decomposition,
    support_projection,
    trace_norm,
)
from .modular import (
    StandardForm,
    TomitaTakesakiReport,
    connes_cocycle,
    modular_conjugation,
    modular_flow,
    relative_f_matrix,
    relative_modular_operator,
    relative_modular_power,
    relative_modular_unitary,
    relative_s_matrix,
    verify_tomita_takesaki,
)
from .schmidt import SchmidtData, is_cyclic_separating, schmidt_decompose, schmidt_rank
from .states import (
    DensityMatrix,
    PositiveFunctional,
    evaluate_state,
    functional_distance,
    is_faithful,
    purify,
)
from .superops import (
    BoxTimes,
    boxtimes_apply,
    left_mult,
    right_mult,
    superop_function,
    superop_power,
)
from .vecops import (
    BipartiteVector,
    SuperOperator,
    conjugate_vec,
    kron_apply_vec,
    partial_trace,
    regroup_product_vec,
    swap_operator,
    unvec,
    vec,
)

__version__ = "0.1.0"
