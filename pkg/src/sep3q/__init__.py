"""Full-separability criteria for three-qubit states.

Pure states are decided exactly from nine bilinear forms of the amplitudes;
mixed states get a numerical entanglement certificate that is positive only
for entangled states.
"""

from .diagnostics import PptReport, partial_transpose, ppt_report, wootters_concurrence_pure
from .errors import (
    ConvergenceFailure,
    InvalidParams,
    NonFinite,
    NotHermitian,
    NotNormalized,
    NotPositive,
    ParseError,
    Sep3qError,
    ShapeError,
    TraceNotOne,
    UnknownState,
    WrongRank,
    ZeroVector,
)
from .library import (
    DCTParams,
    dct_state,
    ghz,
    maximally_mixed,
    product,
    random_density,
    random_product_pure,
    random_pure,
    random_separable_mixed,
    shifts_complement,
    shifts_upb,
    w,
)
from .mixed import (
    AMatrixSet,
    SearchConfig,
    SearchResult,
    ZMode,
    build_a_matrices,
    c_mixed,
    optimal_z_rank1,
    random_search,
    refine,
    score,
)
from .pure import (
    CVector,
    OperatorVariant,
    SOperatorSet,
    Verdict,
    brute_force_product_check,
    build_s_operators,
    c_vector,
    is_fully_separable_pure,
    minor_residuals,
)
from .spectral import hermitian_eigen, singular_values
from .statefile import dump_state, load_state
from .states import (
    DensityMatrix,
    EigDecomposition,
    PureState,
    density_from_pure,
    eig_hermitian,
    pure_from_amplitudes,
    validate_density,
)

__version__ = "0.1.0"
