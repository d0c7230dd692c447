"""Matrix functions of complex square matrices via closed-form spectral
decomposition: exponential, integer powers, Drazin inverse powers,
logarithms, spectral projections, and the Jordan-Chevalley split."""

__version__ = "0.1.0"

from .estimator import SpectralMatrixFunctions, check_square_matrix
from .exceptions import (
    ConditioningWarning,
    DegenerateSpectrum,
    MissingValue,
    NoConvergence,
    NonPrincipalWarning,
    SingularMatrix,
    SingularSeries,
    SpecmatError,
    SpectrumMismatch,
)
from .hermite import HermiteBasis, Spectrum, hermite_basis, hermite_interpolate
from .matfun import (
    BranchSelection,
    canonical_basis_functions,
    drazin_power,
    log_branch_principal,
    matrix_exponential,
    matrix_log,
    matrix_power,
)
from .spectral import (
    ComponentSystem,
    component_matrices,
    eigenvalue_index,
    is_diagonalizable,
    jordan_chevalley,
    spectral_projections,
)
from .spectrum import (
    SpectrumOptions,
    characteristic_polynomial,
    cluster_roots,
    find_roots,
    spectrum_of,
    validate_spectrum,
)
from .vandermonde import ConfluentVandermonde, build_confluent, inverse_confluent

__all__ = [
    "BranchSelection",
    "ComponentSystem",
    "ConditioningWarning",
    "ConfluentVandermonde",
    "DegenerateSpectrum",
    "HermiteBasis",
    "MissingValue",
    "NoConvergence",
    "NonPrincipalWarning",
    "SingularMatrix",
    "SingularSeries",
    "SpecmatError",
    "SpectralMatrixFunctions",
    "Spectrum",
    "SpectrumMismatch",
    "SpectrumOptions",
    "build_confluent",
    "canonical_basis_functions",
    "characteristic_polynomial",
    "check_square_matrix",
    "cluster_roots",
    "component_matrices",
    "drazin_power",
    "eigenvalue_index",
    "find_roots",
    "hermite_basis",
    "hermite_interpolate",
    "inverse_confluent",
    "is_diagonalizable",
    "jordan_chevalley",
    "log_branch_principal",
    "matrix_exponential",
    "matrix_log",
    "matrix_power",
    "spectral_projections",
    "spectrum_of",
    "validate_spectrum",
]
