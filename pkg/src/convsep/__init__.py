"""Separable quantum operators from tensor convolutions on finite abelian groups."""

from .abelian import (
    FiniteAbelianGroup,
    GroupElement,
    MeasurePair,
    conjugate_measures,
    make_group,
)
from .hilbert import (
    HermitianOperator,
    TensorSpaceShape,
    eig_hermitian,
    inner,
    partial_trace,
    partial_transpose,
    projector,
    tensor,
)
from .separability import (
    CapacityError,
    NotPositiveSemidefiniteError,
    SeparabilityVerdict,
    SeparableDecomposition,
    VerdictStatus,
    caratheodory_bound,
    decomposition_from_mappings,
    operator_from_decomposition,
    operator_from_mappings,
    operator_dual_side,
    ppt_check,
    synthesize_mappings,
)
from .transform import (
    ScalarFunction,
    VectorMapping,
    convolve_scalar,
    fourier,
    fourier_scalar,
    inverse_fourier,
    scalarize,
    tensor_convolve,
)

__version__ = "0.1.0"
