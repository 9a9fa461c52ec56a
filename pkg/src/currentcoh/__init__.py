"""Exact-arithmetic cohomology of current Lie algebras.

Builds current Lie algebras g (x) S from structure constants, realizes the
alternating-cochain differential as exact rational matrices, computes
cohomology in every degree, and machine-verifies the structure maps relating
the current complex to the base complex (component extraction, unit
restriction, the lifting operator on maps, and the resulting short exact
sequence of cohomology groups).
"""

from .algebras import (
    CommAssocAlgebra,
    DualBasis,
    InvalidStructure,
    LieAlgebra,
    Representation,
    ValidationReport,
    catalog,
    normalize_unit,
    validate_assoc,
    validate_lie,
    validate_representation,
)
from .cochains import Cochain, CochainSpace, differential_matrix, evaluate, verify_complex
from .cohomology import (
    CohomologyGroup,
    CurrentCohomology,
    HypothesisFailed,
    NotACocycle,
    SESReport,
    base_vanishing_subspace,
    cohomology,
    vanishing_classes,
    verify_ses,
)
from .currents import CurrentSetup, current_algebra, current_representation, decompose_components
from .lifts import CochainMap, LiftContext
from .linalg import Quotient, Subspace, kernel_basis, image_basis, quotient_data, rank, sum_and_intersect

__all__ = [
    "CommAssocAlgebra",
    "Cochain",
    "CochainMap",
    "CochainSpace",
    "CohomologyGroup",
    "CurrentCohomology",
    "CurrentSetup",
    "DualBasis",
    "HypothesisFailed",
    "InvalidStructure",
    "LieAlgebra",
    "LiftContext",
    "Quotient",
    "Representation",
    "SESReport",
    "NotACocycle",
    "Subspace",
    "ValidationReport",
    "base_vanishing_subspace",
    "catalog",
    "cohomology",
    "current_algebra",
    "current_representation",
    "decompose_components",
    "differential_matrix",
    "evaluate",
    "image_basis",
    "kernel_basis",
    "normalize_unit",
    "quotient_data",
    "rank",
    "sum_and_intersect",
    "validate_assoc",
    "validate_lie",
    "validate_representation",
    "vanishing_classes",
    "verify_complex",
    "verify_ses",
]
