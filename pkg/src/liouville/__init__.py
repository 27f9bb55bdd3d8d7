"""Classification toolkit for singularities of integrable Hamiltonian systems.

Numerical side: polynomial Poisson manifolds, moment maps, transversal
linearization and Williamson-type classification of singular points.
Combinatorial side: atoms, direct-product models, finite group quotients,
fundamental-group coverings, monodromy and canonical-model decomposition.
"""

from .errors import (
    AmbiguousEigenvalueError,
    DegenerateFamilyError,
    DimensionMismatchError,
    InputError,
    InvariantViolationError,
    LiouvilleError,
    NearDegenerateError,
    NonGenericLeafPointError,
    OffLeafError,
    RegularPointError,
    ScopeError,
)
from .symplectic import (
    CommutingFamily,
    ComponentSymmetry,
    HamiltonianMatrix,
    QuadraticForm,
    SymplecticSpace,
    WilliamsonType,
    component_symmetry,
    hamiltonian_matrix,
    is_cartan,
    local_stratification,
    normalizing_transform,
    poisson_bracket,
    williamson_type,
)

__all__ = [
    "AmbiguousEigenvalueError",
    "CommutingFamily",
    "ComponentSymmetry",
    "DegenerateFamilyError",
    "DimensionMismatchError",
    "HamiltonianMatrix",
    "InputError",
    "InvariantViolationError",
    "LiouvilleError",
    "NearDegenerateError",
    "NonGenericLeafPointError",
    "OffLeafError",
    "QuadraticForm",
    "RegularPointError",
    "ScopeError",
    "SymplecticSpace",
    "WilliamsonType",
    "component_symmetry",
    "hamiltonian_matrix",
    "is_cartan",
    "local_stratification",
    "normalizing_transform",
    "poisson_bracket",
    "williamson_type",
]

__version__ = "0.1.0"
