"""Exact linear Dirac geometry over Q(i): Lagrangian subspaces of V ⊕ V*, Dirac and
dual-Dirac maps, and the Lie-algebra data behind Dirac group structures."""

from .dirac_core import (
    LinearDirac,
    NotLagrangianError,
    b_transform,
    cotangent,
    decompose_E_eps,
    decompose_pi_U,
    dual_swap,
    from_complex,
    from_E_eps,
    from_pi_U,
    from_poisson,
    from_presymplectic,
    from_symplectic_gc,
    gc_endomorphism,
    is_lagrangian,
    tangent,
)
from .dirac_maps import (
    DiracMapProblem,
    is_dirac_Eeps,
    is_dirac_M,
    is_dirac_M2doubleprime,
    is_dirac_M2prime,
    is_dirac_piU,
    is_dual_dirac,
    is_dual_dirac_Eeps,
    pullback,
    pushforward,
)
from .exact_linalg import Matrix, Scalar, Subspace
from .lie_core import LieAlgebra, builtin

__version__ = "0.1.0"

__all__ = [
    "LinearDirac",
    "NotLagrangianError",
    "b_transform",
    "cotangent",
    "decompose_E_eps",
    "decompose_pi_U",
    "dual_swap",
    "from_complex",
    "from_E_eps",
    "from_pi_U",
    "from_poisson",
    "from_presymplectic",
    "from_symplectic_gc",
    "gc_endomorphism",
    "is_lagrangian",
    "tangent",
    "DiracMapProblem",
    "is_dirac_Eeps",
    "is_dirac_M",
    "is_dirac_M2doubleprime",
    "is_dirac_M2prime",
    "is_dirac_piU",
    "is_dual_dirac",
    "is_dual_dirac_Eeps",
    "pullback",
    "pushforward",
    "Matrix",
    "Scalar",
    "Subspace",
    "LieAlgebra",
    "builtin",
]
