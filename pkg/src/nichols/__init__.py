"""Exact computations with Nichols algebras of Yetter–Drinfeld modules over finite groups."""

from .bosonize import HopfTable, rank12_fixture_check, smash_product, verify_presentation
from .braidops import TensorOperator, matsumoto_action, partial_symmetrizer, quantum_symmetrizer, shuffle_set
from .core import (
    Certificate,
    GradedQuotient,
    HilbertData,
    comultiplication_component,
    golod_shafarevich,
    minimal_relations,
    nichols_dims,
    poincare_check,
    quotient_dims,
)
from .errors import CompatibilityError, InputError, NicholsError, ResourceError, VerdictError
from .groups import FiniteGroup, centralizer, conjugacy_class, cyclic, dihedral, from_permutations, left_coset_reps, symmetric
from .linalg import ExactMatrix, Subspace, kernel, rank, rref
from .pairing import DualPair, PairingConvention, evaluation_pair, radical_cross_check, tensor_form, toba_pairing
from .scalars import CycScalar, root_of_unity
from .ydmodule import (
    BraidedSpace,
    LinearCharacter,
    MatrixRep,
    YDModule,
    braiding,
    braiding_inverse,
    check_yd_axiom,
    diagonal_braiding,
    direct_sum,
    dual_module,
    induce,
)

__version__ = "0.1.0"
