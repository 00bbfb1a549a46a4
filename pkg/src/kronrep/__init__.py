"""kronrep: exact computations with generalized Kronecker quiver representations."""

__version__ = "0.1.0"

from .linalg import Matrix, kernel_basis, rank, ratio, rref, solve
from .rep import (DimVector, GroupElement, KroneckerRep, MorphismPair,
                  SubspaceMap, act, direct_sum, dual, euler_form, inflate,
                  inj_i1, proj_p0, proj_p1, rank_at_subspace, restrict,
                  simple1, simple2, std_models, tits_form, validate, zero_rep)
from .functors import (AdjunctionContext, ShiftWitness, adjunction_transport,
                       shift_minus, shift_on_morphism, shift_plus, tau,
                       tau_inverse)
from .homalg import (ExtCocycle, HomBasis, end_analysis, ext1,
                     extension_from_cocycle, extension_triple, hom_basis,
                     hom_dim, hom_vanishes, is_isomorphic, universal_extension)
from .canonical import SplittingType, a_seq, preprojective, split_k2

__all__ = [name for name in dir() if not name.startswith("_")]
