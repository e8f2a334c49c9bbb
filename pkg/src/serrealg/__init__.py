"""Exact computations with finite-dimensional algebras given by quivers with relations.

The Nakayama functor and its derived version are the main objects; the
blocks of q(2) supply the worked examples.
"""

from .linalg import Matrix
from .quiver import (PresentedAlgebra, Quiver, Relation, cartan_matrix, load_algebra, truncate,
                     validate)
from .modules import Representation, injective, is_isomorphic, projective, simple
from .functors import (coapprox, find_symmetrizing_form, is_symmetric, nakayama,
                       nakayama_permutation, verify_c_squared_is_nakayama)
from .homological import ChainComplex, derived_nakayama, ext, serre_duality_check
from .q2 import build_q2, classify_weight, ext1_super, synthesize_block, verify_block

__version__ = "0.1.0"

__all__ = [
    "ChainComplex", "Matrix", "PresentedAlgebra", "Quiver", "Relation", "Representation",
    "build_q2", "cartan_matrix", "classify_weight", "coapprox", "derived_nakayama", "ext",
    "ext1_super", "find_symmetrizing_form", "injective", "is_isomorphic", "is_symmetric",
    "load_algebra", "nakayama", "nakayama_permutation", "projective", "serre_duality_check",
    "simple", "synthesize_block", "truncate", "validate", "verify_block",
    "verify_c_squared_is_nakayama",
]
