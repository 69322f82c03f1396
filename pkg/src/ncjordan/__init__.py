"""Exact arithmetic for finite-dimensional noncommutative Jordan superalgebras.

Algebras are stored as structure-constant tensors over the rationals or a
prime field of odd characteristic; every check returns an exact verdict with
a concrete witness on failure.
"""

from __future__ import annotations

from .algebra import GradingError, SuperAlgebra
from .catalog import (build_Dt, build_JVf, build_K3, build_K9, build_K10, build_Mmn, build_Mn,
                      build_P2, build_Q, build_UVf_cross, build_UVf_star, build_Vmodule)
from .constructions import (graded_tensor, mutate, mutation_compose, split_null_extension,
                            symmetrize, unital_hull)
from .field import GF, QQ, FieldError, parse_field
from .formats import FormatError, load, resolve, save
from .identities import (CheckReport, check_associative, check_flexible, check_generic_poisson,
                         check_jordan, check_noncommutative_jordan)
from .linalg import ExactArray, Subspace
from .peirce import (eigenspace_U1, indicator_of, peirce_decompose, peirce_multi,
                     verify_peirce_relations)
from .representations import (SuperBimodule, check_ncj_bimodule, check_via_rpm, decompose,
                              is_abs_irreducible, opposite_module, regular)
from .structure import (derivation_algebra, derivations, inner_derivations, is_simple,
                        kronecker_factor, search_isomorphism, search_isomorphism_small)
from .suite import verify_paper_suite

__all__ = [
    "GF", "QQ", "CheckReport", "ExactArray", "FieldError", "FormatError", "GradingError",
    "Subspace", "SuperAlgebra", "SuperBimodule", "build_Dt", "build_JVf", "build_K3", "build_K9",
    "build_K10", "build_Mmn", "build_Mn", "build_P2", "build_Q", "build_UVf_cross",
    "build_UVf_star", "build_Vmodule", "check_associative", "check_flexible",
    "check_generic_poisson", "check_jordan", "check_ncj_bimodule", "check_noncommutative_jordan",
    "check_via_rpm", "decompose", "derivation_algebra", "derivations", "eigenspace_U1",
    "graded_tensor", "indicator_of", "inner_derivations", "is_abs_irreducible", "is_simple",
    "kronecker_factor", "load", "mutate", "mutation_compose", "opposite_module", "parse_field",
    "peirce_decompose", "peirce_multi", "regular", "resolve", "save", "search_isomorphism",
    "search_isomorphism_small", "split_null_extension", "symmetrize", "unital_hull",
    "verify_paper_suite", "verify_peirce_relations",
]
