"""Numerical toolkit for finite-dimensional complex algebras.

Structure-constant algebras, spectra through the left regular
representation, polynomial functional calculus, and involutions /
binvolutions, with the usual catalog of matrix, function and convolution
algebras.
"""
from .algebra import (
    Algebra,
    AssociativityReport,
    Element,
    IdentityElement,
    check_associativity,
    find_identity,
    left_regular_rep,
    multiply,
    norm,
    random_elements,
)
from .catalog import (
    SemigroupReport,
    SemigroupTable,
    cyclic_group,
    function_algebra,
    matrix_algebra,
    semigroup_algebra,
    symmetric_group,
    validate_semigroup,
)
from .errors import *  # noqa: F401,F403
from .polycalc import (
    Polynomial,
    RootList,
    eval_element,
    eval_scalar,
    invertible_via_roots,
    poly_add,
    poly_compose,
    poly_mul,
    poly_roots,
    spectral_mapping_check,
)
from .spectral import Spectrum, hausdorff, invert, is_invertible, resolvent_member, spectrum
from .star import (
    HermitianForm,
    StarStructure,
    adjoint_from_form,
    apply_star,
    check_star_isometry,
    classify_star,
    conj_star,
    conj_transpose_star,
    entrywise_conj_binvolution,
    generated_star_subalgebra,
    group_involution,
    is_self_adjoint,
    selfadjoint_parts,
)

__version__ = "0.1.0"
