"""Exact symmetry decomposition of hypermatrices and hyperdeterminant vanishing checks."""

from .combinat import (
    Permutation,
    character,
    class_size,
    cycle_type,
    dim_irrep,
    dim_schur,
    partitions,
)
from .dims import codims, dim_W, dim_Wi_standard, dimension_table
from .exactnum import Cyclo, cyclotomic_polynomial, omega_pow, parse_cyclo
from .hypermatrix import (
    GroupAlgebraElement,
    Hypermatrix,
    InvalidInputError,
    act,
    act_algebra,
    diag_eval,
    eval_form,
    slice_form,
)
from .symmetry import (
    MembershipError,
    ResourceLimitError,
    canonical_cycle,
    decompose_full,
    decompose_isotypic,
    decompose_standard,
    eigenprojector,
    isotypic_projector,
    membership,
    project_isotypic,
    subspace_rank,
)
from .vanishing import (
    cayley_det_222,
    chern_top,
    diag_system,
    resultant_n2,
    star_condition,
    witness_n2,
    witness_search_ff,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "character",
    "class_size",
    "cycle_type",
    "dim_irrep",
    "dim_schur",
    "partitions",
    "codims",
    "dim_W",
    "dim_Wi_standard",
    "dimension_table",
    "Cyclo",
    "cyclotomic_polynomial",
    "omega_pow",
    "parse_cyclo",
    "GroupAlgebraElement",
    "Hypermatrix",
    "InvalidInputError",
    "act",
    "act_algebra",
    "diag_eval",
    "eval_form",
    "slice_form",
    "MembershipError",
    "ResourceLimitError",
    "canonical_cycle",
    "decompose_full",
    "decompose_isotypic",
    "decompose_standard",
    "eigenprojector",
    "isotypic_projector",
    "membership",
    "project_isotypic",
    "subspace_rank",
    "cayley_det_222",
    "chern_top",
    "diag_system",
    "resultant_n2",
    "star_condition",
    "witness_n2",
    "witness_search_ff",
]
