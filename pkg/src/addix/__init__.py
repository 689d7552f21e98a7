"""Least additive index of self-mappings of small finite fields.

The package builds small fields GF(p^n), searches for coset-affine
decompositions F(xi) = M(xi) + a_coset with M a linearized polynomial, and
verifies a family of exact lower-bound inequalities for the squaring-exponent
map and the digit-encoded discrete logarithm on multiplicative subgroups.
"""

from .codim import (
    AffineWitness,
    IndexResult,
    fit_witness,
    least_codimension,
    least_codimension_with_outliers,
    verify_witness,
)
from .field import Field, Subgroup, build_field
from .linalg import Subspace, all_subspaces, enumerate_subspaces, gaussian_binomial, solve
from .linearized import LinearizedPoly, lp_eval, lp_fit_on_subspace, lp_from_matrix, lp_to_matrix
from .maps import PartialMap, dh_map, disclog_map, distinct_values, perturb, table_map
from .counting import (
    class_max,
    count_squares,
    count_squares_in_class,
    count_squares_oracle,
    sqrt_count,
    sqrt_count_max,
)
from .sumsets import (
    ab_sets,
    character,
    degenerate,
    element_set,
    invers_count,
    product_set,
    sum_closure_r,
    sumset,
    weil_check,
)

__version__ = "0.1.0"
