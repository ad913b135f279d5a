"""Exact Hilbert functions of quadratic quotients and the walk counts bounding them.

The package has five layers. linalg does exact rank over prime fields.
algebra holds squarefree and exterior monomial arithmetic, the canonical
quadratic pairs, and the skew pencil blocks behind them. paths counts
and enumerates the confined lattice walks whose totals a(n, s) bound the
quotient dimensions. hilbert turns ideals into graded matrices and exact
dimension sequences. verify bundles the cross-checks, and cli exposes
everything as a batch tool.
"""

from .algebra import (
    EXTERIOR,
    SQUAREFREE,
    DEGREVLEX_FORWARD,
    DEGREVLEX_REVERSED,
    Form,
    LinearForm,
    Monomial,
    MonomialOrder,
    SkewPair,
    Term,
    canonical_block,
    canonical_pair_even,
    canonical_pair_odd,
    consecutive_pair_form,
    direct_sum,
    form_from_skew,
    form_from_terms,
    form_mul,
    form_power,
    linear_power_squarefree,
    mirrored_pair_odd,
    mul,
    pencil_matrix,
    random_form,
    random_linear_form,
    reversed_pair_form,
    skew_from_form,
)
from .hilbert import (
    BoundsReport,
    GradedDim,
    HilbertFunction,
    IdealSpec,
    Membership,
    QuestionReport,
    canonical_ideal,
    check_bounds,
    contains_monomial,
    exterior_power_pair,
    graded_dim,
    hilbert_function,
    leading_monomials,
    multiplication_matrix,
    question_report,
    random_exterior_pair,
    sqfree_two_squares,
    squarefree_power_squares,
    squarefree_two_squares_ideal,
    verify_hilbert_recursion,
)
from .linalg import (
    DEFAULT_PRIMES,
    MatrixFp,
    MultiPrimeRank,
    PrimeField,
    is_prime,
    pivot_columns,
    rank,
    rank_multi_prime,
)
from .paths import (
    CrossingReport,
    EnumerationCapError,
    LatticePath,
    boundary_crossing_count,
    classify_path,
    closed_form_coefficient,
    count_paths,
    enumerate_paths,
    monomial_to_path,
    path_to_monomial,
    truncate_product,
    verify_path_recursion,
)
from .verify import CheckRecord, run_suite

__version__ = "0.1.0"
