"""skeinsolve: exact arithmetic and solvers for partition-indexed skein
recursions on the solid torus."""

from .ring import (
    A,
    AL,
    DenominatorNotSUnivariateError,
    Exponent,
    G,
    IllegalSubstitutionError,
    LaurentPolynomial,
    ONE,
    Q,
    RationalFunction,
    S,
    SignedMonomial,
    ZERO,
    gcd_s,
    monomial,
    q_int,
    quantum_bracket,
    rf_equal,
    substitute,
)
from .partitions import (
    BOX,
    Cell,
    CellNotInPartitionError,
    EMPTY,
    EmptyPartitionError,
    Partition,
    addable_cells,
    cell_at,
    cells,
    content_polynomial,
    enumerate_partitions,
    hook_polynomial,
    hook_polynomial_qpower_form,
    parity_sum,
    partition_sort_key,
    partitions_through,
    q_hooklength,
    removable_cells,
    verify_branching,
)
from .skein import (
    Generator,
    OperatorExpression,
    SkeinVector,
    UNKNOT_VALUE,
    Z_BRACKET,
    apply_generator,
    apply_p01,
    apply_p10,
    apply_p11,
    apply_unknot,
    p10_eigenvalue,
)
from .solver import (
    CoefficientTemplate,
    Geometry,
    GeometryTag,
    NoSolutionError,
    UnknotBranch,
    c3_template,
    closed_form,
    closed_form_c3,
    closed_form_unknot,
    colored_unknot_invariant,
    geometry,
    solve_from_annihilation,
    solve_monomial_coefficients,
    solve_recursion,
    swap_symmetry_check,
    unknot_template,
    verify_annihilation,
)

__version__ = "0.1.0"
