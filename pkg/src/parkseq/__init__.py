"""Exact tools for parking sequences of variable-size cars behind a trailer.

Simulate the greedy parking rule, count the sequences by closed form and by
brute force, check the decomposition recurrence, and verify the convolution
identities behind the counting formula with an exact sparse polynomial
engine.
"""

from .core import (
    TRAILER,
    CarSizeVector,
    Collision,
    LotLayout,
    Overflow,
    Parked,
    ParkingOutcome,
    PreferenceVector,
    TrailerLot,
    is_parking_sequence,
    simulate_parking,
)
from .counting import (
    DEFAULT_BUDGET,
    CountReport,
    EnumerationBudgetError,
    IndexSet,
    count_by_enumeration,
    count_by_formula,
    count_no_trailer,
    count_report,
    partitions_into_two,
    subvector,
    verify_recurrence,
)
from .poly import (
    ParameterAssignment,
    SparsePolynomial,
    Variable,
    W,
    Z,
    monomial,
    poly,
    x_var,
    y_var,
)
from .strehl import (
    SYMBOLIC_BUDGET,
    abel_rothe_specialize,
    check_binomial_convolution,
    check_easy_identity,
    check_sheffer_convolution,
    f_as_t_specialization,
    identity_sides,
    identity_value_sides,
    random_identity_check,
    s_poly,
    s_value,
    t_poly,
    t_value,
    x_upper_sum,
    y_lower_sum,
)

__version__ = "0.1.0"

__all__ = [
    "TRAILER",
    "CarSizeVector",
    "Collision",
    "LotLayout",
    "Overflow",
    "Parked",
    "ParkingOutcome",
    "PreferenceVector",
    "TrailerLot",
    "is_parking_sequence",
    "simulate_parking",
    "DEFAULT_BUDGET",
    "CountReport",
    "EnumerationBudgetError",
    "IndexSet",
    "count_by_enumeration",
    "count_by_formula",
    "count_no_trailer",
    "count_report",
    "partitions_into_two",
    "subvector",
    "verify_recurrence",
    "ParameterAssignment",
    "SparsePolynomial",
    "Variable",
    "W",
    "Z",
    "monomial",
    "poly",
    "x_var",
    "y_var",
    "SYMBOLIC_BUDGET",
    "abel_rothe_specialize",
    "check_binomial_convolution",
    "check_easy_identity",
    "check_sheffer_convolution",
    "f_as_t_specialization",
    "identity_sides",
    "identity_value_sides",
    "random_identity_check",
    "s_poly",
    "s_value",
    "t_poly",
    "t_value",
    "x_upper_sum",
    "y_lower_sum",
]
