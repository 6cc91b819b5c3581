"""Exact progression-free bounds over F_q^n and the experiments around them."""

from ._capbound import (
    CombinatorialBoundReport,
    GrowthReport,
    PointSet,
    ProgressionSpec,
    RateReport,
    RationalDegree,
    SearchResult,
    SubspaceReport,
    SupportBoundReport,
    check_growth,
    coeff_row,
    combinatorial_bound_check,
    crq,
    dim_v,
    eg_bound,
    extract_coeff,
    find_valid_triples,
    geometric_sum_filter,
    is_progression_free,
    m_value,
    max_progression_free,
    minimize_crq,
    monomial_basis,
    proposition2_check,
    q3_closed_form,
    random_progression_free_set,
    verify_cap,
)

__all__ = [
    "CombinatorialBoundReport",
    "GrowthReport",
    "PointSet",
    "ProgressionSpec",
    "RateReport",
    "RationalDegree",
    "SearchResult",
    "SubspaceReport",
    "SupportBoundReport",
    "check_growth",
    "coeff_row",
    "combinatorial_bound_check",
    "crq",
    "dim_v",
    "eg_bound",
    "extract_coeff",
    "find_valid_triples",
    "geometric_sum_filter",
    "is_progression_free",
    "m_value",
    "max_progression_free",
    "minimize_crq",
    "monomial_basis",
    "proposition2_check",
    "q3_closed_form",
    "random_progression_free_set",
    "verify_cap",
]

__version__ = "1.0.0"
