from src.series.free_energy import assemble_free_energy, check_grading, laurent_to_t
from src.series.tables import (
    CoefficientTable,
    TMonomial,
    extract_t_coefficients,
    parse_t_monomial,
    partitions,
    render_t_monomial,
    specialize,
    specialize_monomial,
    tau_truncation,
)

__all__ = [
    "CoefficientTable",
    "TMonomial",
    "assemble_free_energy",
    "check_grading",
    "extract_t_coefficients",
    "laurent_to_t",
    "parse_t_monomial",
    "partitions",
    "render_t_monomial",
    "specialize",
    "specialize_monomial",
    "tau_truncation",
]
