from src.algebra.laurent import (
    ClearedForm,
    LaurentPoly,
    clear_denominators,
    eval_numeric,
    monomial_inverse,
    reduce_to_laurent,
    reexpand,
)
from src.algebra.polynomial import COEFFICIENT_VARIABLES, MultiPoly, lambda_variables, universe
from src.algebra.rational import (
    LinForm,
    RationalExpr,
    lambda_values,
    ratexpr_add,
    ratexpr_mul,
    ratexpr_scale,
    ratexpr_substitute,
)

__all__ = [
    "COEFFICIENT_VARIABLES",
    "ClearedForm",
    "LaurentPoly",
    "LinForm",
    "MultiPoly",
    "RationalExpr",
    "clear_denominators",
    "eval_numeric",
    "lambda_values",
    "lambda_variables",
    "monomial_inverse",
    "ratexpr_add",
    "ratexpr_mul",
    "ratexpr_scale",
    "ratexpr_substitute",
    "reduce_to_laurent",
    "reexpand",
    "universe",
]
