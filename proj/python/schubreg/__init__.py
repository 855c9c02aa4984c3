"""Regularity of Kazhdan-Lusztig varieties.

Permutations are passed as one-line strings, e.g. "7314562" or "3,4,7,2,5,6,1".
"""

from ._core import (
    BudgetExceeded,
    Error,
    FormulaInapplicable,
    InvalidArgument,
    NotBruhatComparable,
    bruhat_leq,
    groth_degree,
    grothendieck,
    h_polynomial,
    is_covexillary,
    kappa,
    kl_generators,
    kl_polynomial,
    length,
    max_reg_scan,
    regularity,
    regularity_formula,
    rrw_filling,
    run_cli,
    vexillary_degree_formula,
)

__all__ = [name for name in dir() if not name.startswith("_")]
