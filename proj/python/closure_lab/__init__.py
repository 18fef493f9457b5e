"""Integral closures, reductions and lab experiments for polynomial ideals.

Monomial ideals are lists of exponent tuples, e.g. [(2, 0), (0, 2)] for
(x^2, y^2). General ideals are a list of variable names plus generator
strings such as "x^2 + y^2".
"""

from ._core import (
    CapExceeded,
    ParseError,
    chain_check,
    closure,
    closure_member,
    groebner_basis,
    ideal_contains,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_integral,
    is_integral_element,
    lift_bound,
    lipman_sathaye_check,
    minimalize,
    np_member,
    reduction_number,
    reduction_number_poly,
    run_cli,
    uniform_exponents,
    verify_witness,
    witness_pair,
)

__all__ = [
    "CapExceeded",
    "ParseError",
    "chain_check",
    "closure",
    "closure_member",
    "groebner_basis",
    "ideal_contains",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "is_integral",
    "is_integral_element",
    "lift_bound",
    "lipman_sathaye_check",
    "minimalize",
    "np_member",
    "reduction_number",
    "reduction_number_poly",
    "run_cli",
    "uniform_exponents",
    "verify_witness",
    "witness_pair",
]
