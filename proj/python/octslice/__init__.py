"""Octonionic slice analysis: octonion arithmetic, slice points, star powers,
the weak square-root example and the verification suites."""

from ._core import (
    DomainError,
    SlicePoint,
    WeakSqrt,
    basis,
    bound_check_mk,
    conj,
    difference_inverse,
    inv,
    left_mult_matrix,
    mul,
    multiplication_table,
    norm,
    run_suites,
    scalar_product,
    star_power_apply,
    verify_not_slice,
)

__all__ = [
    "DomainError",
    "SlicePoint",
    "WeakSqrt",
    "basis",
    "bound_check_mk",
    "conj",
    "difference_inverse",
    "inv",
    "left_mult_matrix",
    "mul",
    "multiplication_table",
    "norm",
    "run_suites",
    "scalar_product",
    "star_power_apply",
    "verify_not_slice",
]
