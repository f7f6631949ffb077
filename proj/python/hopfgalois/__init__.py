"""Exact Hopf-Galois module theory at desk scale.

A Galois extension L/K with group G carries, besides the classical
K[G]-module structure, a canonical nonclassical Hopf-Galois structure
whose Hopf algebra is H_lambda = L[lambda(G)]^G. This package exposes the
exact (rational-arithmetic) machinery for working with both at once:
regular subgroup censuses, normal-basis-generator tests, associated
orders of G-stable lattices, freeness certificates, and the transfer of
generators between the two structures.

All scalars cross the boundary as "p/q" strings and all reports as JSON
strings, so results are exact and reproducible byte for byte.
"""

from ._core import (  # noqa: F401
    BudgetError,
    Context,
    FixtureError,
    Group,
    enumerate_regular_subgroups,
    hopf_order_check,
    is_generator_lambda,
    is_generator_rho,
    run_command,
    theorem_main_check,
    theorem_nbg_check,
)

__all__ = [
    "BudgetError",
    "Context",
    "FixtureError",
    "Group",
    "enumerate_regular_subgroups",
    "hopf_order_check",
    "is_generator_lambda",
    "is_generator_rho",
    "run_command",
    "theorem_main_check",
    "theorem_nbg_check",
]
