"""Filter-grade engine: exact commutative algebra over polynomial rings.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    EngineError,
    FPModule,
    Ideal,
    ParseError,
    PolyRing,
    Polynomial,
    PreconditionError,
    SearchExhausted,
    annihilator,
    check_bcm,
    check_fmodule,
    check_frs,
    depth_grade,
    direct_sum,
    fgrade_ext,
    fgrade_koszul,
    fgrade_prime_min,
    fgrade_quotient_step,
    ideal_member,
    is_zero,
    krull_dim,
    max_frs,
    minimal_primes_monomial,
    module_dim,
    poly,
    quotient_by_elements,
    radical_member,
    run_script,
)

__all__ = [
    "PolyRing",
    "Polynomial",
    "Ideal",
    "FPModule",
    "poly",
    "direct_sum",
    "is_zero",
    "annihilator",
    "module_dim",
    "krull_dim",
    "ideal_member",
    "radical_member",
    "minimal_primes_monomial",
    "quotient_by_elements",
    "depth_grade",
    "fgrade_ext",
    "fgrade_koszul",
    "fgrade_prime_min",
    "fgrade_quotient_step",
    "check_frs",
    "max_frs",
    "check_fmodule",
    "check_bcm",
    "run_script",
    "PreconditionError",
    "SearchExhausted",
    "EngineError",
    "ParseError",
]
