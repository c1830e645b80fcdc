"""Polynomial reduction of hypergeometric terms and mod p^4 congruence checks."""

from .polycore import (
    NEG,
    Parity,
    Poly,
    PowerBasisPoly,
    compose_linear,
    format_rat,
    from_power_basis,
    parity,
    parse_rat,
    shift,
    to_power_basis,
)
from .diffspace import (
    NoSolution,
    ReductionCertificate,
    SpaceInfo,
    VerificationReport,
    ZeroInput,
    analyze,
    image_of,
    oracle_reduce,
    reduce,
    verify_certificate,
)
from .symred import (
    HALF3_ALT,
    HALF4,
    DivisibilityViolation,
    HypothesisViolation,
    IntegralReduction,
    ShiftViolation,
    SymmetryViolation,
    TermSpec,
    half4_reduce,
    integral_reduce_alt,
    integral_reduce_same,
    sym_reduce,
    tilde_p,
)
from .hyperseries import EulerTable, TermValueStream, euler_numbers, partial_sum, term_eval
from .congruence import (
    CongruenceReport,
    NotPIntegral,
    check_case3,
    check_case4,
    residue,
    scan_integrality,
)

__version__ = "0.1.0"
